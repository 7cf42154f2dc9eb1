#ifndef PUZZLEGEN_CORE_VALUE_HPP
#define PUZZLEGEN_CORE_VALUE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "core/errors.hpp"

namespace pzg {

class Term;
struct Model;
struct SymbolGroup;
struct Callable;

using TermPtr = std::shared_ptr<const Term>;
using ModelPtr = std::shared_ptr<const Model>;
using GroupPtr = std::shared_ptr<const SymbolGroup>;
using CallablePtr = std::shared_ptr<const Callable>;

// Reference to one key of an attributed symbol group (e.g. wine_s[w]).
struct EntityRef {
    GroupPtr group;
    std::size_t key_index = 0;
};
using EntityPtr = std::shared_ptr<const EntityRef>;

// Runtime value of the expression mini-language. Immutable once built.
class Value {
public:
    enum class Kind { Int, Float, Bool, Text, List, Tuple, Term, Model, Entity, Group, Callable };

    using ListPtr = std::shared_ptr<const std::vector<Value>>;

    Value() : data_(std::int64_t{0}) {}

    static Value ofInt(std::int64_t v) { return Value(v); }
    static Value ofFloat(double v) { return Value(v); }
    static Value ofBool(bool v) { return Value(v); }
    static Value ofText(std::string v) { return Value(Text{std::move(v)}); }
    static Value ofList(std::vector<Value> elems);
    static Value ofTuple(std::vector<Value> elems);
    static Value ofTerm(TermPtr t) { return Value(std::move(t)); }
    static Value ofModel(ModelPtr m) { return Value(std::move(m)); }
    static Value ofEntity(EntityPtr e) { return Value(std::move(e)); }
    static Value ofGroup(GroupPtr g) { return Value(std::move(g)); }
    static Value ofCallable(CallablePtr c) { return Value(std::move(c)); }

    Kind kind() const;
    static const char* kindName(Kind k);
    const char* kindName() const { return kindName(kind()); }

    bool isInt() const { return kind() == Kind::Int; }
    bool isFloat() const { return kind() == Kind::Float; }
    bool isBool() const { return kind() == Kind::Bool; }
    bool isText() const { return kind() == Kind::Text; }
    bool isList() const { return kind() == Kind::List; }
    bool isTuple() const { return kind() == Kind::Tuple; }
    bool isSequence() const { return isList() || isTuple(); }
    bool isTerm() const { return kind() == Kind::Term; }
    bool isModel() const { return kind() == Kind::Model; }
    bool isEntity() const { return kind() == Kind::Entity; }
    bool isGroup() const { return kind() == Kind::Group; }
    bool isCallable() const { return kind() == Kind::Callable; }
    bool isNumeric() const { return isInt() || isFloat() || isBool(); }

    std::int64_t asInt() const;
    double asFloat() const;
    bool asBool() const;
    const std::string& asText() const;
    const std::vector<Value>& asSequence() const;
    TermPtr asTerm() const;
    ModelPtr asModel() const;
    EntityPtr asEntity() const;
    GroupPtr asGroup() const;
    CallablePtr asCallable() const;

    // Numeric view with bool -> 0/1 promotion; error for non-numeric kinds.
    double numeric() const;
    bool isIntegral() const { return isInt() || isBool(); }
    std::int64_t integral() const;

    bool equals(const Value& other) const;
    // Total order across kinds; used by canonical sorting. Numeric kinds
    // compare by magnitude, everything else lexicographically within kind.
    int compare(const Value& other) const;

    // Text rendering for templates and answers. Solver-side values
    // (terms, models, groups, entities) refuse to render.
    std::string render() const;

    static std::string formatInt(std::int64_t v);
    static std::string formatFloat(double v);  // shortest round-trip, no trailing zeros

private:
    struct Text { std::string s; };
    struct Tup { ListPtr elems; };

    explicit Value(std::int64_t v) : data_(v) {}
    explicit Value(double v) : data_(v) {}
    explicit Value(bool v) : data_(v) {}
    explicit Value(Text t) : data_(std::move(t)) {}
    explicit Value(ListPtr l) : data_(std::move(l)) {}
    explicit Value(Tup t) : data_(std::move(t)) {}
    explicit Value(TermPtr t) : data_(std::move(t)) {}
    explicit Value(ModelPtr m) : data_(std::move(m)) {}
    explicit Value(EntityPtr e) : data_(std::move(e)) {}
    explicit Value(GroupPtr g) : data_(std::move(g)) {}
    explicit Value(CallablePtr c) : data_(std::move(c)) {}

    std::variant<std::int64_t, double, bool, Text, ListPtr, Tup, TermPtr, ModelPtr,
                 EntityPtr, GroupPtr, CallablePtr>
        data_;
};

}  // namespace pzg

#endif
