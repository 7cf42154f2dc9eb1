#include "core/value.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

namespace pzg {

Value Value::ofList(std::vector<Value> elems) {
    return Value(std::make_shared<const std::vector<Value>>(std::move(elems)));
}

Value Value::ofTuple(std::vector<Value> elems) {
    return Value(Tup{std::make_shared<const std::vector<Value>>(std::move(elems))});
}

Value::Kind Value::kind() const {
    switch (data_.index()) {
        case 0: return Kind::Int;
        case 1: return Kind::Float;
        case 2: return Kind::Bool;
        case 3: return Kind::Text;
        case 4: return Kind::List;
        case 5: return Kind::Tuple;
        case 6: return Kind::Term;
        case 7: return Kind::Model;
        case 8: return Kind::Entity;
        case 9: return Kind::Group;
        default: return Kind::Callable;
    }
}

const char* Value::kindName(Kind k) {
    switch (k) {
        case Kind::Int: return "int";
        case Kind::Float: return "float";
        case Kind::Bool: return "bool";
        case Kind::Text: return "text";
        case Kind::List: return "list";
        case Kind::Tuple: return "tuple";
        case Kind::Term: return "term";
        case Kind::Model: return "model";
        case Kind::Entity: return "entity";
        case Kind::Group: return "symbol-group";
        case Kind::Callable: return "callable";
    }
    return "?";
}

namespace {
[[noreturn]] void kindError(const char* want, const Value& v) {
    raise(ErrorClass::Eval, "TypeMismatch",
          std::string("expected ") + want + ", got " + v.kindName());
}
}  // namespace

std::int64_t Value::asInt() const {
    if (auto* p = std::get_if<std::int64_t>(&data_)) return *p;
    if (auto* b = std::get_if<bool>(&data_)) return *b ? 1 : 0;
    kindError("int", *this);
}

double Value::asFloat() const {
    if (auto* p = std::get_if<double>(&data_)) return *p;
    kindError("float", *this);
}

bool Value::asBool() const {
    if (auto* p = std::get_if<bool>(&data_)) return *p;
    kindError("bool", *this);
}

const std::string& Value::asText() const {
    if (auto* p = std::get_if<Text>(&data_)) return p->s;
    kindError("text", *this);
}

const std::vector<Value>& Value::asSequence() const {
    if (auto* p = std::get_if<ListPtr>(&data_)) return **p;
    if (auto* t = std::get_if<Tup>(&data_)) return *t->elems;
    kindError("list", *this);
}

TermPtr Value::asTerm() const {
    if (auto* p = std::get_if<TermPtr>(&data_)) return *p;
    kindError("term", *this);
}

ModelPtr Value::asModel() const {
    if (auto* p = std::get_if<ModelPtr>(&data_)) return *p;
    kindError("model", *this);
}

EntityPtr Value::asEntity() const {
    if (auto* p = std::get_if<EntityPtr>(&data_)) return *p;
    kindError("entity", *this);
}

GroupPtr Value::asGroup() const {
    if (auto* p = std::get_if<GroupPtr>(&data_)) return *p;
    kindError("symbol-group", *this);
}

CallablePtr Value::asCallable() const {
    if (auto* p = std::get_if<CallablePtr>(&data_)) return *p;
    kindError("callable", *this);
}

double Value::numeric() const {
    switch (kind()) {
        case Kind::Int: return static_cast<double>(std::get<std::int64_t>(data_));
        case Kind::Float: return std::get<double>(data_);
        case Kind::Bool: return std::get<bool>(data_) ? 1.0 : 0.0;
        default: kindError("number", *this);
    }
}

std::int64_t Value::integral() const {
    switch (kind()) {
        case Kind::Int: return std::get<std::int64_t>(data_);
        case Kind::Bool: return std::get<bool>(data_) ? 1 : 0;
        default: kindError("integer", *this);
    }
}

bool Value::equals(const Value& other) const {
    if (isNumeric() && other.isNumeric()) {
        if (isIntegral() && other.isIntegral()) return integral() == other.integral();
        return numeric() == other.numeric();
    }
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case Kind::Text: return asText() == other.asText();
        case Kind::List:
        case Kind::Tuple: {
            const auto& a = asSequence();
            const auto& b = other.asSequence();
            if (a.size() != b.size()) return false;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (!a[i].equals(b[i])) return false;
            return true;
        }
        case Kind::Term: return asTerm() == other.asTerm();
        case Kind::Model: return asModel() == other.asModel();
        case Kind::Entity: {
            auto ea = asEntity();
            auto eb = other.asEntity();
            return ea->group == eb->group && ea->key_index == eb->key_index;
        }
        case Kind::Group: return asGroup() == other.asGroup();
        case Kind::Callable: return asCallable() == other.asCallable();
        default: return false;  // unreachable
    }
}

namespace {
int kindRank(Value::Kind k) {
    switch (k) {
        case Value::Kind::Bool:
        case Value::Kind::Int:
        case Value::Kind::Float: return 0;
        case Value::Kind::Text: return 1;
        case Value::Kind::List: return 2;
        case Value::Kind::Tuple: return 3;
        default: return 4;
    }
}
}  // namespace

int Value::compare(const Value& other) const {
    int ra = kindRank(kind());
    int rb = kindRank(other.kind());
    if (ra != rb) return ra < rb ? -1 : 1;
    if (ra == 0) {
        if (isIntegral() && other.isIntegral()) {
            auto a = integral();
            auto b = other.integral();
            return a < b ? -1 : (a > b ? 1 : 0);
        }
        double a = numeric();
        double b = other.numeric();
        return a < b ? -1 : (a > b ? 1 : 0);
    }
    if (ra == 1) return asText().compare(other.asText()) < 0 ? -1
                        : (asText() == other.asText() ? 0 : 1);
    if (ra == 2 || ra == 3) {
        const auto& a = asSequence();
        const auto& b = other.asSequence();
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = a[i].compare(b[i]);
            if (c != 0) return c;
        }
        return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
    }
    // Handles have no meaningful order; compare by pointer identity for stability.
    auto pa = reinterpret_cast<std::uintptr_t>(this);
    auto pb = reinterpret_cast<std::uintptr_t>(&other);
    return pa < pb ? -1 : (pa > pb ? 1 : 0);
}

std::string Value::formatInt(std::int64_t v) { return std::to_string(v); }

std::string Value::formatFloat(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
        return std::to_string(static_cast<std::int64_t>(v));
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string Value::render() const {
    switch (kind()) {
        case Kind::Int: return formatInt(asInt());
        case Kind::Float: return formatFloat(asFloat());
        case Kind::Bool: return asBool() ? "True" : "False";
        case Kind::Text: return asText();
        case Kind::List:
        case Kind::Tuple: {
            std::string out;
            const auto& elems = asSequence();
            for (std::size_t i = 0; i < elems.size(); ++i) {
                if (i) out += ", ";
                out += elems[i].render();
            }
            return out;
        }
        default:
            raise(ErrorClass::Render, "RenderError",
                  std::string("cannot render a ") + kindName() + " value as text");
    }
}

}  // namespace pzg
