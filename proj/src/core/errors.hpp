#ifndef PUZZLEGEN_CORE_ERRORS_HPP
#define PUZZLEGEN_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pzg {

// Coarse classes map onto CLI exit codes and C API status values.
enum class ErrorClass {
    Schema,            // malformed spec/config documents
    ExprSyntax,        // expression parse failure
    Constraint,        // spec-level constraint violated (e.g. type+formula)
    Validation,        // reproduction/grading mismatch, shape mismatch
    Eval,              // unbound name, type mismatch, arity, division by zero
    Sampling,          // empty domain, cyclic dependency, selection exhausted
    Generation,        // instance/batch retry budget spent
    Solver,            // backend unavailable, timeout, unbounded, infeasible
    Render,            // unresolved placeholder, term leakage, missing wrapper
    Io,                // file system and serialization failures
};

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string code, const std::string& message)
        : std::runtime_error(message), cls_(cls), code_(std::move(code)) {}

    ErrorClass cls() const { return cls_; }
    const std::string& code() const { return code_; }

private:
    ErrorClass cls_;
    std::string code_;  // machine-readable tag, e.g. "UnboundName"
};

[[noreturn]] inline void raise(ErrorClass cls, const std::string& code,
                               const std::string& message) {
    throw Error(cls, code, message);
}

}  // namespace pzg

#endif
