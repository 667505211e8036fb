#ifndef RULED_ERRORS_HPP
#define RULED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ruled {

// Base class for every error raised by the engine.  `kind()` returns a stable
// machine-readable tag; the CLI maps ScenarioError to exit code 1 and every
// other PreconditionError to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Malformed or self-contradictory scenario input (exit code 1).
struct ScenarioError : Error {
    explicit ScenarioError(const std::string& msg) : Error("ScenarioError", msg) {}
};

// Violated operation precondition (exit code 2).
struct PreconditionError : Error {
    using Error::Error;
};

struct InconsistentTable : PreconditionError {
    explicit InconsistentTable(const std::string& msg) : PreconditionError("InconsistentTable", msg) {}
};
struct InvalidPosition : PreconditionError {
    explicit InvalidPosition(const std::string& msg) : PreconditionError("InvalidPosition", msg) {}
};
struct SegreBoundViolation : PreconditionError {
    explicit SegreBoundViolation(const std::string& msg) : PreconditionError("SegreBoundViolation", msg) {}
};
struct SingularCenter : PreconditionError {
    explicit SingularCenter(const std::string& msg) : PreconditionError("SingularCenter", msg) {}
};
struct NotBasePointFree : PreconditionError {
    explicit NotBasePointFree(const std::string& msg) : PreconditionError("NotBasePointFree", msg) {}
};
struct MalformedCycle : PreconditionError {
    explicit MalformedCycle(const std::string& msg) : PreconditionError("MalformedCycle", msg) {}
};
struct AliasRequired : PreconditionError {
    explicit AliasRequired(const std::string& msg) : PreconditionError("AliasRequired", msg) {}
};
struct UnresolvableChain : PreconditionError {
    explicit UnresolvableChain(const std::string& msg) : PreconditionError("UnresolvableChain", msg) {}
};

} // namespace ruled

#endif
