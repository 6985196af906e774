#pragma once

#include <stdexcept>
#include <string>

namespace pmpack {

enum class ErrorKind {
    LoopEdge,
    DuplicateEdge,
    IndexOutOfRange,
    OddOrder,
    BadOrder,
    InfeasibleDegree,
    HasPerfectMatching,
    ResidualHasPerfectMatching,
    PreconditionViolated,
    SearchExhausted,
    InternalContradiction,
    OddCycle,
    CapExceeded,
    Cancelled,
    ClaimViolated,
    ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when a structural fact the underlying theory guarantees fails to
/// hold at runtime. Carries the identifier of the violated claim.
class ClaimViolation : public Error {
public:
    ClaimViolation(const std::string& claim_id, const std::string& message)
        : Error(ErrorKind::ClaimViolated, "[" + claim_id + "] " + message), claim_(claim_id) {}

    const std::string& claim() const { return claim_; }

private:
    std::string claim_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require(bool cond, ErrorKind kind, const std::string& message) {
    if (!cond) fail(kind, message);
}

} // namespace pmpack
