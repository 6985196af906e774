#include "pmpack/errors.hpp"

namespace pmpack {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::OddOrder: return "OddOrder";
        case ErrorKind::BadOrder: return "BadOrder";
        case ErrorKind::InfeasibleDegree: return "InfeasibleDegree";
        case ErrorKind::HasPerfectMatching: return "HasPerfectMatching";
        case ErrorKind::ResidualHasPerfectMatching: return "ResidualHasPerfectMatching";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::InternalContradiction: return "InternalContradiction";
        case ErrorKind::OddCycle: return "OddCycle";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::Cancelled: return "Cancelled";
        case ErrorKind::ClaimViolated: return "ClaimViolated";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace pmpack
