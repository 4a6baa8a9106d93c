#ifndef DSEP_ERROR_HPP
#define DSEP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsep
{

enum class ErrorCode
{
    ParseError,
    SymmetryViolation,
    DuplicateNeighbor,
    SelfLoop,
    Disconnected,
    NoSuchEdge,
    EdgeExists,
    BadAnchor,
    NotAFace,
    NonIntegerGenus,
    DisconnectedDual,
    NotACutface,
    CircuitCount,
    HamiltonianFaceMissing,
    InvalidCurrentGraph,
    PostconditionFail,
    NoValidReinsertion,
    NoValidMerge,
    NoPattern,
    NTooSmall,
    CTooSmall,
    Io,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch(code)
    {
        case ErrorCode::ParseError:             return "PARSE_ERROR";
        case ErrorCode::SymmetryViolation:      return "SYMMETRY_VIOLATION";
        case ErrorCode::DuplicateNeighbor:      return "DUPLICATE_NEIGHBOR";
        case ErrorCode::SelfLoop:               return "SELF_LOOP";
        case ErrorCode::Disconnected:           return "DISCONNECTED";
        case ErrorCode::NoSuchEdge:             return "NO_SUCH_EDGE";
        case ErrorCode::EdgeExists:             return "EDGE_EXISTS";
        case ErrorCode::BadAnchor:              return "BAD_ANCHOR";
        case ErrorCode::NotAFace:               return "NOT_A_FACE";
        case ErrorCode::NonIntegerGenus:        return "NON_INTEGER_GENUS";
        case ErrorCode::DisconnectedDual:       return "DISCONNECTED_DUAL";
        case ErrorCode::NotACutface:            return "NOT_A_CUTFACE";
        case ErrorCode::CircuitCount:           return "CIRCUIT_COUNT";
        case ErrorCode::HamiltonianFaceMissing: return "HAMILTONIAN_FACE_MISSING";
        case ErrorCode::InvalidCurrentGraph:    return "INVALID_CURRENT_GRAPH";
        case ErrorCode::PostconditionFail:      return "POSTCONDITION_FAIL";
        case ErrorCode::NoValidReinsertion:     return "NO_VALID_REINSERTION";
        case ErrorCode::NoValidMerge:           return "NO_VALID_MERGE";
        case ErrorCode::NoPattern:              return "NO_PATTERN";
        case ErrorCode::NTooSmall:              return "N_TOO_SMALL";
        case ErrorCode::CTooSmall:              return "C_TOO_SMALL";
        case ErrorCode::Io:                     return "IO_ERROR";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {}

    ErrorCode code() const noexcept {return code_;}

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

inline void ensure(bool cond, ErrorCode code, const std::string& what)
{
    if(!cond) {fail(code, what);}
}

} // dsep
#endif // DSEP_ERROR_HPP
