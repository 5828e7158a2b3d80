#include "hodgepoly/error.hpp"

namespace hodge {

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::GenusOutOfRange: return "GenusOutOfRange";
    case ErrorCode::OnWall: return "OnWall";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::EvenDegree: return "EvenDegree";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::WallAtSigmaM: return "WallAtSigmaM";
    case ErrorCode::DegeneratePoles: return "DegeneratePoles";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::ZeroAtPole: return "ZeroAtPole";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_internal_error(ErrorCode code) noexcept
{
    return code == ErrorCode::NotDivisible || code == ErrorCode::Internal;
}

} // namespace hodge
