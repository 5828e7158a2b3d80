#ifndef HODGEPOLY_ERROR_HPP
#define HODGEPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hodge {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    GenusOutOfRange,
    OnWall,
    EmptyFamily,
    EvenDegree,
    RankMismatch,
    WallAtSigmaM,
    DegeneratePoles,
    NotDivisible,
    OrderExceeded,
    NotMonomial,
    ZeroAtPole,
    Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

// True for errors that indicate a bug or a broken identity rather than bad
// caller input.
bool is_internal_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hodge

#endif
