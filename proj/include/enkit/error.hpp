#pragma once

#include <stdexcept>
#include <string>

namespace enkit {

// Numeric values are mirrored by enkit_status in enkit.h.
enum class ErrorCode : int {
    InvalidArgument = 1,
    Parse = 2,
    IndexRange = 3,
    Degree = 4,
    VariableCap = 5,
    Materialization = 6,
    Checkpoint = 7,
    Io = 8,
    Internal = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace enkit
