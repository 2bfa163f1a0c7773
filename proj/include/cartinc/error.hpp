#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cartinc {

enum class Err {
    DivisionByZero,
    ParseError,
    DegenerateInput,
    RootAtEndpoint,
    RTooLarge,
    DegenerateLine,
    ComplexityGuard,
    KTooSmall,
    ZeroInA,
    DegenerateSlope,
    DuplicatePoint,
    ZeroPolynomial,
    EmptyRange,
    InvalidArgument,
    IoError,
};

const char* err_name(Err code);

/// Single exception type for the whole workbench; `code()` identifies the
/// condition, `offset()` carries a byte offset for parse errors.
class WorkbenchError : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    WorkbenchError(Err code, const std::string& msg, std::size_t offset = npos)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg),
          code_(code),
          offset_(offset) {}

    Err code() const noexcept { return code_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    Err code_;
    std::size_t offset_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg,
                              std::size_t offset = WorkbenchError::npos) {
    throw WorkbenchError(code, msg, offset);
}

}  // namespace cartinc
