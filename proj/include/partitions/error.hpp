#pragma once

#include <stdexcept>
#include <string>

namespace partitions {

// Every failure raised by the library carries the module it came from and a
// kind that the command-line frontend maps onto an exit code.
enum class ErrorKind {
    Domain,
    OutOfRange,
    CapExceeded,
    UnsupportedFamily,
    EmptyInput,
    DegenerateSaddle,
    PrecisionExhausted,
    NonConvergence,
    RankDeficient,
    Usage,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what)
        , kind_(kind)
        , module_(std::move(module))
    {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& module() const noexcept { return module_; }

private:
    ErrorKind kind_;
    std::string module_;
};

[[noreturn]] inline void fail(ErrorKind kind, const char* module, const std::string& what)
{
    throw Error(kind, module, what);
}

inline const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DegenerateSaddle: return "DegenerateSaddle";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::Usage: return "UsageError";
    }
    return "Error";
}

} // namespace partitions
