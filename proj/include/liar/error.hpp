#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liar {

enum class ErrorKind {
    NotSingleCycle,
    OutOfRange,
    BoundExceeded,
    NotParadoxical,
    ZeroProbabilityMeasurement,
    SupportOutsideSubspace,
    UnsupportedDimension,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library surfaces as a liar::Error carrying its kind,
// so callers (and the CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace liar
