#pragma once

#include <stdexcept>
#include <string>

namespace algred {

// Error taxonomy mirrored by the CLI exit codes: parse/validation -> 2,
// property failures -> 3, anything else -> 1.
class Error : public std::runtime_error {
public:
    enum class Kind { Parse, Validation, Property, Internal };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline Error parse_error(std::string message) {
    return Error(Error::Kind::Parse, std::move(message));
}

inline Error validation_error(std::string message) {
    return Error(Error::Kind::Validation, std::move(message));
}

inline Error internal_error(std::string message) {
    return Error(Error::Kind::Internal, std::move(message));
}

}  // namespace algred
