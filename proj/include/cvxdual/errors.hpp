#pragma once

#include <stdexcept>
#include <string>

namespace cvxdual {

/// Caller violated a precondition (bad argument, space mismatch, invalid config).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation asked for a value outside the functional's effective domain.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No finite value was found anywhere the operation looked.
class degenerate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A monotone sequence failed its structural invariants while being consumed.
class sequence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A duality certificate could not be produced; carries a diagnostic.
class certification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration file problem; names the offending field.
class config_error : public std::runtime_error {
public:
    config_error(std::string field, const std::string& message)
        : std::runtime_error("config field '" + field + "': " + message),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace cvxdual
