#ifndef WGM_ERRORS_HPP
#define WGM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wgm
{
// Invalid argument to an operation (non-positive rate, out-of-range angle, ...).
class ArgumentError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Physically impossible request: wavelength outside a dispersion law,
// core index above prism index, ...
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Iterative solve failed to converge.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent scenario / material file.
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail
{
inline void require_positive(double value, const char* what)
{
    if (!(value > 0.0))
        throw ArgumentError(std::string(what) + " must be positive, got " + std::to_string(value));
}

inline void require_non_negative(double value, const char* what)
{
    if (!(value >= 0.0))
        throw ArgumentError(std::string(what) + " must be non-negative, got " + std::to_string(value));
}
} // namespace detail
} // namespace wgm

#endif
