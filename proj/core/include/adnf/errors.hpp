#ifndef ADNF_ERRORS_HPP
#define ADNF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adnf {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid hyperparameter or algorithm configuration (m <= 1, eps <= 0, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Mismatched vector/matrix dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Data that violates an operation's preconditions: too few samples,
// degenerate radius, non-finite values, undefined metric.
class DataError : public Error {
public:
    using Error::Error;
};

// Malformed input files (CSV/JSON), unsupported snapshot versions.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace adnf

#endif  // ADNF_ERRORS_HPP
