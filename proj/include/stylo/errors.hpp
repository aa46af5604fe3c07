#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad CSV rows, unknown columns,
/// out-of-domain labels, degenerate corpora). CLI exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters or misuse of an operation (bad fractions, n = 0
/// n-grams, out-of-bounds sample sizes). CLI exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace stylo
