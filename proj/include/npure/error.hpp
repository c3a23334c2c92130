#pragma once

/**
 * @file error.hpp
 * @brief Exception types raised by the library.
 *
 * Theorem failures are never exceptions; they are reported as verdict data.
 * Exceptions signal malformed input, exceeded resource caps, or internal
 * inconsistencies.
 */

#include <stdexcept>
#include <string>

namespace npure {

/// Base of every exception thrown by npure.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed ring spec, bad generator index, unreadable table file.
class SpecError : public Error {
public:
    using Error::Error;
};

/// Table input (or a homomorphism table) violates an axiom.
class AxiomError : public Error {
public:
    using Error::Error;
};

/// A configured size cap was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A computation contradicted a proven statement. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace npure
