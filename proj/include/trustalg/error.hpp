#pragma once

#include <stdexcept>
#include <string>

namespace trustalg {

/// Base of every error the library throws.
class TrustError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input was well formed but violates a domain rule (normalization, caps,
/// registry membership, ...).
class DomainError : public TrustError {
public:
    using TrustError::TrustError;
};

/// A document could not be parsed or does not match its schema.
class ParseError : public TrustError {
public:
    using TrustError::TrustError;
};

/// A file could not be read or written.
class IoError : public TrustError {
public:
    using TrustError::TrustError;
};

} // namespace trustalg
