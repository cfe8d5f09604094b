#pragma once

#include <stdexcept>
#include <string>

namespace qseq {

/// Malformed or out-of-range input (bad index, odd period where even is required, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input failed a mathematical validation (not prime, not a primitive root, bad symbol).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters fall outside the family a construction is defined for.
class AdmissibilityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotRepresentable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A closed-form table disagrees with brute-force counting under every sign choice.
class ConventionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An internal consistency assertion failed. Never expected to fire.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qseq
