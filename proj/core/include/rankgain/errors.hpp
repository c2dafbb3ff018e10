#ifndef RANKGAIN_ERRORS_HPP
#define RANKGAIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rankgain {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (wrong degree, non-prime modulus, ...).
class invalid_input : public error {
public:
    using error::error;
};

/// Reduction modulo a prime hit a denominator divisible by that prime,
/// or the curve degenerates modulo the prime.
class bad_reduction : public error {
public:
    using error::error;
};

/// A geometric configuration without a well-defined answer
/// (coincident points, undefined or vertical lines, ...).
class degenerate_error : public error {
public:
    using error::error;
};

/// A family parameter outside the admissible locus (zero, square where a
/// non-square is required, ...).
class invalid_param : public error {
public:
    using error::error;
};

/// A family parameter on the branch locus (vanishing discriminant).
class ramified_param : public error {
public:
    using error::error;
};

/// An enumeration budget was exceeded or not enough usable primes exist.
class resource_error : public error {
public:
    using error::error;
};

/// A bounded search ran out of candidates.
class not_found_error : public error {
public:
    using error::error;
};

/// A constraint system admits no solution at some prime.
class unsatisfiable_error : public error {
public:
    using error::error;
};

/// The cubic fast-path direction has not been calibrated yet.
class not_calibrated : public error {
public:
    using error::error;
};

/// A defining polynomial turned out to be reducible over the base field.
class not_irreducible : public error {
public:
    using error::error;
};

/// Fewer conjugate roots than required exist in the constructed ring.
class not_galois : public error {
public:
    using error::error;
};

/// The constructed automorphism has order smaller than required.
class not_cyclic : public error {
public:
    using error::error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public error {
public:
    using error::error;
};

} // namespace rankgain

#endif
