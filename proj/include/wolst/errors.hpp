#pragma once

#include <stdexcept>

namespace wolst {

// Rational whose denominator shares a factor with the modulus prime.
struct NonInvertibleDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

// Residue (or scalar) with no inverse in the ring at hand.
struct NonInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

// Coefficient index at or beyond the truncation order.
struct TruncationExceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Arithmetic across distinct rings (different moduli, different coefficient rings).
struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bernoulli table does not reach the requested index.
struct TableExhausted : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Scan checkpoint unreadable, unparseable or internally inconsistent.
struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wolst
