#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wolst/rational.hpp"

namespace wolst {

/// p-adic valuation of a rational; the valuation of 0 is the distinguished
/// infinite value, which compares >= every finite bound.
class PAdicVal {
public:
    static PAdicVal finite(std::uint64_t p, long v) { return PAdicVal(p, v); }
    static PAdicVal infinity(std::uint64_t p) { return PAdicVal(p, std::nullopt); }

    std::uint64_t prime() const { return prime_; }
    bool is_infinite() const { return !value_.has_value(); }
    long value() const;
    bool at_least(long bound) const { return is_infinite() || *value_ >= bound; }

    std::string str() const;

    friend bool operator==(const PAdicVal& a, const PAdicVal& b) {
        return a.prime_ == b.prime_ && a.value_ == b.value_;
    }
    friend bool operator!=(const PAdicVal& a, const PAdicVal& b) { return !(a == b); }

private:
    PAdicVal(std::uint64_t p, std::optional<long> v) : prime_(p), value_(v) {}

    std::uint64_t prime_;
    std::optional<long> value_;
};

// Multiplicity of p in a nonzero integer.
long vp_int(const BigInt& n, std::uint64_t p);

// v_p(x) = v_p(numerator) - v_p(denominator); infinite for x = 0.
// Throws std::invalid_argument when p is not prime.
PAdicVal vp(const BigRational& x, std::uint64_t p);

} // namespace wolst
