#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace wolst {

using BigInt = mpz_class;

BigInt factorial(std::uint64_t n);
BigInt pow_int(const BigInt& base, std::uint64_t exp);

/**
 * Exact rational number, always kept in canonical form:
 * gcd(|numerator|, denominator) = 1 and denominator > 0; zero is 0/1.
 *
 * Every operation re-normalizes eagerly, so valuation and equality can be
 * read straight off the stored representation.
 */
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(long n) : value_(n) {} // implicit: small integer literals mix into expressions
    explicit BigRational(const BigInt& n) : value_(n) {}
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    BigRational abs() const;

    std::string str() const { return value_.get_str(); }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o);
    BigRational operator-() const;

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.value_ != b.value_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.value_ >= b.value_; }

private:
    explicit BigRational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

} // namespace wolst
