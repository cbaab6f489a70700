#pragma once

#include <cstdint>
#include <string>

#include "wolst/rational.hpp"

namespace wolst {

/**
 * Residue in Z/p^e with 1 <= e <= 4. The modulus travels with the value;
 * arithmetic across distinct moduli throws RingMismatch instead of coercing.
 *
 * Residues are stored as arbitrary-precision integers: for the default scan
 * range the modulus already exceeds 2^57, so products need double-width
 * intermediates anyway. The scanner's hot loop uses a separate fixed-width
 * path (see binomial_product_mod).
 */
class ModRingElement {
public:
    ModRingElement(const BigInt& value, std::uint64_t p, unsigned e);

    const BigInt& residue() const { return residue_; }
    const BigInt& modulus() const { return modulus_; }
    std::uint64_t prime() const { return prime_; }
    unsigned exponent() const { return exponent_; }

    bool is_zero() const { return residue_ == 0; }
    bool is_one() const { return residue_ == 1; }

    ModRingElement operator-() const;
    friend ModRingElement operator+(const ModRingElement& a, const ModRingElement& b);
    friend ModRingElement operator-(const ModRingElement& a, const ModRingElement& b);
    friend ModRingElement operator*(const ModRingElement& a, const ModRingElement& b);

    ModRingElement pow(std::uint64_t k) const;
    ModRingElement inverse() const; // throws NonInvertible

    friend bool operator==(const ModRingElement& a, const ModRingElement& b) {
        return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
    }
    friend bool operator!=(const ModRingElement& a, const ModRingElement& b) { return !(a == b); }

    std::string str() const { return residue_.get_str() + " mod " + modulus_.get_str(); }

private:
    void require_same_modulus(const ModRingElement& o) const;

    BigInt residue_;
    BigInt modulus_;
    std::uint64_t prime_;
    unsigned exponent_;
};

// x = a/b with gcd(b, p) = 1 mapped to a * b^{-1} mod p^e.
// Throws NonInvertibleDenominator when p divides b.
ModRingElement mod_reduce(const BigRational& x, std::uint64_t p, unsigned e);

ModRingElement mod_inverse(const ModRingElement& a);
ModRingElement mod_pow(const ModRingElement& a, std::uint64_t k);

} // namespace wolst
