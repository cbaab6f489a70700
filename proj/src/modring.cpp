#include "wolst/modring.hpp"

#include <stdexcept>

#include "wolst/errors.hpp"

namespace wolst {

ModRingElement::ModRingElement(const BigInt& value, std::uint64_t p, unsigned e)
    : prime_(p), exponent_(e) {
    if (p < 2) {
        throw std::invalid_argument("ModRingElement: prime must be >= 2");
    }
    if (e < 1 || e > 4) {
        throw std::invalid_argument("ModRingElement: exponent must be in 1..4");
    }
    modulus_ = pow_int(BigInt(static_cast<unsigned long>(p)), e);
    mpz_fdiv_r(residue_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

void ModRingElement::require_same_modulus(const ModRingElement& o) const {
    if (modulus_ != o.modulus_) {
        throw RingMismatch("mixed moduli: " + modulus_.get_str() + " vs " + o.modulus_.get_str());
    }
}

ModRingElement ModRingElement::operator-() const {
    ModRingElement out(*this);
    if (out.residue_ != 0) out.residue_ = modulus_ - out.residue_;
    return out;
}

ModRingElement operator+(const ModRingElement& a, const ModRingElement& b) {
    a.require_same_modulus(b);
    ModRingElement out(a);
    out.residue_ += b.residue_;
    if (out.residue_ >= out.modulus_) out.residue_ -= out.modulus_;
    return out;
}

ModRingElement operator-(const ModRingElement& a, const ModRingElement& b) {
    a.require_same_modulus(b);
    ModRingElement out(a);
    out.residue_ -= b.residue_;
    if (out.residue_ < 0) out.residue_ += out.modulus_;
    return out;
}

ModRingElement operator*(const ModRingElement& a, const ModRingElement& b) {
    a.require_same_modulus(b);
    ModRingElement out(a);
    out.residue_ *= b.residue_;
    out.residue_ %= out.modulus_;
    return out;
}

ModRingElement ModRingElement::pow(std::uint64_t k) const {
    ModRingElement out(*this);
    mpz_powm_ui(out.residue_.get_mpz_t(), residue_.get_mpz_t(), static_cast<unsigned long>(k),
                modulus_.get_mpz_t());
    return out;
}

ModRingElement ModRingElement::inverse() const {
    ModRingElement out(*this);
    if (mpz_invert(out.residue_.get_mpz_t(), residue_.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
        throw NonInvertible("residue " + residue_.get_str() + " has no inverse mod " + modulus_.get_str());
    }
    return out;
}

ModRingElement mod_reduce(const BigRational& x, std::uint64_t p, unsigned e) {
    ModRingElement den(x.den(), p, e);
    BigInt den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.residue().get_mpz_t(), den.modulus().get_mpz_t()) == 0) {
        throw NonInvertibleDenominator("denominator " + x.den().get_str() + " is divisible by " +
                                       std::to_string(p));
    }
    return ModRingElement(x.num() * den_inv, p, e);
}

ModRingElement mod_inverse(const ModRingElement& a) { return a.inverse(); }

ModRingElement mod_pow(const ModRingElement& a, std::uint64_t k) { return a.pow(k); }

} // namespace wolst
