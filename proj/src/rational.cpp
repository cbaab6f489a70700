#include "wolst/rational.hpp"

#include <stdexcept>

namespace wolst {

BigInt factorial(std::uint64_t n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt pow_int(const BigInt& base, std::uint64_t exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) {
        throw std::invalid_argument("BigRational: zero denominator");
    }
    value_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) {
        throw std::domain_error("BigRational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

BigRational BigRational::operator-() const {
    BigRational out(*this);
    out.value_ = -out.value_;
    return out;
}

BigRational BigRational::abs() const {
    return sign() < 0 ? -*this : *this;
}

} // namespace wolst
