#include "wolst/padic.hpp"

#include <stdexcept>

#include "wolst/primes.hpp"

namespace wolst {

long PAdicVal::value() const {
    if (!value_) {
        throw std::logic_error("PAdicVal: infinite valuation has no finite value");
    }
    return *value_;
}

std::string PAdicVal::str() const {
    return value_ ? std::to_string(*value_) : "inf";
}

long vp_int(const BigInt& n, std::uint64_t p) {
    if (n == 0) {
        throw std::invalid_argument("vp_int: valuation of zero is infinite");
    }
    BigInt reduced;
    BigInt prime(static_cast<unsigned long>(p));
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

PAdicVal vp(const BigRational& x, std::uint64_t p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("vp: " + std::to_string(p) + " is not prime");
    }
    if (x.is_zero()) return PAdicVal::infinity(p);
    return PAdicVal::finite(p, vp_int(x.num(), p) - vp_int(x.den(), p));
}

} // namespace wolst
