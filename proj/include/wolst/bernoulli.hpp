#pragma once

#include <cstdint>
#include <vector>

#include "wolst/modring.hpp"
#include "wolst/rational.hpp"

namespace wolst {

// Largest index the stock table (and the bernoulli CLI command) covers;
// B_{p-3} is then exact for p <= 203. Numerators grow super-exponentially,
// so larger primes go through the mod-p^4 scan criterion instead.
inline constexpr std::size_t kDefaultBernoulliMaxIndex = 200;

/**
 * Exact Bernoulli numbers B_0..B_n in the t/(e^t - 1) convention
 * (B_1 = -1/2), generated by inverting (e^t - 1)/t in the series engine:
 * B_k = k! * [t^k] (t/(e^t - 1)).
 */
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t max_index);

    std::size_t max_index() const { return values_.size() - 1; }
    const BigRational& value(std::size_t k) const; // throws TableExhausted past max_index

private:
    std::vector<BigRational> values_;
};

inline BernoulliTable bernoulli_upto(std::size_t n) { return BernoulliTable(n); }

// c_k = B_{2k} / (2k (2k)!) for k >= 1.
BigRational c_coefficient(std::size_t k, const BernoulliTable& table);

// B_m mod p. Requires (p-1) not dividing m, which by von Staudt-Clausen
// keeps p out of the denominator; otherwise NonInvertibleDenominator.
ModRingElement bernoulli_mod_p(std::size_t m, std::uint64_t p, const BernoulliTable& table);

} // namespace wolst
