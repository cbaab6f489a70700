#include "wolst/bernoulli.hpp"

#include "wolst/errors.hpp"
#include "wolst/series.hpp"

namespace wolst {

BernoulliTable::BernoulliTable(std::size_t max_index) {
    const RationalSeries t_over_expm1 = exp_minus_one_over_t(max_index + 1).invert();
    values_.reserve(max_index + 1);
    BigInt fact(1);
    for (std::size_t k = 0; k <= max_index; ++k) {
        if (k > 0) fact *= static_cast<unsigned long>(k);
        values_.push_back(t_over_expm1.coefficient(k) * BigRational(fact));
    }
}

const BigRational& BernoulliTable::value(std::size_t k) const {
    if (k >= values_.size()) {
        throw TableExhausted("Bernoulli table holds B_0..B_" + std::to_string(values_.size() - 1) +
                             ", requested B_" + std::to_string(k));
    }
    return values_[k];
}

BigRational c_coefficient(std::size_t k, const BernoulliTable& table) {
    if (k == 0) {
        throw std::invalid_argument("c_k is defined for k >= 1");
    }
    if (2 * k > table.max_index()) {
        throw TableExhausted("c_" + std::to_string(k) + " needs B_" + std::to_string(2 * k) +
                             " beyond table max " + std::to_string(table.max_index()));
    }
    const BigInt denom = BigInt(static_cast<unsigned long>(2 * k)) * factorial(2 * k);
    return table.value(2 * k) / BigRational(denom);
}

ModRingElement bernoulli_mod_p(std::size_t m, std::uint64_t p, const BernoulliTable& table) {
    return mod_reduce(table.value(m), p, 1);
}

} // namespace wolst
