#include "wolst/series.hpp"

namespace wolst {

RationalSeries exp_minus_one(std::size_t order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    std::vector<BigRational> cs;
    cs.reserve(order);
    cs.emplace_back(); // constant term 0
    BigRational c(1);
    for (std::size_t k = 1; k < order; ++k) {
        c = c / BigRational(static_cast<long>(k)); // 1/k! incrementally; c starts at 1/1!
        cs.push_back(c);
    }
    return RationalSeries(RationalRing{}, std::move(cs));
}

RationalSeries exp_minus_one_over_t(std::size_t order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    std::vector<BigRational> cs;
    cs.reserve(order);
    BigRational c(1);
    cs.push_back(c);
    for (std::size_t k = 1; k < order; ++k) {
        c = c / BigRational(static_cast<long>(k + 1)); // 1/(k+1)!
        cs.push_back(c);
    }
    return RationalSeries(RationalRing{}, std::move(cs));
}

ParamSeries lift_to_param(const RationalSeries& a) {
    std::vector<ParamPoly> cs;
    cs.reserve(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        cs.push_back(ParamPoly::constant(a.coefficient(k)));
    }
    return ParamSeries(ParamPolyRing{}, std::move(cs));
}

ParamSeries pow_param(const RationalSeries& a) {
    if (a.coefficient(0) != BigRational(1)) {
        throw std::domain_error("pow_param requires constant term 1");
    }
    return lift_to_param(a).log1().scale(ParamPoly::variable()).exp0();
}

RationalSeries substitute_param(const ParamSeries& a, const BigRational& p0) {
    std::vector<BigRational> cs;
    cs.reserve(a.order());
    for (std::size_t k = 0; k < a.order(); ++k) {
        cs.push_back(a.coefficient(k).eval(p0));
    }
    return RationalSeries(RationalRing{}, std::move(cs));
}

} // namespace wolst
