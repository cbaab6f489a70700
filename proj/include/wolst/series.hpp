#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wolst/errors.hpp"
#include "wolst/rings.hpp"

namespace wolst {

/**
 * Formal power series truncated at t^N: exactly N coefficients c_0..c_{N-1},
 * all arithmetic exact modulo t^N. The truncation order is data; binary
 * operations truncate to the shorter operand.
 *
 * log1/exp0 use the O(N^2) derivative recurrences ((log f)' = f'/f and
 * y' = a'y); orders here stay in the low hundreds and exactness matters
 * more than asymptotics.
 */
template <CoefficientRing R>
class TruncatedSeries {
public:
    using Elem = typename R::Element;

    TruncatedSeries(R ring, std::size_t order) : ring_(std::move(ring)) {
        if (order == 0) throw std::invalid_argument("series order must be positive");
        coeffs_.assign(order, ring_.zero());
    }

    TruncatedSeries(R ring, std::vector<Elem> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series order must be positive");
    }

    static TruncatedSeries one(R ring, std::size_t order) {
        TruncatedSeries s(std::move(ring), order);
        s.coeffs_[0] = s.ring_.one();
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }
    const R& ring() const { return ring_; }

    const Elem& coefficient(std::size_t k) const {
        if (k >= coeffs_.size()) {
            throw TruncationExceeded("coefficient index " + std::to_string(k) +
                                     " >= truncation order " + std::to_string(coeffs_.size()));
        }
        return coeffs_[k];
    }

    void set_coefficient(std::size_t k, Elem v) {
        if (k >= coeffs_.size()) {
            throw TruncationExceeded("coefficient index " + std::to_string(k) +
                                     " >= truncation order " + std::to_string(coeffs_.size()));
        }
        coeffs_[k] = std::move(v);
    }

    TruncatedSeries truncated(std::size_t new_order) const {
        if (new_order == 0 || new_order > order()) {
            throw TruncationExceeded("cannot truncate order " + std::to_string(order()) + " to " +
                                     std::to_string(new_order));
        }
        return TruncatedSeries(ring_, std::vector<Elem>(coeffs_.begin(), coeffs_.begin() + new_order));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_ring(b);
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries out(a.ring_, n);
        for (std::size_t k = 0; k < n; ++k) out.coeffs_[k] = a.ring_.add(a.coeffs_[k], b.coeffs_[k]);
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_ring(b);
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries out(a.ring_, n);
        for (std::size_t k = 0; k < n; ++k) {
            out.coeffs_[k] = a.ring_.add(a.coeffs_[k], a.ring_.negate(b.coeffs_[k]));
        }
        return out;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out(ring_, order());
        for (std::size_t k = 0; k < order(); ++k) out.coeffs_[k] = ring_.negate(coeffs_[k]);
        return out;
    }

    // Cauchy product, truncated at min(order_a, order_b).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_ring(b);
        const std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries out(a.ring_, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.ring_.equal(a.coeffs_[i], a.ring_.zero())) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                out.coeffs_[i + j] =
                    a.ring_.add(out.coeffs_[i + j], a.ring_.mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        return out;
    }

    TruncatedSeries scale(const Elem& c) const {
        TruncatedSeries out(ring_, order());
        for (std::size_t k = 0; k < order(); ++k) out.coeffs_[k] = ring_.mul(coeffs_[k], c);
        return out;
    }

    // Multiplicative inverse: b_0 = c_0^{-1}, b_n = -b_0 * sum_{j=1..n} a_j b_{n-j}.
    TruncatedSeries invert() const {
        if (!ring_.is_invertible(coeffs_[0])) {
            throw NonInvertible("series constant term is not invertible");
        }
        TruncatedSeries out(ring_, order());
        const Elem c0_inv = ring_.invert(coeffs_[0]);
        out.coeffs_[0] = c0_inv;
        for (std::size_t n = 1; n < order(); ++n) {
            Elem s = ring_.zero();
            for (std::size_t j = 1; j <= n; ++j) {
                s = ring_.add(s, ring_.mul(coeffs_[j], out.coeffs_[n - j]));
            }
            out.coeffs_[n] = ring_.negate(ring_.mul(c0_inv, s));
        }
        return out;
    }

    // Formal logarithm of a series with constant term 1:
    // n g_n = n f_n - sum_{j=1}^{n-1} (j g_j) f_{n-j}.
    TruncatedSeries log1() const {
        if (!ring_.equal(coeffs_[0], ring_.one())) {
            throw std::domain_error("log1 requires constant term 1");
        }
        TruncatedSeries out(ring_, order());
        std::vector<Elem> weighted; // j * g_j as they are produced
        weighted.reserve(order());
        weighted.push_back(ring_.zero());
        for (std::size_t n = 1; n < order(); ++n) {
            Elem s = ring_.mul(ring_.from_int(static_cast<std::int64_t>(n)), coeffs_[n]);
            for (std::size_t j = 1; j < n; ++j) {
                s = ring_.add(s, ring_.negate(ring_.mul(weighted[j], coeffs_[n - j])));
            }
            out.coeffs_[n] = ring_.div_int(s, static_cast<std::uint32_t>(n));
            weighted.push_back(s);
        }
        return out;
    }

    // Formal exponential of a series with constant term 0:
    // n y_n = sum_{j=1}^{n} (j a_j) y_{n-j}.
    TruncatedSeries exp0() const {
        if (!ring_.equal(coeffs_[0], ring_.zero())) {
            throw std::domain_error("exp0 requires constant term 0");
        }
        TruncatedSeries out = one(ring_, order());
        std::vector<Elem> weighted; // j * a_j
        weighted.reserve(order());
        weighted.push_back(ring_.zero());
        for (std::size_t j = 1; j < order(); ++j) {
            weighted.push_back(ring_.mul(ring_.from_int(static_cast<std::int64_t>(j)), coeffs_[j]));
        }
        for (std::size_t n = 1; n < order(); ++n) {
            Elem s = ring_.zero();
            for (std::size_t j = 1; j <= n; ++j) {
                s = ring_.add(s, ring_.mul(weighted[j], out.coeffs_[n - j]));
            }
            out.coeffs_[n] = ring_.div_int(s, static_cast<std::uint32_t>(n));
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (!a.ring_.same_ring(b.ring_) || a.order() != b.order()) return false;
        for (std::size_t k = 0; k < a.order(); ++k) {
            if (!a.ring_.equal(a.coeffs_[k], b.coeffs_[k])) return false;
        }
        return true;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    void require_same_ring(const TruncatedSeries& o) const {
        if (!ring_.same_ring(o.ring_)) throw RingMismatch("series over different rings");
    }

    R ring_;
    std::vector<Elem> coeffs_;
};

using RationalSeries = TruncatedSeries<RationalRing>;
using ParamSeries = TruncatedSeries<ParamPolyRing>;

// Series of e^{c t}: coefficient of t^k is c^k / k!.
template <CoefficientRing R>
TruncatedSeries<R> exp_ct(const R& ring, const typename R::Element& c, std::size_t order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    std::vector<typename R::Element> cs;
    cs.reserve(order);
    cs.push_back(ring.one());
    for (std::size_t k = 1; k < order; ++k) {
        cs.push_back(ring.div_int(ring.mul(cs.back(), c), static_cast<std::uint32_t>(k)));
    }
    return TruncatedSeries<R>(ring, std::move(cs));
}

// e^t - 1 = t + t^2/2 + t^3/6 + ...: coefficient of t^k is 1/k! for k >= 1.
RationalSeries exp_minus_one(std::size_t order);

// A(t) = (e^t - 1)/t = 1 + t/2 + t^2/6 + ...: coefficient of t^k is 1/(k+1)!.
RationalSeries exp_minus_one_over_t(std::size_t order);

// Embed a rational series into Q[p] with constant polynomials.
ParamSeries lift_to_param(const RationalSeries& a);

// a(t)^p = exp(p log a(t)) with p the formal parameter; requires a_0 = 1.
// Coefficient of t^k has p-degree at most k.
ParamSeries pow_param(const RationalSeries& a);

// Evaluate every polynomial coefficient at p = p0.
RationalSeries substitute_param(const ParamSeries& a, const BigRational& p0);

} // namespace wolst
