#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "wolst/errors.hpp"
#include "wolst/modring.hpp"
#include "wolst/param_poly.hpp"
#include "wolst/rational.hpp"

namespace wolst {

/**
 * Capability set a coefficient ring instance must provide to the series
 * engine. Rings are small value objects carried by every series; for Z/p^e
 * the instance holds the modulus, for Q and Q[p] it is stateless.
 *
 * invert and div_int are partial: they throw NonInvertible where the ring
 * has no inverse (e.g. dividing by a multiple of p in Z/p^e).
 */
template <typename R>
concept CoefficientRing =
    std::copyable<R> &&
    requires(const R r, const typename R::Element a, const typename R::Element b, std::uint32_t n,
             std::int64_t i) {
        typename R::Element;
        { r.zero() } -> std::same_as<typename R::Element>;
        { r.one() } -> std::same_as<typename R::Element>;
        { r.from_int(i) } -> std::same_as<typename R::Element>;
        { r.add(a, b) } -> std::same_as<typename R::Element>;
        { r.negate(a) } -> std::same_as<typename R::Element>;
        { r.mul(a, b) } -> std::same_as<typename R::Element>;
        { r.equal(a, b) } -> std::same_as<bool>;
        { r.is_invertible(a) } -> std::same_as<bool>;
        { r.invert(a) } -> std::same_as<typename R::Element>;
        { r.div_int(a, n) } -> std::same_as<typename R::Element>;
        { r.same_ring(r) } -> std::same_as<bool>;
        { r.to_string(a) } -> std::same_as<std::string>;
    };

struct RationalRing {
    using Element = BigRational;

    Element zero() const { return BigRational(); }
    Element one() const { return BigRational(1); }
    Element from_int(std::int64_t n) const { return BigRational(static_cast<long>(n)); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element negate(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool is_invertible(const Element& a) const { return !a.is_zero(); }
    Element invert(const Element& a) const {
        if (a.is_zero()) throw NonInvertible("0 has no inverse in Q");
        return one() / a;
    }
    Element div_int(const Element& a, std::uint32_t n) const {
        if (n == 0) throw std::invalid_argument("div_int: zero divisor");
        return a / BigRational(static_cast<long>(n));
    }
    bool same_ring(const RationalRing&) const { return true; }
    std::string to_string(const Element& a) const { return a.str(); }
};

struct ParamPolyRing {
    using Element = ParamPoly;

    Element zero() const { return ParamPoly(); }
    Element one() const { return ParamPoly::constant(BigRational(1)); }
    Element from_int(std::int64_t n) const { return ParamPoly::constant(BigRational(static_cast<long>(n))); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element negate(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    // Units of Q[p] are the nonzero constants.
    bool is_invertible(const Element& a) const { return a.is_constant() && !a.is_zero(); }
    Element invert(const Element& a) const {
        if (!is_invertible(a)) throw NonInvertible("non-constant polynomial has no inverse in Q[p]");
        return ParamPoly::constant(BigRational(1) / a.coefficient(0));
    }
    Element div_int(const Element& a, std::uint32_t n) const {
        if (n == 0) throw std::invalid_argument("div_int: zero divisor");
        return a.scaled(BigRational(1, static_cast<long>(n)));
    }
    bool same_ring(const ParamPolyRing&) const { return true; }
    std::string to_string(const Element& a) const { return a.str(); }
};

class ModRing {
public:
    using Element = ModRingElement;

    ModRing(std::uint64_t p, unsigned e) : prime_(p), exponent_(e) {
        (void)Element(BigInt(0), p, e); // range-checks p and e
    }

    std::uint64_t prime() const { return prime_; }
    unsigned exponent() const { return exponent_; }

    Element zero() const { return Element(BigInt(0), prime_, exponent_); }
    Element one() const { return Element(BigInt(1), prime_, exponent_); }
    Element from_int(std::int64_t n) const { return Element(BigInt(static_cast<long>(n)), prime_, exponent_); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element negate(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool is_invertible(const Element& a) const {
        return mpz_divisible_ui_p(a.residue().get_mpz_t(), static_cast<unsigned long>(prime_)) == 0;
    }
    Element invert(const Element& a) const { return a.inverse(); }
    Element div_int(const Element& a, std::uint32_t n) const {
        if (n == 0) throw std::invalid_argument("div_int: zero divisor");
        return a * from_int(n).inverse();
    }
    bool same_ring(const ModRing& o) const { return prime_ == o.prime_ && exponent_ == o.exponent_; }
    std::string to_string(const Element& a) const { return a.str(); }

private:
    std::uint64_t prime_;
    unsigned exponent_;
};

} // namespace wolst
