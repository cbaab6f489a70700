#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wolst/rational.hpp"

namespace wolst {

/**
 * Dense polynomial in the formal parameter p over exact rationals.
 * Coefficients are stored ascending with trailing zeros trimmed, so the
 * zero polynomial is the empty list and degree() of anything else points
 * at a nonzero leading coefficient.
 */
class ParamPoly {
public:
    ParamPoly() = default; // zero

    static ParamPoly constant(const BigRational& c);
    static ParamPoly variable() { return monomial(BigRational(1), 1); }
    static ParamPoly monomial(const BigRational& c, std::size_t degree);
    static ParamPoly from_coefficients(std::vector<BigRational> ascending);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    BigRational coefficient(std::size_t d) const;

    BigRational eval(const BigRational& at) const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly operator-() const;
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

    ParamPoly scaled(const BigRational& c) const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    // Descending rendering, e.g. "9/8·p^2 - 1/24·p".
    std::string str() const;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

} // namespace wolst
