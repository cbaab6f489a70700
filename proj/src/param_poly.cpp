#include "wolst/param_poly.hpp"

#include <algorithm>

namespace wolst {

ParamPoly ParamPoly::constant(const BigRational& c) {
    ParamPoly out;
    if (!c.is_zero()) out.coeffs_.push_back(c);
    return out;
}

ParamPoly ParamPoly::monomial(const BigRational& c, std::size_t degree) {
    ParamPoly out;
    if (!c.is_zero()) {
        out.coeffs_.assign(degree + 1, BigRational());
        out.coeffs_[degree] = c;
    }
    return out;
}

ParamPoly ParamPoly::from_coefficients(std::vector<BigRational> ascending) {
    ParamPoly out;
    out.coeffs_ = std::move(ascending);
    out.trim();
    return out;
}

void ParamPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational ParamPoly::coefficient(std::size_t d) const {
    return d < coeffs_.size() ? coeffs_[d] : BigRational();
}

BigRational ParamPoly::eval(const BigRational& at) const {
    BigRational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * at + coeffs_[i];
    }
    return acc;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

ParamPoly ParamPoly::scaled(const BigRational& c) const {
    ParamPoly out;
    if (c.is_zero()) return out;
    out.coeffs_.reserve(coeffs_.size());
    for (const auto& x : coeffs_) out.coeffs_.push_back(x * c);
    return out;
}

std::string ParamPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigRational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool leading = out.empty();
        if (leading) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const BigRational mag = c.abs();
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != BigRational(1)) {
                out += mag.str();
                out += "·";
            }
            out += i == 1 ? "p" : "p^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace wolst
