#pragma once

#include <string>
#include <vector>

#include "mhn/rational.hpp"
#include "mhn/rational_function.hpp"

namespace mhn {

/// Truncated Laurent expansion of a function at a finite center, with exact
/// rational coefficients. Coefficients are exact for every order <= trunc_order();
/// reading past the truncation throws rather than returning a guess. Product
/// and quotient truncations follow the pessimistic min-rule.
class LaurentExpansion {
public:
    LaurentExpansion() : center_(0), lo_(0), hi_(-1) {}

    LaurentExpansion(Rational center, long lo, std::vector<Rational> coeffs, long hi)
        : center_(std::move(center)), lo_(lo), c_(std::move(coeffs)), hi_(hi) {
        if (lo_ + static_cast<long>(c_.size()) - 1 > hi_)
            throw std::invalid_argument("LaurentExpansion: coefficients beyond truncation");
        normalize();
    }

    static LaurentExpansion zero(const Rational& center, long hi) {
        return LaurentExpansion(center, 0, {}, hi);
    }

    static LaurentExpansion monomial(const Rational& center, long order, const Rational& c, long hi) {
        if (order > hi) throw std::invalid_argument("LaurentExpansion: monomial beyond truncation");
        return LaurentExpansion(center, order, {c}, hi);
    }

    static LaurentExpansion constant(const Rational& center, const Rational& c, long hi) {
        return monomial(center, 0, c, hi);
    }

    const Rational& center() const { return center_; }
    long trunc_order() const { return hi_; }
    bool is_zero() const { return c_.empty(); }

    /// Order of the first nonzero coefficient; for an (exactly) zero expansion
    /// the valuation is only known to exceed the truncation order.
    long valuation() const { return c_.empty() ? hi_ + 1 : lo_; }

    Rational coeff(long k) const {
        if (k > hi_)
            throw std::out_of_range("LaurentExpansion: coefficient beyond truncation order");
        if (k < lo_ || k >= lo_ + static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k - lo_)];
    }

    /// Residue = coefficient at order -1. Requires the truncation to see past it.
    Rational residue() const {
        if (hi_ < 0)
            throw std::out_of_range("LaurentExpansion: truncation too low to read the residue");
        return coeff(-1);
    }

    LaurentExpansion truncated(long new_hi) const {
        if (new_hi > hi_) throw std::invalid_argument("LaurentExpansion: cannot extend truncation");
        std::vector<Rational> c;
        for (long k = lo_; k <= std::min(new_hi, lo_ + static_cast<long>(c_.size()) - 1); ++k)
            c.push_back(c_[static_cast<size_t>(k - lo_)]);
        return LaurentExpansion(center_, lo_, std::move(c), new_hi);
    }

    friend LaurentExpansion operator+(const LaurentExpansion& a, const LaurentExpansion& b) {
        a.require_same_center(b);
        long hi = std::min(a.hi_, b.hi_);
        if (a.is_zero() && b.is_zero()) return zero(a.center_, hi);
        long lo = std::min(a.is_zero() ? b.lo_ : a.lo_, b.is_zero() ? a.lo_ : b.lo_);
        std::vector<Rational> c;
        for (long k = lo; k <= hi; ++k) c.push_back(a.coeff_unchecked(k) + b.coeff_unchecked(k));
        return LaurentExpansion(a.center_, lo, std::move(c), hi);
    }

    friend LaurentExpansion operator-(const LaurentExpansion& a, const LaurentExpansion& b) {
        return a + (-b);
    }

    LaurentExpansion operator-() const {
        LaurentExpansion r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend LaurentExpansion operator*(const LaurentExpansion& a, const LaurentExpansion& b) {
        a.require_same_center(b);
        long hi = std::min(a.hi_ + b.valuation(), b.hi_ + a.valuation());
        if (a.is_zero() || b.is_zero()) return zero(a.center_, hi);
        long lo = a.lo_ + b.lo_;
        if (lo > hi) return zero(a.center_, hi);
        std::vector<Rational> c(static_cast<size_t>(hi - lo + 1));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                long k = a.lo_ + static_cast<long>(i) + b.lo_ + static_cast<long>(j);
                if (k > hi) break;
                c[static_cast<size_t>(k - lo)] += a.c_[i] * b.c_[j];
            }
        }
        return LaurentExpansion(a.center_, lo, std::move(c), hi);
    }

    friend LaurentExpansion operator*(const LaurentExpansion& a, const Rational& s) {
        if (s.is_zero()) return zero(a.center_, a.hi_);
        LaurentExpansion r = a;
        for (auto& c : r.c_) c = c * s;
        return r;
    }
    friend LaurentExpansion operator*(const Rational& s, const LaurentExpansion& a) { return a * s; }

    LaurentExpansion& operator+=(const LaurentExpansion& o) { return *this = *this + o; }
    LaurentExpansion& operator-=(const LaurentExpansion& o) { return *this = *this - o; }
    LaurentExpansion& operator*=(const LaurentExpansion& o) { return *this = *this * o; }

    /// Multiplicative inverse. The leading stored coefficient must be nonzero;
    /// an exactly-zero leading slot is an error, never a silent order shift.
    LaurentExpansion inverse() const {
        if (is_zero())
            throw std::domain_error("LaurentExpansion: inverse of zero expansion");
        long v = lo_;
        size_t n = static_cast<size_t>(hi_ - v + 1);  // unit-part coefficients available
        std::vector<Rational> u(n);
        for (size_t i = 0; i < n; ++i) u[i] = coeff_unchecked(v + static_cast<long>(i));
        std::vector<Rational> q(n);
        q[0] = Rational(1) / u[0];
        for (size_t k = 1; k < n; ++k) {
            Rational acc(0);
            for (size_t j = 1; j <= k; ++j) acc += u[j] * q[k - j];
            q[k] = -acc / u[0];
        }
        return LaurentExpansion(center_, -v, std::move(q), hi_ - 2 * v);
    }

    friend LaurentExpansion operator/(const LaurentExpansion& a, const LaurentExpansion& b) {
        return a * b.inverse();
    }

    LaurentExpansion pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        if (e == 0) return constant(center_, Rational(1), hi_);
        LaurentExpansion r = *this;
        for (int i = 1; i < e; ++i) r *= *this;
        return r;
    }

    /// Term-by-term derivative in the local coordinate.
    LaurentExpansion derivative() const {
        if (is_zero()) return zero(center_, hi_ - 1);
        std::vector<Rational> c;
        for (long k = lo_; k <= lo_ + static_cast<long>(c_.size()) - 1; ++k)
            c.push_back(coeff_unchecked(k) * Rational(static_cast<long long>(k)));
        // slot at k = 0 becomes an interior zero; normalize() trims the ends
        return LaurentExpansion(center_, lo_ - 1, std::move(c), hi_ - 1);
    }

    /// True when all coefficients agree through min(trunc, o.trunc).
    bool matches(const LaurentExpansion& o) const {
        require_same_center(o);
        long hi = std::min(hi_, o.hi_);
        long lo = std::min(valuation(), o.valuation());
        for (long k = lo; k <= hi; ++k)
            if (coeff_unchecked(k) != o.coeff_unchecked(k)) return false;
        return true;
    }

    std::string to_string(const std::string& var = "u") const {
        std::string s;
        for (long k = lo_; k <= lo_ + static_cast<long>(c_.size()) - 1; ++k) {
            const Rational& c = coeff_unchecked(k);
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c.to_string() + "*" + var + "^" + std::to_string(k);
        }
        if (s.empty()) s = "0";
        return s + " + O(" + var + "^" + std::to_string(hi_ + 1) + ")";
    }

private:
    Rational center_;
    long lo_;
    std::vector<Rational> c_;
    long hi_;

    Rational coeff_unchecked(long k) const {
        if (k < lo_ || k >= lo_ + static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k - lo_)];
    }

    void require_same_center(const LaurentExpansion& o) const {
        if (center_ != o.center_)
            throw std::invalid_argument("LaurentExpansion: mixed expansion centers");
    }

    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            lo_ += static_cast<long>(lead);
        }
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) lo_ = 0;
    }
};

/// Laurent expansion of a rational function at a finite center, through `order`.
inline LaurentExpansion laurent_of_rational(const RationalFunction& f, const Rational& center,
                                            long order) {
    Poly n = f.num().eval_shift(center);
    Poly d = f.den().eval_shift(center);
    if (d.is_zero()) throw std::domain_error("laurent_of_rational: zero denominator");
    if (n.is_zero()) return LaurentExpansion::zero(center, order);
    int vn = n.valuation(), vd = d.valuation();
    long lo = vn - vd;
    if (lo > order) return LaurentExpansion::zero(center, order);
    size_t count = static_cast<size_t>(order - lo + 1);
    // power series division of the unit parts
    std::vector<Rational> nu(count), du(count), q(count);
    for (size_t i = 0; i < count; ++i) {
        nu[i] = n.coeff(vn + static_cast<int>(i));
        du[i] = d.coeff(vd + static_cast<int>(i));
    }
    for (size_t k = 0; k < count; ++k) {
        Rational acc = nu[k];
        for (size_t j = 1; j <= k; ++j) acc -= du[j] * q[k - j];
        q[k] = acc / du[0];
    }
    return LaurentExpansion(center, lo, std::move(q), order);
}

/// p evaluated at a power/Laurent series argument (argument valuation must be >= 0
/// so the composition truncation stays exact through the argument's order).
inline LaurentExpansion poly_at_series(const Poly& p, const LaurentExpansion& s) {
    if (s.valuation() < 0) throw std::invalid_argument("poly_at_series: argument has a pole");
    LaurentExpansion r = LaurentExpansion::zero(s.center(), s.trunc_order());
    for (int i = p.degree(); i >= 0; --i)
        r = r * s + LaurentExpansion::constant(s.center(), p.coeff(i), s.trunc_order());
    return r;
}

/// f(s) for a rational function f and series s; denominator must be a unit.
inline LaurentExpansion ratfun_at_series(const RationalFunction& f, const LaurentExpansion& s) {
    LaurentExpansion den = poly_at_series(f.den(), s);
    if (den.valuation() != 0)
        throw std::domain_error("ratfun_at_series: denominator not a unit at this point");
    return poly_at_series(f.num(), s) / den;
}

}  // namespace mhn
