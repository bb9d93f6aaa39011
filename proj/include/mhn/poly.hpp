#pragma once

#include <string>
#include <vector>

#include "mhn/rational.hpp"

namespace mhn {

/// Dense univariate polynomial over Rational. Trailing zeros are trimmed,
/// so equality is plain coefficient comparison; degree of 0 is -1.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    Poly(long long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(1, Rational(1)); }

    static Poly monomial(int deg, const Rational& c) {
        if (c.is_zero()) return Poly();
        std::vector<Rational> v(deg + 1);
        v[deg] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }

    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Rational& s) {
        std::vector<Rational> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        q = Poly();
        r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Poly t = monomial(r.degree() - b.degree(), r.leading() / b.leading());
            q += t;
            r -= t * b;
        }
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    Poly monic() const {
        if (is_zero()) throw std::domain_error("Poly: monic of zero");
        return *this * (Rational(1) / leading());
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long long>(i));
        return Poly(std::move(r));
    }

    Rational eval(const Rational& v) const {
        Rational r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
        return r;
    }

    /// q(x) = p(x + a), exact (Horner in x + a).
    Poly eval_shift(const Rational& a) const {
        Poly shifted_x = Poly({a, Rational(1)});
        Poly q;
        for (size_t i = c_.size(); i-- > 0;) q = q * shifted_x + Poly(c_[i]);
        return q;
    }

    /// Lowest index with nonzero coefficient (order of vanishing at 0); -1 for the zero poly.
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].to_string();
            if (i > 0) s += "*" + var + "^" + std::to_string(i);
        }
        return s;
    }

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Returns p(x + a) exactly.
inline Poly poly_eval_shift(const Poly& p, const Rational& a) { return p.eval_shift(a); }

}  // namespace mhn
