#pragma once

#include "mhn/poly.hpp"

namespace mhn {

/// Reduced fraction of polynomials: denominator monic, gcd(num, den) = 1.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(const Poly& p) : num_(p), den_(Rational(1)) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// f(g) for f = *this; exact composition in the function field.
    RationalFunction compose(const RationalFunction& g) const {
        auto eval_poly = [&](const Poly& p) {
            // p(a/b) = sum p_i a^i b^(deg-i) / b^deg
            int d = p.degree();
            if (d < 0) return std::pair<Poly, Poly>(Poly(), Poly(Rational(1)));
            Poly acc;
            Poly apow(Rational(1));
            std::vector<Poly> bpow(d + 1);
            bpow[0] = Poly(Rational(1));
            for (int i = 1; i <= d; ++i) bpow[i] = bpow[i - 1] * g.den_;
            for (int i = 0; i <= d; ++i) {
                acc += apow * bpow[d - i] * p.coeff(i);
                if (i < d) apow *= g.num_;
            }
            return std::pair<Poly, Poly>(acc, bpow[d]);
        };
        auto [pn, pd] = eval_poly(num_);
        auto [qn, qd] = eval_poly(den_);
        // (pn/pd) / (qn/qd); pd == qd when degrees match, keep general
        return RationalFunction(pn * qd, pd * qn);
    }

    Rational eval(const Rational& v) const {
        Rational d = den_.eval(v);
        if (d.is_zero()) throw std::domain_error("RationalFunction: pole at evaluation point");
        return num_.eval(v) / d;
    }

    bool has_pole_at(const Rational& v) const { return den_.eval(v).is_zero(); }

    /// f(z) rewritten in u = z - a, i.e. returns f(u + a).
    RationalFunction shift(const Rational& a) const {
        return RationalFunction(num_.eval_shift(a), den_.eval_shift(a));
    }

    RationalFunction pow(int e) const {
        if (e < 0) return RationalFunction(Rational(1)) / pow(-e);
        RationalFunction r{Rational(1)}, base = *this;
        unsigned k = static_cast<unsigned>(e);
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    std::string to_string(const std::string& var = "z") const {
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    Poly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) { den_ = Poly(Rational(1)); return; }
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lead = den_.leading();
        if (lead != Rational(1)) {
            Rational inv = Rational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

}  // namespace mhn
