#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhn/hurwitz.hpp"
#include "mhn/identities.hpp"
#include "mhn/laurent.hpp"
#include "mhn/rational_function.hpp"

namespace mhn {

/// The monotone spectral curve: x = (z-1)/z^2, y = -z on CP^1, branch point
/// z = 2, global deck transformation sigma exchanging the two x-sheets.
struct SpectralCurve {
    RationalFunction x, y, sigma;
    Rational branch_point;
};

/// Solves x(z) = x(w) for w != z: factors the numerator of x(z) - x(w) by the
/// diagonal (w - z) and solves the remaining linear factor.
inline RationalFunction deck_transformation(const RationalFunction& x) {
    const Poly& p = x.num();
    const Poly& q = x.den();
    int deg = std::max(p.degree(), q.degree());
    // numerator of x(z) - x(w) as a polynomial in w with Poly-in-z coefficients
    std::vector<Poly> a(deg + 1);
    for (int j = 0; j <= deg; ++j) a[j] = p * q.coeff(j) - q * p.coeff(j);
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    if (a.empty()) throw std::domain_error("deck_transformation: x is constant");
    // synthetic division by (w - z)
    int n = static_cast<int>(a.size()) - 1;
    Poly z = Poly::x();
    std::vector<Poly> b(n);
    b[n - 1] = a[n];
    for (int j = n - 1; j >= 1; --j) b[j - 1] = a[j] + z * b[j];
    if (!(a[0] + z * b[0]).is_zero())
        throw std::logic_error("deck_transformation: (w - z) does not divide x(z) - x(w)");
    if (n - 1 != 1 || b[1].is_zero())
        throw std::domain_error("deck_transformation: residual factor is not linear in w");
    return RationalFunction(-b[0], b[1]);
}

inline SpectralCurve make_monotone_curve() {
    Poly z = Poly::x();
    RationalFunction x(z - Poly(Rational(1)), z * z);
    RationalFunction y = RationalFunction(-z);
    RationalFunction sigma = deck_transformation(x);
    // branch point: simple root of the numerator of dx/dz
    Poly num = x.derivative().num();
    if (num.degree() != 1)
        throw std::logic_error("make_monotone_curve: dx numerator is not linear");
    Rational a = -num.coeff(0) / num.coeff(1);
    return SpectralCurve{x, y, sigma, a};
}

/// Exact curve identities: x(sigma) = x, sigma an involution fixing the branch
/// point, dx/dz = (2 - z)/z^3 with a simple zero at z = 2.
inline VerificationReport verify_curve_sanity() {
    SpectralCurve c = make_monotone_curve();
    Poly z = Poly::x();
    auto fail = [](const std::string& w) {
        return VerificationReport::fail("curve-sanity", "fixed curve", w);
    };
    if (c.sigma != RationalFunction(z, z - Poly(Rational(1)))) return fail("sigma != z/(z-1)");
    if (c.x.compose(c.sigma) != c.x) return fail("x(sigma(z)) != x(z)");
    if (c.sigma.compose(c.sigma) != RationalFunction(z)) return fail("sigma is not an involution");
    if (c.sigma == RationalFunction(z)) return fail("sigma is the identity");
    if (c.sigma.eval(Rational(2)) != Rational(2)) return fail("sigma(2) != 2");
    if (c.branch_point != Rational(2)) return fail("branch point != 2");
    if (c.x.derivative() != RationalFunction(Poly(Rational(2)) - z, z * z * z))
        return fail("dx/dz != (2-z)/z^3");
    Poly num = c.x.derivative().num();
    if (!num.eval(Rational(2)).is_zero() || num.derivative().eval(Rational(2)).is_zero())
        return fail("dx does not vanish to first order at z = 2");
    return VerificationReport::pass("curve-sanity", "fixed curve");
}

/// omega_{0,1} = -y dx, as the coefficient of dz: (2 - z)/z^2.
inline RationalFunction omega01(const SpectralCurve& c) {
    return -c.y * c.x.derivative();
}

/// All local expansion data at the branch point, at one truncation order:
/// everything is a Laurent series in u = z - 2 with exact coefficients.
class BranchData {
public:
    BranchData(const SpectralCurve& c, long order) : curve_(c), order_(order) {
        Rational bp = c.branch_point;
        RationalFunction sigma_u = c.sigma.shift(bp);            // sigma(2+u), function of u
        RationalFunction v_u = sigma_u - RationalFunction(Rational(bp));  // sigma(2+u) - 2
        RationalFunction xp = c.x.derivative();
        RationalFunction xp_u = xp.shift(bp);
        RationalFunction xp_sigma_u = xp.compose(c.sigma).shift(bp);
        RationalFunction sp_u = c.sigma.derivative().shift(bp);

        v_ = laurent_of_rational(v_u, Rational(0), order);
        sigma_series_ = laurent_of_rational(sigma_u, Rational(0), order);
        sigma_prime_ = laurent_of_rational(sp_u, Rational(0), order);
        inv_xp_ = laurent_of_rational(xp_u, Rational(0), order + 2).inverse().truncated(order);

        // kernel denominator (y(sigma(z)) - y(z)) dx, and the working inverse
        // 1/(2 (y - y о sigma) dx) that the residue recursion divides by
        denom_fun_ = (c.y.compose(c.sigma) - c.y) * xp;
        RationalFunction inv_dd = RationalFunction(Rational(1)) /
                                  (RationalFunction(Rational(2)) * (c.y - c.y.compose(c.sigma)) * xp);
        inv_double_ = laurent_of_rational(inv_dd.shift(bp), Rational(0), order);

        // B(z, sigma(z)) / du^2 = sigma'(z) / (z - sigma(z))^2 at z = 2+u
        RationalFunction id_u = RationalFunction(Poly({bp, Rational(1)}));  // z = 2+u
        RationalFunction bzz = sp_u / ((id_u - sigma_u) * (id_u - sigma_u));
        b_sigma_z_ = laurent_of_rational(bzz, Rational(0), order);

        v_pows_.push_back(LaurentExpansion::constant(Rational(0), Rational(1), order));
        v_pows_.push_back(v_);
    }

    long order() const { return order_; }
    const SpectralCurve& curve() const { return curve_; }
    const LaurentExpansion& v() const { return v_; }                    // sigma(2+u) - 2
    const LaurentExpansion& sigma_series() const { return sigma_series_; }
    const LaurentExpansion& sigma_prime() const { return sigma_prime_; }
    const LaurentExpansion& inv_xp() const { return inv_xp_; }          // 1/x'(2+u)
    const LaurentExpansion& inv_double_denom() const { return inv_double_; }
    const LaurentExpansion& b_z_sigma() const { return b_sigma_z_; }    // B(z, sigma z)/du^2
    const RationalFunction& denominator_fun() const { return denom_fun_; }

    LaurentExpansion v_pow(int m) {
        while (static_cast<int>(v_pows_.size()) <= m) v_pows_.push_back(v_pows_.back() * v_);
        return v_pows_[m];
    }

    /// dz/(z-2)^k expanded: u^{-k}.
    LaurentExpansion b_series(int k) const {
        return LaurentExpansion::monomial(Rational(0), -k, Rational(1), order_);
    }

    /// d sigma(z)/(sigma(z)-2)^k expanded in u (the du-coefficient).
    const LaurentExpansion& a_series(int k) {
        auto it = a_cache_.find(k);
        if (it != a_cache_.end()) return it->second;
        LaurentExpansion s = sigma_prime_ * v_pow(k).inverse();
        return a_cache_.emplace(k, std::move(s)).first->second;
    }

    /// (sigma(2+u) - 2)^m - u^m, the m-th kernel numerator weight.
    const LaurentExpansion& kernel_term(int m) {
        auto it = k_cache_.find(m);
        if (it != k_cache_.end()) return it->second;
        LaurentExpansion s = v_pow(m) - LaurentExpansion::monomial(Rational(0), m, Rational(1), order_);
        return k_cache_.emplace(m, std::move(s)).first->second;
    }

private:
    SpectralCurve curve_;
    long order_;
    LaurentExpansion v_, sigma_series_, sigma_prime_, inv_xp_, inv_double_, b_sigma_z_;
    RationalFunction denom_fun_;
    std::vector<LaurentExpansion> v_pows_;
    std::map<int, LaurentExpansion> a_cache_;
    std::map<int, LaurentExpansion> k_cache_;
};

/// The kernel expansion data at a given truncation order: the inverse
/// denominator, the numerator weights (v^m - u^m), and the deck-image series.
inline BranchData recursion_kernel(long order) { return BranchData(make_monotone_curve(), order); }

/// m-th pole-basis leg of the Bergman kernel with one argument at the branch
/// point: B(z, z0) resp. B(sigma(z), z0) decomposes as
/// sum_m leg_m(u) dz0/(z0-2)^{m+2}, with leg_m = (m+1) u^m resp.
/// (m+1) sigma'(2+u) (sigma(2+u)-2)^m. The part analytic at z0 = 2 is empty.
inline LaurentExpansion omega02_leg(BranchData& bd, int m, bool sigma_role) {
    Rational w(m + 1);
    if (sigma_role) return bd.sigma_prime() * bd.v_pow(m) * w;
    return LaurentExpansion::monomial(Rational(0), m, w, bd.order());
}

/// Symmetric n-differential sum c_k prod_i dz_i/(z_i - 2)^{k_i}, stored as the
/// full (unsymmetrized) coefficient map; symmetry is asserted after each step.
struct PoleBasisForm {
    int g = 0;
    int n = 0;
    std::map<std::vector<int>, Rational> terms;

    int pole_bound() const {
        int k = 0;
        for (const auto& [key, c] : terms)
            for (int ki : key) k = std::max(k, ki);
        return k;
    }

    bool is_symmetric() const {
        for (const auto& [key, c] : terms) {
            std::vector<int> perm = key;
            std::sort(perm.begin(), perm.end());
            do {
                auto it = terms.find(perm);
                if (it == terms.end() || it->second != c) return false;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return true;
    }

    friend bool operator==(const PoleBasisForm& a, const PoleBasisForm& b) {
        return a.g == b.g && a.n == b.n && a.terms == b.terms;
    }
};

namespace detail {

/// One summand of the recursion bracket: a u-series times pole-basis weights
/// on a subset of the spectator variables.
struct BracketPiece {
    std::map<int, int> spectator_k;  // spectator index -> pole order
    LaurentExpansion f;
};

inline bool stable(int g, int n) { return 2 * g - 2 + n > 0; }

}  // namespace detail

/// Residue recursion engine for the fixed monotone curve. Stable forms are
/// computed on demand and cached; `extra_order` raises every working Laurent
/// truncation (used by the +4 stability re-runs).
class TopologicalRecursion {
public:
    explicit TopologicalRecursion(int extra_order = 0)
        : curve_(make_monotone_curve()), extra_(extra_order) {}

    const SpectralCurve& curve() const { return curve_; }

    const PoleBasisForm& omega(int g, int n) {
        if (!detail::stable(g, n))
            throw std::invalid_argument("omega: unstable (g,n) is input data, not an output");
        if (g < 0 || n < 1) throw std::invalid_argument("omega: bad indices");
        auto it = forms_.find({g, n});
        if (it != forms_.end()) return it->second;
        PoleBasisForm f = tr_step(g, n);
        return forms_.emplace(std::make_pair(g, n), std::move(f)).first->second;
    }

    long working_order(int g, int n_out) const { return 6L * g + 2L * n_out + 8 + extra_; }

private:
    SpectralCurve curve_;
    int extra_;
    std::map<std::pair<int, int>, PoleBasisForm> forms_;

    using Pieces = std::vector<detail::BracketPiece>;

    /// Pieces of omega_{h,m}(role, z_S) with the first variable in the z- or
    /// sigma(z)-role and the others on the given spectator indices.
    Pieces expand_stable(BranchData& bd, const PoleBasisForm& form,
                         const std::vector<int>& spectators, bool sigma_role) {
        Pieces out;
        for (const auto& [key, c] : form.terms) {
            detail::BracketPiece p;
            p.f = (sigma_role ? bd.a_series(key[0]) : bd.b_series(key[0])) * c;
            for (size_t i = 0; i < spectators.size(); ++i)
                p.spectator_k[spectators[i]] = key[i + 1];
            out.push_back(std::move(p));
        }
        return out;
    }

    /// Pieces of B(role, z_j): the spectator leg decomposes into
    /// dz_j/(z_j-2)^{m+2} with u-series weights from omega02_leg.
    Pieces expand_b_spectator(BranchData& bd, int spectator, bool sigma_role, int m_max) {
        Pieces out;
        for (int m = 0; m <= m_max; ++m) {
            detail::BracketPiece p;
            p.f = omega02_leg(bd, m, sigma_role);
            p.spectator_k[spectator] = m + 2;
            out.push_back(std::move(p));
        }
        return out;
    }

    int max_pole(const PoleBasisForm& form) const {
        int k = 0;
        for (const auto& [key, c] : form.terms) k = std::max(k, key[0]);
        return k;
    }

    /// omega_{g, n_out}(z_0, spectators): the residue step.
    PoleBasisForm tr_step(int g, int n_out) {
        int n = n_out - 1;  // spectator count
        BranchData bd(curve_, working_order(g, n_out));

        std::map<std::vector<int>, LaurentExpansion> bracket;
        auto add_piece = [&](const detail::BracketPiece& piece) {
            std::vector<int> key(n, 0);
            for (auto [idx, k] : piece.spectator_k) key[idx] = k;
            auto it = bracket.find(key);
            if (it == bracket.end())
                bracket.emplace(key, piece.f);
            else
                it->second += piece.f;
        };

        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;

        // omega_{g-1, n+2}(z, sigma(z), spectators)
        if (g >= 1) {
            if (g == 1 && n == 0) {
                detail::BracketPiece p;
                p.f = bd.b_z_sigma();
                add_piece(p);
            } else if (detail::stable(g - 1, n + 2)) {
                for (const auto& [key, c] : omega(g - 1, n + 2).terms) {
                    detail::BracketPiece p;
                    p.f = bd.b_series(key[0]) * bd.a_series(key[1]) * c;
                    for (int i = 0; i < n; ++i) p.spectator_k[i] = key[i + 2];
                    add_piece(p);
                }
            }
        }

        // sum' over h + k = g and I ⊔ J = spectators, excluding (0,1) factors
        for (int h = 0; h <= g; ++h) {
            int k = g - h;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> is, js;
                for (int i = 0; i < n; ++i)
                    (mask >> i & 1u) ? is.push_back(i) : js.push_back(i);
                if (h == 0 && is.size() + 1 == 1) continue;
                if (k == 0 && js.size() + 1 == 1) continue;
                bool f1_unstable = (h == 0 && is.size() == 1);
                bool f2_unstable = (k == 0 && js.size() == 1);
                if (!f1_unstable && !detail::stable(h, static_cast<int>(is.size()) + 1)) continue;
                if (!f2_unstable && !detail::stable(k, static_cast<int>(js.size()) + 1)) continue;

                int pole1 = f1_unstable ? 0 : max_pole(omega(h, static_cast<int>(is.size()) + 1));
                int pole2 = f2_unstable ? 0 : max_pole(omega(k, static_cast<int>(js.size()) + 1));
                Pieces p1 = f1_unstable
                                ? expand_b_spectator(bd, is[0], false, pole2)
                                : expand_stable(bd, omega(h, static_cast<int>(is.size()) + 1), is, false);
                Pieces p2 = f2_unstable
                                ? expand_b_spectator(bd, js[0], true, pole1)
                                : expand_stable(bd, omega(k, static_cast<int>(js.size()) + 1), js, true);
                for (const auto& a : p1)
                    for (const auto& b : p2) {
                        detail::BracketPiece p;
                        p.f = a.f * b.f;
                        p.spectator_k = a.spectator_k;
                        for (auto [idx, kk] : b.spectator_k) p.spectator_k[idx] = kk;
                        add_piece(p);
                    }
            }
        }

        // residues against the kernel: coefficient of u^{-1} of
        // (v^m - u^m) * bracket / (2 (y - y o sigma) dx), landing on (z0-2)^{m+1}
        PoleBasisForm out;
        out.g = g;
        out.n = n_out;
        for (const auto& [key, phi] : bracket) {
            LaurentExpansion total = phi * bd.inv_double_denom();
            long deepest = -1 - total.valuation();
            for (int m = 1; m <= deepest; ++m) {
                Rational c = (bd.kernel_term(m) * total).residue();
                if (c.is_zero()) continue;
                std::vector<int> out_key;
                out_key.reserve(n_out);
                out_key.push_back(m + 1);
                for (int ki : key) out_key.push_back(ki);
                Rational& slot = out.terms[out_key];
                slot += c;
                if (slot.is_zero()) out.terms.erase(out_key);
            }
        }

        for (const auto& [key, c] : out.terms)
            for (int ki : key)
                if (ki < 2)
                    throw std::logic_error("tr_step: residue produced a simple pole");
        if (!out.is_symmetric())
            throw std::logic_error("tr_step: computed form is not symmetric");
        return out;
    }
};

/// Functional inverse z(x) of x = (z-1)/z^2 at the regular point z = 1 (x = 0):
/// z(x) = 1 + x + 2x^2 + 5x^3 + 14x^4 + ..., exact through `order`.
struct XSeries {
    LaurentExpansion z;        // z(x), power series in x with z(0) = 1
    LaurentExpansion z_prime;  // dz/dx

    explicit XSeries(int order) {
        // w = z - 1 satisfies w = x (1 + w)^2; iterate to the fixed point
        LaurentExpansion x_mono = LaurentExpansion::monomial(Rational(0), 1, Rational(1), order);
        LaurentExpansion one = LaurentExpansion::constant(Rational(0), Rational(1), order);
        LaurentExpansion w = LaurentExpansion::zero(Rational(0), order);
        for (int i = 0; i <= order + 1; ++i) {
            LaurentExpansion s = one + w;
            w = x_mono * s * s;
            w = w.truncated(order);
        }
        z = one + w;
        z_prime = z.derivative();
        // defining property, exact through the truncation
        SpectralCurve c = make_monotone_curve();
        LaurentExpansion recomposed = ratfun_at_series(c.x, z);
        if (!recomposed.matches(x_mono))
            throw std::logic_error("XSeries: x(z(x)) != x within the truncation");
    }

    /// z'(x)/(z(x)-2)^k: the x-expansion of dz/(z-2)^k divided by dx.
    LaurentExpansion pole_factor(int k) const {
        LaurentExpansion zm2 = z - LaurentExpansion::constant(Rational(0), Rational(2), z.trunc_order());
        return z_prime * zm2.inverse().pow(k);
    }
};

inline XSeries invert_x_series(int order) { return XSeries(order); }

/// Coefficient table W_g(a_1..a_n) of omega_{g,n} = sum W prod x_i^{a_i-1} dx_i.
class WTable {
public:
    WTable(const PoleBasisForm& form, int a_max) : n_(form.n), a_max_(a_max) {
        XSeries xs(a_max + 2);
        std::map<int, std::vector<Rational>> factor;  // k -> coefficients [x^0..x^{a_max-1}]
        for (const auto& [key, c] : form.terms)
            for (int k : key)
                if (!factor.count(k)) {
                    auto s = xs.pole_factor(k);
                    std::vector<Rational> v(a_max);
                    for (int a = 0; a < a_max; ++a) v[a] = s.coeff(a);
                    factor[k] = std::move(v);
                }
        values_.clear();
        std::vector<int> a(n_, 1);
        for (;;) {
            Rational w(0);
            for (const auto& [key, c] : form.terms) {
                Rational term = c;
                for (int i = 0; i < n_; ++i) term *= factor[key[i]][a[i] - 1];
                w += term;
            }
            values_[a] = w;
            int i = 0;
            while (i < n_ && ++a[i] > a_max_) a[i++] = 1;
            if (i == n_) break;
        }
    }

    Rational value(const std::vector<int>& a) const { return values_.at(a); }
    int arity() const { return n_; }
    int a_max() const { return a_max_; }

private:
    int n_, a_max_;
    std::map<std::vector<int>, Rational> values_;
};

namespace detail {

/// Dense bivariate power series over Rational. Entries with i + j <= window
/// are exact; everything beyond is stored as zero and treated as unknown.
struct Bivar {
    int n;
    int window;
    std::vector<std::vector<Rational>> c;

    explicit Bivar(int size, int win = -1)
        : n(size), window(win < 0 ? 2 * size : win), c(size, std::vector<Rational>(size)) {}

    void clip() {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i + j > window) c[i][j] = Rational(0);
    }

    static Bivar product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Bivar r(static_cast<int>(a.size()));
        for (int i = 0; i < r.n; ++i)
            for (int j = 0; j < r.n; ++j) r.c[i][j] = a[i] * b[j];
        return r;
    }

    Bivar mul(const Bivar& o) const {
        Bivar r(n, std::min(window, o.window));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (c[i][j].is_zero()) continue;
                for (int k = 0; i + k < n; ++k)
                    for (int l = 0; j + l < n; ++l) r.c[i + k][j + l] += c[i][j] * o.c[k][l];
            }
        r.clip();
        return r;
    }

    Bivar inverse() const {
        if (c[0][0].is_zero()) throw std::domain_error("Bivar: not a unit");
        Bivar r(n, window);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Rational acc = (a == 0 && b == 0) ? Rational(1) : Rational(0);
                for (int i = 0; i <= a; ++i)
                    for (int j = 0; j <= b; ++j) {
                        if (i == a && j == b) continue;
                        acc -= r.c[i][j] * c[a - i][b - j];
                    }
                r.c[a][b] = acc / c[0][0];
            }
        r.clip();
        return r;
    }

    Bivar sub(const Bivar& o) const {
        Bivar r(n, std::min(window, o.window));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.c[i][j] = c[i][j] - o.c[i][j];
        r.clip();
        return r;
    }

    /// Divide by (u - v); the dividend must vanish on the diagonal through the
    /// window. The quotient is exact through window - 1.
    Bivar divide_u_minus_v() const {
        Bivar in = *this;
        in.clip();
        Bivar q(n, window - 1);
        // treat as polynomial in u with coefficient rows in v: synthetic division
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
        std::vector<Rational> carry = in.c[n - 1];
        for (int i = n - 2; i >= 0; --i) {
            rows[i] = carry;  // quotient coefficient of u^i
            // carry = c[i] + v * rows[i]
            std::vector<Rational> next = in.c[i];
            for (int j = 1; j < n; ++j) next[j] += rows[i][j - 1];
            carry = std::move(next);
        }
        for (int j = 0; j < n && j <= window; ++j)  // remainder = value on the diagonal
            if (!carry[j].is_zero())
                throw std::logic_error("Bivar: dividend does not vanish on the diagonal");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q.c[i][j] = rows[i][j];
        q.clip();
        return q;
    }
};

}  // namespace detail

/// W-table of the regularized two-point function
/// omega_{0,2} - dx1 dx2/(x1-x2)^2, via the unit series (z(u)-z(v))/(u-v).
class W02Table {
public:
    explicit W02Table(int a_max) : a_max_(a_max) {
        int grid = 2 * a_max + 3;
        XSeries xs(grid + 1);
        std::vector<Rational> zc(grid), zp(grid);
        for (int i = 0; i < grid; ++i) {
            zc[i] = xs.z.coeff(i);
            zp[i] = xs.z_prime.coeff(i);
        }
        // S(u,v) = (z(u) - z(v))/(u - v) = sum_k z_k sum_{i+j=k-1} u^i v^j
        detail::Bivar s(grid, grid - 2);
        for (int k = 1; k < grid; ++k)
            for (int i = 0; i < k; ++i) s.c[i][k - 1 - i] += zc[k];
        detail::Bivar num = detail::Bivar::product(zp, zp).mul(s.inverse().mul(s.inverse()));
        detail::Bivar one(grid);
        one.c[0][0] = Rational(1);
        // (z'(u) z'(v)/S^2 - 1)/(u-v)^2
        w_ = num.sub(one).divide_u_minus_v().divide_u_minus_v();
        if (w_.window < 2 * (a_max - 1))
            throw std::logic_error("W02Table: grid too small for the requested index range");
    }

    Rational value(const std::vector<int>& a) const {
        if (a.size() != 2 || a[0] < 1 || a[1] < 1 || a[0] > a_max_ || a[1] > a_max_)
            throw std::invalid_argument("W02Table: bad index");
        return w_.c[a[0] - 1][a[1] - 1];
    }

private:
    int a_max_;
    detail::Bivar w_{1};
};

/// Exact check of W_g(a) = (prod a_i) H°_{g, sort(a)} for all a_i <= a_max.
/// For (0,1) the left side is [x^{a-1}] z(x); for (0,2) it comes from the
/// regularized Bergman kernel; stable cases expand the computed pole-basis form.
inline VerificationReport compare_with_hurwitz(TopologicalRecursion& tr, const HurwitzTable& table,
                                               int g, int n, int a_max) {
    std::string range = "(g,n) = (" + std::to_string(g) + "," + std::to_string(n) +
                        "), a_i <= " + std::to_string(a_max);
    if (table.d_max() < n * a_max || table.b_max() < 2 * g - 2 + n * a_max + n ||
        table.p_budget() < a_max)
        throw std::invalid_argument("compare_with_hurwitz: Hurwitz table caps insufficient");

    std::function<Rational(const std::vector<int>&)> w_of;
    std::optional<WTable> wt;
    std::optional<W02Table> w02;
    std::optional<XSeries> xs;
    if (g == 0 && n == 1) {
        xs.emplace(a_max + 1);
        w_of = [&](const std::vector<int>& a) { return xs->z.coeff(a[0] - 1); };
    } else if (g == 0 && n == 2) {
        w02.emplace(a_max);
        w_of = [&](const std::vector<int>& a) { return w02->value(a); };
    } else {
        wt.emplace(tr.omega(g, n), a_max);
        w_of = [&](const std::vector<int>& a) { return wt->value(a); };
    }

    std::vector<int> a(n, 1);
    for (;;) {
        Rational lhs = w_of(a);
        Rational prod(1);
        for (int ai : a) prod *= Rational(ai);
        Rational rhs = prod * table.connected(g, Partition::from_multiset(a));
        if (lhs != rhs)
            return VerificationReport::fail(
                "tr-bridge", range,
                [&] {
                    std::string s = "a = (";
                    for (size_t i = 0; i < a.size(); ++i)
                        s += (i ? "," : "") + std::to_string(a[i]);
                    return s + "): W = " + lhs.to_string() + ", (prod a) H = " + rhs.to_string();
                }());
        int i = 0;
        while (i < n && ++a[i] > a_max) a[i++] = 1;
        if (i == n) break;
    }
    return VerificationReport::pass("tr-bridge", range);
}

/// Quadratic loop equation certifying level (g, n+1):
/// DF_{g-1,n+2}(z, sigma(z), z_[n]) + sum_{h+k=g, I ⊔ J=[n]} DF_h(z, z_I) DF_k(sigma(z), z_J)
/// (full sum, unstable (0,1)/(0,2) included) is holomorphic at z = 2.
/// Spectators sit at the fixed generic samples z = 3, 5, 7.
inline VerificationReport check_quadratic_loop(TopologicalRecursion& tr, int g, int n, long order,
                                               const std::map<std::pair<int, int>, PoleBasisForm>*
                                                   override_forms = nullptr) {
    std::string range = "(g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ")";
    const SpectralCurve& c = tr.curve();
    BranchData bd(c, order);
    static const long long sample_pool[3] = {3, 5, 7};
    if (n > 3) throw std::invalid_argument("check_quadratic_loop: at most 3 spectators");
    std::vector<Rational> samples;
    for (int i = 0; i < n; ++i) samples.push_back(Rational(sample_pool[i]));

    RationalFunction xp = c.x.derivative();
    Rational bp = c.branch_point;
    RationalFunction id_u(Poly({bp, Rational(1)}));          // z = 2+u
    RationalFunction sigma_u = c.sigma.shift(bp);            // sigma(z)
    RationalFunction xp_u = xp.shift(bp);
    RationalFunction xp_sigma_u = xp.compose(c.sigma).shift(bp);

    auto form_of = [&](int gg, int nn) -> const PoleBasisForm& {
        if (override_forms) {
            auto it = override_forms->find({gg, nn});
            if (it != override_forms->end()) return it->second;
        }
        return tr.omega(gg, nn);
    };

    // spectator constant: 1/((z_i - 2)^k x'(z_i))
    auto spec_const = [&](int idx, int k) {
        Rational w = samples[idx] - bp;
        return Rational(1) / (w.pow(k) * xp.eval(samples[idx]));
    };

    // DF of a stable form with first slot in the z- or sigma(z)-role
    auto df_stable = [&](const PoleBasisForm& form, const std::vector<int>& spectators,
                         bool sigma_role) {
        LaurentExpansion acc = LaurentExpansion::zero(Rational(0), order);
        for (const auto& [key, coeff] : form.terms) {
            LaurentExpansion zpart =
                sigma_role
                    ? laurent_of_rational(
                          RationalFunction(Rational(1)) /
                              ((sigma_u - RationalFunction(Rational(bp))).pow(key[0]) * xp_sigma_u),
                          Rational(0), order)
                    : LaurentExpansion::monomial(Rational(0), -key[0], Rational(1), order) * bd.inv_xp();
            Rational w = coeff;
            for (size_t i = 0; i < spectators.size(); ++i)
                w *= spec_const(spectators[i], key[i + 1]);
            acc += zpart * w;
        }
        return acc;
    };

    auto df01 = [&](bool sigma_role) {
        return laurent_of_rational(sigma_role ? sigma_u : id_u, Rational(0), order);
    };

    auto df02_spec = [&](int idx, bool sigma_role) {
        RationalFunction zi(samples[idx]);
        RationalFunction arg = sigma_role ? sigma_u : id_u;
        RationalFunction xparg = sigma_role ? xp_sigma_u : xp_u;
        RationalFunction f = RationalFunction(Rational(1)) /
                             ((arg - zi) * (arg - zi) * xparg * RationalFunction(xp.eval(samples[idx])));
        return laurent_of_rational(f, Rational(0), order);
    };

    LaurentExpansion total = LaurentExpansion::zero(Rational(0), order);

    // first term: DF_{g-1, n+2}(z, sigma(z), spectators)
    if (g >= 1) {
        if (g == 1 && n == 0) {
            RationalFunction f = RationalFunction(Rational(1)) /
                                 ((id_u - sigma_u) * (id_u - sigma_u) * xp_u * xp_sigma_u);
            total += laurent_of_rational(f, Rational(0), order);
        } else {
            const PoleBasisForm& form = form_of(g - 1, n + 2);
            for (const auto& [key, coeff] : form.terms) {
                LaurentExpansion zpart =
                    LaurentExpansion::monomial(Rational(0), -key[0], Rational(1), order) * bd.inv_xp();
                LaurentExpansion spart = laurent_of_rational(
                    RationalFunction(Rational(1)) /
                        ((sigma_u - RationalFunction(Rational(bp))).pow(key[1]) * xp_sigma_u),
                    Rational(0), order);
                Rational w = coeff;
                for (int i = 0; i < n; ++i) w *= spec_const(i, key[i + 2]);
                total += zpart * spart * w;
            }
        }
    }

    // full quadratic sum
    for (int h = 0; h <= g; ++h) {
        int k = g - h;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> is, js;
            for (int i = 0; i < n; ++i) (mask >> i & 1u) ? is.push_back(i) : js.push_back(i);
            auto df_factor = [&](int gg, const std::vector<int>& subset, bool sigma_role) {
                int arity = static_cast<int>(subset.size()) + 1;
                if (gg == 0 && arity == 1) return df01(sigma_role);
                if (gg == 0 && arity == 2) return df02_spec(subset[0], sigma_role);
                return df_stable(form_of(gg, arity), subset, sigma_role);
            };
            total += df_factor(h, is, false) * df_factor(k, js, true);
        }
    }

    if (total.trunc_order() < 0)
        throw std::logic_error("check_quadratic_loop: truncation insufficient");
    if (total.valuation() < 0) {
        long v = total.valuation();
        return VerificationReport::fail("quadratic-loop", range,
                                        "pole of order " + std::to_string(-v) + " at u = 0, coeff " +
                                            total.coeff(v).to_string());
    }
    return VerificationReport::pass("quadratic-loop", range);
}

}  // namespace mhn
