#pragma once

#include <optional>
#include <string>

#include "mhn/hurwitz.hpp"
#include "mhn/laurent.hpp"
#include "mhn/parallel.hpp"
#include "mhn/partition.hpp"
#include "mhn/poly.hpp"

namespace mhn {

/// Outcome of an exact identity sweep. A failing report carries the first
/// witness (diagram or monomial, with both side values).
struct VerificationReport {
    std::string identity;
    std::string range;
    bool verified = true;
    std::optional<std::string> witness;

    static VerificationReport pass(std::string id, std::string range) {
        return {std::move(id), std::move(range), true, std::nullopt};
    }
    static VerificationReport fail(std::string id, std::string range, std::string witness) {
        return {std::move(id), std::move(range), false, std::move(witness)};
    }
};

/// Coefficientwise check of the cut-and-join equation with the 1/(2t) cleared:
/// (1/2)[s d/ds - s p_1] Z  ==  t * cut_join(Z), on all monomials with
/// s-degree <= d_max and t-degree <= b_max (Z built one t-order higher).
inline VerificationReport verify_cut_and_join(int d_max, int b_max) {
    std::string range = "s-degree <= " + std::to_string(d_max) + ", t-degree <= " + std::to_string(b_max);
    if (d_max < 1) return VerificationReport::pass("cut-and-join", range + " (empty)");
    TruncatedSeries z = build_partition_function(d_max, b_max + 1);
    TruncatedSeries lhs = (z.s_derivative() - z.shifted(1, 0, 1, 1)) * Rational(1, 2);
    TruncatedSeries rhs = series_apply_cut_join(z).shifted(0, 1);
    auto diff = TruncatedSeries::first_difference(lhs, rhs, d_max, b_max);
    if (!diff) return VerificationReport::pass("cut-and-join", range);
    return VerificationReport::fail("cut-and-join", range,
                                    diff->mono.to_string() + ": lhs " + diff->lhs.to_string() +
                                        " != rhs " + diff->rhs.to_string());
}

namespace detail {

/// Left side of the content lemma: sum over corner removals of cr(box)/H_lambda.
inline Rational lemma_lhs(const Partition& nu) {
    Rational s(0);
    for (const auto& [lam, box] : remove_corners(nu)) {
        long long cr = box.col - box.row;
        BigInt h = lam.empty() ? BigInt(1) : hook_product(lam);
        s += Rational(BigInt(cr), h);
    }
    return s;
}

inline Rational lemma_rhs(const Partition& nu) {
    return Rational(BigInt(2) * BigInt(content_sum(nu)), hook_product(nu));
}

/// Fan a per-diagram check over workers; reports the first failure in
/// enumeration order regardless of scheduling.
inline VerificationReport sweep_diagrams(const std::string& identity, int n_max, unsigned workers,
                                         const std::function<std::optional<std::string>(const Partition&)>& check) {
    std::string range = "|nu| <= " + std::to_string(n_max);
    std::vector<Partition> all;
    for (int d = 1; d <= n_max; ++d)
        for (auto& nu : partitions_of(d)) all.push_back(std::move(nu));
    std::vector<std::optional<std::string>> results(all.size());
    parallel_for(all.size(), workers, [&](size_t i) { results[i] = check(all[i]); });
    for (const auto& r : results)
        if (r) return VerificationReport::fail(identity, range, *r);
    return VerificationReport::pass(identity, range);
}

}  // namespace detail

/// For every nu with 1 <= |nu| <= n_max:
/// sum_{lambda in nu\1} cr(box)/H_lambda == (2/H_nu) sum_{box in nu} cr(box).
inline VerificationReport verify_content_lemma(int n_max, unsigned workers = 1) {
    return detail::sweep_diagrams("content-lemma", n_max, workers,
                                  [](const Partition& nu) -> std::optional<std::string> {
                                      Rational lhs = detail::lemma_lhs(nu);
                                      Rational rhs = detail::lemma_rhs(nu);
                                      if (lhs == rhs) return std::nullopt;
                                      return "nu = " + nu.to_string() + ": " + lhs.to_string() +
                                             " != " + rhs.to_string();
                                  });
}

/// g_nu(x) = prod_{i=1..|nu|} (x + nu_i - i), with nu_i = 0 past the last row.
inline Poly han_g_function(const Partition& nu) {
    Poly g(Rational(1));
    for (int i = 1; i <= nu.size(); ++i) {
        long long c = nu.part(i - 1) - i;
        g *= Poly({Rational(c), Rational(1)});
    }
    return g;
}

/// Polynomial identity sum_{lambda in nu\1} g_lambda(x)/H_lambda ==
/// (g_nu(x+1) - g_nu(x))/H_nu, checked coefficientwise.
inline VerificationReport verify_han_identity(int n_max, unsigned workers = 1) {
    if (n_max < 1)
        return VerificationReport::pass("han-identity",
                                        "|nu| <= " + std::to_string(n_max) + " (empty)");
    return detail::sweep_diagrams(
        "han-identity", n_max, workers, [](const Partition& nu) -> std::optional<std::string> {
            Poly lhs;
            for (const auto& [lam, box] : remove_corners(nu)) {
                BigInt h = lam.empty() ? BigInt(1) : hook_product(lam);
                lhs += han_g_function(lam) * Rational(BigInt(1), h);
            }
            Poly gnu = han_g_function(nu);
            Poly rhs =
                (poly_eval_shift(gnu, Rational(1)) - gnu) * Rational(BigInt(1), hook_product(nu));
            if (lhs == rhs) return std::nullopt;
            return "nu = " + nu.to_string() + ": " + lhs.to_string() + " != " + rhs.to_string();
        });
}

namespace detail {

/// w^deg(p) * p(c + 1/w) as a polynomial in w.
inline Poly substitute_inverse(const Poly& p, const Rational& c) {
    int deg = p.degree();
    if (deg < 0) return Poly();
    Poly acc;
    // p(c + 1/w) * w^deg = sum_k p_k (1 + c w)^k w^{deg-k}
    Poly one_plus_cw({Rational(1), c});
    std::vector<Poly> pows(deg + 1);
    pows[0] = Poly(Rational(1));
    for (int k = 1; k <= deg; ++k) pows[k] = pows[k - 1] * one_plus_cw;
    for (int k = 0; k <= deg; ++k)
        acc += Poly::monomial(deg - k, Rational(1)) * pows[k] * p.coeff(k);
    return acc;
}

struct W3Sides {
    Rational lhs_w3, rhs_w3;       // computed from the substituted expansions
    Rational lhs_formula, rhs_formula;  // the displayed closed forms
};

inline W3Sides w3_sides(const Partition& nu) {
    int n = nu.size();
    Rational half_n(n, 2);
    BigInt hnu = hook_product(nu);

    Poly pnu = substitute_inverse(han_g_function(nu), half_n);
    // left side: sum_lambda w * P_lambda / (H_lambda * P_nu)
    RationalFunction lhs_fun;
    Rational cr_over_h(0);
    for (const auto& [lam, box] : remove_corners(nu)) {
        BigInt h = lam.empty() ? BigInt(1) : hook_product(lam);
        Poly plam = substitute_inverse(han_g_function(lam), half_n);
        lhs_fun += RationalFunction(Poly::monomial(1, Rational(BigInt(1), h)) * plam, pnu);
        cr_over_h += Rational(BigInt(box.col - box.row), h);
    }
    // right side: (Q_nu / P_nu - 1) / H_nu with Q from the shift x -> x + 1
    Poly qnu = substitute_inverse(poly_eval_shift(han_g_function(nu), Rational(1)), half_n);
    RationalFunction rhs_fun =
        (RationalFunction(qnu, pnu) - RationalFunction(Rational(1))) * RationalFunction(Rational(BigInt(1), hnu));

    W3Sides s;
    s.lhs_w3 = laurent_of_rational(lhs_fun, Rational(0), 3).coeff(3);
    s.rhs_w3 = laurent_of_rational(rhs_fun, Rational(0), 3).coeff(3);
    Rational shift = Rational(BigInt(static_cast<long long>(n)).pow(3), BigInt(4) * hnu);
    s.lhs_formula = shift + cr_over_h;
    s.rhs_formula = shift + Rational(BigInt(2) * BigInt(content_sum(nu)), hnu);
    return s;
}

}  // namespace detail

/// The w^3-coefficient reduction of the Han identity under x = |nu|/2 + 1/w.
/// Column diagrams (1^k) go through the direct lemma check instead, as the
/// closed-form coefficients are derived only for l(nu) < |nu|.
inline VerificationReport verify_w3_reduction(int n_max, unsigned workers = 1) {
    return detail::sweep_diagrams(
        "w3-reduction", n_max, workers, [](const Partition& nu) -> std::optional<std::string> {
            if (nu.length() == nu.size()) {
                if (detail::lemma_lhs(nu) != detail::lemma_rhs(nu))
                    return "column nu = " + nu.to_string() + ": direct lemma check failed";
                return std::nullopt;
            }
            auto s = detail::w3_sides(nu);
            if (s.lhs_w3 == s.lhs_formula && s.rhs_w3 == s.rhs_formula && s.lhs_w3 == s.rhs_w3)
                return std::nullopt;
            return "nu = " + nu.to_string() + ": w3 lhs " + s.lhs_w3.to_string() + " (formula " +
                   s.lhs_formula.to_string() + "), w3 rhs " + s.rhs_w3.to_string() + " (formula " +
                   s.rhs_formula.to_string() + ")";
        });
}

}  // namespace mhn
