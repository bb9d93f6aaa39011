#pragma once

#include <functional>

#include "mhn/character.hpp"
#include "mhn/partition.hpp"
#include "mhn/rational.hpp"
#include "mhn/truncated_series.hpp"

namespace mhn {

/// Index (g, mu) of a monotone Hurwitz number. The transposition count
/// b = 2g - 2 + d + l(mu) must be non-negative; g may be negative in the
/// disconnected setting.
struct HurwitzIndex {
    int g;
    Partition mu;

    HurwitzIndex(int genus, Partition m) : g(genus), mu(std::move(m)) {
        if (mu.empty()) throw std::invalid_argument("HurwitzIndex: mu must be nonempty");
        if (b() < 0) throw std::invalid_argument("HurwitzIndex: b = 2g-2+d+l(mu) is negative");
    }

    int d() const { return mu.size(); }
    int ell() const { return mu.length(); }
    int b() const { return 2 * g - 2 + d() + ell(); }
};

/// h_0..h_bmax of the given values, as exact integers:
/// [t^b] prod_i 1/(1 - t x_i), computed by the prefix recurrence per factor.
inline std::vector<BigInt> h_series(const std::vector<long long>& xs, int b_max) {
    std::vector<BigInt> s(b_max + 1);
    s[0] = BigInt(1);
    for (long long x : xs) {
        if (x == 0) continue;
        BigInt c(x);
        for (int k = 1; k <= b_max; ++k) s[k] += c * s[k - 1];
    }
    return s;
}

/// Complete homogeneous symmetric function h_b at the content vector.
inline Rational h_complete(const std::vector<long long>& xs, int b) {
    if (b < 0) throw std::invalid_argument("h_complete: negative degree");
    return Rational(h_series(xs, b)[b]);
}

/// sum_lambda dim(lambda) chi_lambda(mu) h_b(contents lambda); the disconnected
/// number before the 1/(d! prod mu_i) normalization.
inline BigInt character_h_sum(const Partition& mu, int b) {
    BigInt total;
    for (const auto& lam : partitions_of(mu.size()))
        total += dimension(lam) * character(lam, mu) * h_series(contents(lam), b)[b];
    return total;
}

inline BigInt product_of_parts(const Partition& mu) {
    BigInt p(1);
    for (int part : mu.parts) p *= BigInt(part);
    return p;
}

/// prod_j m_j! over the part multiplicities m_j of mu.
inline BigInt multiplicity_factorial(const Partition& mu) {
    BigInt a(1);
    int run = 1;
    for (int i = 1; i <= mu.length(); ++i) {
        if (i < mu.length() && mu.parts[i] == mu.parts[i - 1]) {
            ++run;
            continue;
        }
        a *= BigInt::factorial(static_cast<unsigned>(run));
        run = 1;
    }
    return a;
}

/// z_mu = prod mu_i * prod m_j!, the centralizer order of the class mu.
inline BigInt z_mu(const Partition& mu) { return product_of_parts(mu) * multiplicity_factorial(mu); }

/// Disconnected monotone Hurwitz number from the character-sum formula.
inline Rational disconnected_hurwitz(const HurwitzIndex& idx) {
    return Rational(character_h_sum(idx.mu, idx.b()),
                    BigInt::factorial(static_cast<unsigned>(idx.d())) * product_of_parts(idx.mu));
}

namespace detail {

constexpr int kOracleMaxD = 6;
constexpr int kOracleMaxB = 6;

inline std::vector<int> canonical_permutation(const Partition& mu) {
    // cycles filled with consecutive integers: (1..mu_1)(mu_1+1..mu_1+mu_2)...
    int d = mu.size();
    std::vector<int> sigma(d);
    int start = 0;
    for (int part : mu.parts) {
        for (int i = 0; i < part; ++i) sigma[start + i] = start + (i + 1) % part;
        start += part;
    }
    return sigma;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

/// Counts monotone tuples (tau_1..tau_b), tau_i = (s_i t_i) with s_i < t_i and
/// t_1 <= ... <= t_b, whose right-to-left composition equals sigma. When
/// `transitive` is set, only tuples where <tau_1..tau_b, sigma> acts
/// transitively are counted.
inline long long count_monotone(const Partition& mu, int b, bool transitive) {
    int d = mu.size();
    std::vector<int> sigma = canonical_permutation(mu);
    long long count = 0;
    std::vector<int> prod(d);  // running product tau_1 ... tau_i
    for (int i = 0; i < d; ++i) prod[i] = i;
    std::vector<std::pair<int, int>> edges;

    auto leaf = [&] {
        if (prod != sigma) return;
        if (transitive) {
            Dsu dsu(d);
            for (auto [s, t] : edges) dsu.join(s, t);
            int start = 0;
            for (int part : mu.parts) {
                for (int i = 1; i < part; ++i) dsu.join(start, start + i);
                start += part;
            }
            int root = dsu.find(0);
            for (int i = 1; i < d; ++i)
                if (dsu.find(i) != root) return;
        }
        ++count;
    };

    // apply (s t) on the right of prod: new[x] = prod[tau(x)]
    std::function<void(int, int)> rec = [&](int depth, int t_min) {
        if (depth == b) {
            leaf();
            return;
        }
        for (int t = t_min; t < d; ++t) {
            for (int s = 0; s < t; ++s) {
                std::swap(prod[s], prod[t]);
                edges.emplace_back(s, t);
                rec(depth + 1, t);
                edges.pop_back();
                std::swap(prod[s], prod[t]);
            }
        }
    };

    // parity: b transpositions compose to a permutation of sign (-1)^b
    if (((d - mu.length()) % 2) != (b % 2)) return 0;
    rec(0, 1);
    return count;
}

}  // namespace detail

/// Brute-force monotone factorization count / prod(mu_i); the independent oracle
/// for the character-sum formula. Budget d <= 6, b <= 6.
inline Rational oracle_disconnected(const Partition& mu, int b) {
    if (mu.empty() || mu.size() > detail::kOracleMaxD || b > detail::kOracleMaxB || b < 0)
        throw std::invalid_argument("oracle_disconnected: out of budget (d <= 6, b <= 6)");
    return Rational(BigInt(detail::count_monotone(mu, b, false)), product_of_parts(mu));
}

/// Same count restricted to transitive tuples; the oracle for connected numbers.
inline Rational oracle_connected(const Partition& mu, int b) {
    if (mu.empty() || mu.size() > detail::kOracleMaxD || b > detail::kOracleMaxB || b < 0)
        throw std::invalid_argument("oracle_connected: out of budget (d <= 6, b <= 6)");
    return Rational(BigInt(detail::count_monotone(mu, b, true)), product_of_parts(mu));
}

/// Partition function of disconnected monotone numbers,
/// Z(s, t, p) = 1 + sum over (d, mu, b) of s^d t^b (H•_{g,mu} / prod_j m_j!) p_mu.
///
/// The weight of p_mu is the class weight 1/z_mu of the permutation-sum
/// generating series; with it the cut-and-join equation holds coefficientwise
/// and log Z generates the transitive counts. Weighting by 1/d! instead fails
/// both, already in the s^2 t p_2 slot.
///
/// Only mu with parts <= M are kept: parts above M can never contribute to
/// extracted coefficients with parts <= M, because products of p-monomials
/// only merge part multisets.
inline TruncatedSeries build_partition_function(int d_max, int b_max, int M = 0) {
    if (M == 0) M = d_max;
    TruncatedSeries z = TruncatedSeries::one({M, d_max, b_max});
    for (int d = 1; d <= d_max; ++d) {
        auto lams = partitions_of(d);
        std::vector<BigInt> dims;
        std::vector<std::vector<BigInt>> hs;
        dims.reserve(lams.size());
        hs.reserve(lams.size());
        for (const auto& lam : lams) {
            dims.push_back(dimension(lam));
            hs.push_back(h_series(contents(lam), b_max));
        }
        BigInt dfact = BigInt::factorial(static_cast<unsigned>(d));
        for (const auto& mu : partitions_of(d)) {
            if (mu.parts[0] > M) continue;
            std::vector<BigInt> nums(b_max + 1);
            for (size_t i = 0; i < lams.size(); ++i) {
                BigInt w = dims[i] * character(lams[i], mu);
                if (w.is_zero()) continue;
                for (int b = (d + mu.length()) % 2; b <= b_max; b += 2) nums[b] += w * hs[i][b];
            }
            BigInt den = dfact * z_mu(mu);
            std::vector<int> pexp(M, 0);
            for (int part : mu.parts) ++pexp[part - 1];
            for (int b = (d + mu.length()) % 2; b <= b_max; b += 2)
                z.add_term(d, b, pexp, Rational(nums[b], den));
        }
    }
    return z;
}

/// log Z built once, then queried for connected numbers:
/// H°_{g,mu} = prod_j m_j! * [s^d t^b p_mu] log Z (so that H° matches the
/// transitive count divided by prod mu_i, the same normalization as H•).
class HurwitzTable {
public:
    HurwitzTable(int d_max, int b_max, int M = 0)
        : d_max_(d_max), b_max_(b_max), m_(M == 0 ? d_max : M),
          log_z_(series_log(build_partition_function(d_max, b_max, m_))) {}

    Rational connected(int g, const Partition& mu) const {
        HurwitzIndex idx(g, mu);
        return connected_coeff(idx.d(), idx.b(), mu);
    }

    /// prod m_j! * [s^d t^b p_mu] log Z for any parity-consistent slot (g may be < 0).
    Rational connected_coeff(int d, int b, const Partition& mu) const {
        if (d != mu.size()) throw std::invalid_argument("HurwitzTable: |mu| != d");
        if (d > d_max_ || b > b_max_ || (!mu.empty() && mu.parts[0] > m_))
            throw std::invalid_argument("HurwitzTable: index beyond table caps");
        std::vector<int> pexp(m_, 0);
        for (int part : mu.parts) ++pexp[part - 1];
        return log_z_.coeff(d, b, pexp) * Rational(multiplicity_factorial(mu));
    }

    const TruncatedSeries& log_z() const { return log_z_; }
    int d_max() const { return d_max_; }
    int b_max() const { return b_max_; }
    int p_budget() const { return m_; }

private:
    int d_max_, b_max_, m_;
    TruncatedSeries log_z_;
};

/// Connected monotone Hurwitz number via log of the partition function.
/// Caps must cover the index; too-small caps are an error, never a truncation.
inline Rational connected_hurwitz(const HurwitzIndex& idx, int d_max, int b_max, int M = 0) {
    if (idx.d() > d_max || idx.b() > b_max)
        throw std::invalid_argument("connected_hurwitz: caps too small for the index");
    return HurwitzTable(d_max, b_max, M).connected(idx.g, idx.mu);
}

}  // namespace mhn
