#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhn/rational.hpp"

namespace mhn {

/// Truncated polynomial algebra over Rational in s, t and power sums p_1..p_M.
/// The quotient keeps monomials with s-degree <= d_max, t-degree <= b_max and
/// total p-weight sum(i * e_i) <= d_max; everything else truncates away.
///
/// Monomials pack into a single 64-bit key with s in the top bits, so map order
/// is the (s, t, p-vector) lexicographic order used for all serialized output.
class TruncatedSeries {
public:
    struct Caps {
        int m;      // highest p-index
        int d_max;  // s-degree and p-weight cap
        int b_max;  // t-degree cap
        bool operator==(const Caps&) const = default;
    };

    struct Mono {
        int s = 0;
        int t = 0;
        std::vector<int> p;  // exponent of p_(i+1) at index i

        std::string to_string() const {
            std::string r;
            auto app = [&](const std::string& v, int e) {
                if (e == 0) return;
                if (!r.empty()) r += " ";
                r += v;
                if (e != 1) r += "^" + std::to_string(e);
            };
            app("s", s);
            app("t", t);
            for (size_t i = 0; i < p.size(); ++i) app("p" + std::to_string(i + 1), p[i]);
            return r.empty() ? "1" : r;
        }
    };

    explicit TruncatedSeries(Caps caps) : caps_(caps) {
        if (caps.m < 1 || caps.d_max < 0 || caps.b_max < 0)
            throw std::invalid_argument("TruncatedSeries: bad caps");
        build_layout();
    }

    static TruncatedSeries one(Caps caps) {
        TruncatedSeries r(caps);
        r.terms_[0] = Rational(1);
        return r;
    }

    const Caps& caps() const { return caps_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    static int weight(const std::vector<int>& p) {
        int w = 0;
        for (size_t i = 0; i < p.size(); ++i) w += static_cast<int>(i + 1) * p[i];
        return w;
    }

    /// Adds c * s^s t^t p^e; silently truncated when the monomial leaves the quotient.
    void add_term(int s, int t, const std::vector<int>& p, const Rational& c) {
        if (c.is_zero()) return;
        if (s > caps_.d_max || t > caps_.b_max || weight(p) > caps_.d_max) return;
        uint64_t key = encode(s, t, p);
        Rational& slot = terms_[key];
        slot += c;
        if (slot.is_zero()) terms_.erase(key);
    }

    Rational coeff(int s, int t, const std::vector<int>& p) const {
        if (s > caps_.d_max || t > caps_.b_max || weight(p) > caps_.d_max)
            throw std::out_of_range("TruncatedSeries: coefficient beyond caps");
        auto it = terms_.find(encode(s, t, p));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    template <typename F>
    void for_each(F&& fn) const {
        for (const auto& [k, c] : terms_) fn(decode(k), c);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_caps(b);
        TruncatedSeries r = a;
        for (const auto& [k, c] : b.terms_) {
            Rational& slot = r.terms_[k];
            slot += c;
            if (slot.is_zero()) r.terms_.erase(k);
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) {
        if (s.is_zero()) return TruncatedSeries(a.caps_);
        TruncatedSeries r = a;
        for (auto& [k, c] : r.terms_) c = c * s;
        return r;
    }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) { return a * s; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_caps(b);
        TruncatedSeries r(a.caps_);
        std::vector<Snap> sa = a.snapshot(), sb = b.snapshot();
        for (const auto& ta : sa) {
            for (const auto& tb : sb) {
                if (ta.s + tb.s > a.caps_.d_max) break;  // sb sorted by s
                if (ta.t + tb.t > a.caps_.b_max || ta.w + tb.w > a.caps_.d_max) continue;
                Rational& slot = r.terms_[ta.key + tb.key];
                slot += *ta.c * *tb.c;
            }
        }
        r.prune_zeros();
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.caps_ == b.caps_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// term-by-term s * d/ds
    TruncatedSeries s_derivative() const {
        TruncatedSeries r(caps_);
        for (const auto& [k, c] : terms_) {
            int s = field(k, 0);
            if (s == 0) continue;
            r.terms_[k] = c * Rational(s);
        }
        return r;
    }

    /// Multiply by s^ds t^dt p_j^de (j is 1-based; j = 0 for none).
    TruncatedSeries shifted(int ds, int dt, int j = 0, int de = 0) const {
        TruncatedSeries r(caps_);
        for (const auto& [k, c] : terms_) {
            Mono m = decode(k);
            m.s += ds;
            m.t += dt;
            if (j > 0) m.p[j - 1] += de;
            r.add_term(m.s, m.t, m.p, c);
        }
        return r;
    }

    /// First monomial (in serialization order) whose coefficients differ between
    /// a and b within the window s <= s_cap, t <= t_cap.
    struct Difference {
        Mono mono;
        Rational lhs, rhs;
    };
    static std::optional<Difference> first_difference(const TruncatedSeries& a,
                                                      const TruncatedSeries& b, int s_cap,
                                                      int t_cap) {
        a.require_same_caps(b);
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        auto in_window = [&](uint64_t k) {
            return a.field(k, 0) <= s_cap && a.field(k, 1) <= t_cap;
        };
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            while (ia != a.terms_.end() && !in_window(ia->first)) ++ia;
            while (ib != b.terms_.end() && !in_window(ib->first)) ++ib;
            if (ia == a.terms_.end() && ib == b.terms_.end()) break;
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                return Difference{a.decode(ia->first), ia->second, Rational(0)};
            }
            if (ia == a.terms_.end() || ib->first < ia->first) {
                return Difference{a.decode(ib->first), Rational(0), ib->second};
            }
            if (ia->second != ib->second)
                return Difference{a.decode(ia->first), ia->second, ib->second};
            ++ia;
            ++ib;
        }
        return std::nullopt;
    }

    /// log of a series with constant term 1. Computed exactly within the caps;
    /// the usual log(1+w) power sum and the s-graded recursion agree, the
    /// recursion is just cheaper when every non-constant term carries s.
    TruncatedSeries log() const {
        if (constant_term() != Rational(1))
            throw std::domain_error("TruncatedSeries: log needs constant term 1");
        if (s_graded()) return log_graded();
        return log_powersum();
    }

    /// exp of a series with zero constant term.
    TruncatedSeries exp() const {
        if (!constant_term().is_zero())
            throw std::domain_error("TruncatedSeries: exp needs zero constant term");
        if (s_graded()) return exp_graded();
        return exp_powersum();
    }

    /// (1/2) sum_{i,j} [ (i+j) p_i p_j d/dp_{i+j} + i j p_{i+j} d^2/dp_i dp_j ],
    /// expanded literally over ordered pairs (i, j) with i + j <= M.
    TruncatedSeries apply_cut_join() const {
        TruncatedSeries r(caps_);
        Rational half(1, 2);
        for (const auto& [k, c] : terms_) {
            Mono m = decode(k);
            for (int i = 1; i + 1 <= caps_.m; ++i) {
                for (int j = 1; i + j <= caps_.m; ++j) {
                    int ij = i + j;
                    // cut: (i+j) p_i p_j d/dp_{i+j}
                    if (m.p[ij - 1] > 0) {
                        Mono n = m;
                        Rational f = c * half * Rational(ij) * Rational(n.p[ij - 1]);
                        n.p[ij - 1] -= 1;
                        n.p[i - 1] += 1;
                        n.p[j - 1] += 1;
                        r.add_term(n.s, n.t, n.p, f);
                    }
                    // join: i j p_{i+j} d^2/dp_i dp_j
                    long long mult;
                    if (i == j)
                        mult = static_cast<long long>(m.p[i - 1]) * (m.p[i - 1] - 1);
                    else
                        mult = static_cast<long long>(m.p[i - 1]) * m.p[j - 1];
                    if (mult > 0) {
                        Mono n = m;
                        Rational f = c * half * Rational(static_cast<long long>(i) * j) * Rational(mult);
                        n.p[i - 1] -= 1;
                        n.p[j - 1] -= 1;
                        n.p[ij - 1] += 1;
                        r.add_term(n.s, n.t, n.p, f);
                    }
                }
            }
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.to_string() + "*" + decode(k).to_string();
        }
        return s;
    }

private:
    struct Snap {
        uint64_t key;
        int s, t, w;
        const Rational* c;
    };

    Caps caps_;
    std::vector<int> shifts_;   // field positions: [0]=s, [1]=t, [2..]=p exponents
    std::vector<uint64_t> masks_;
    std::map<uint64_t, Rational> terms_;

    void build_layout() {
        std::vector<int> widths;
        widths.push_back(std::bit_width(static_cast<unsigned>(caps_.d_max)));
        widths.push_back(std::bit_width(static_cast<unsigned>(caps_.b_max)));
        for (int i = 1; i <= caps_.m; ++i)
            widths.push_back(std::bit_width(static_cast<unsigned>(caps_.d_max / i)));
        for (auto& w : widths)
            if (w == 0) w = 1;
        int total = 0;
        for (int w : widths) total += w;
        if (total > 64)
            throw std::invalid_argument("TruncatedSeries: caps exceed the 64-bit monomial budget");
        shifts_.resize(widths.size());
        masks_.resize(widths.size());
        int pos = 64;
        for (size_t i = 0; i < widths.size(); ++i) {
            pos -= widths[i];
            shifts_[i] = pos;
            masks_[i] = ((1ULL << widths[i]) - 1) << pos;
        }
    }

    uint64_t encode(int s, int t, const std::vector<int>& p) const {
        if (static_cast<int>(p.size()) > caps_.m)
            for (size_t i = caps_.m; i < p.size(); ++i)
                if (p[i] != 0) throw std::out_of_range("TruncatedSeries: p-index beyond budget");
        uint64_t k = (static_cast<uint64_t>(s) << shifts_[0]) | (static_cast<uint64_t>(t) << shifts_[1]);
        for (size_t i = 0; i < p.size() && static_cast<int>(i) < caps_.m; ++i)
            k |= static_cast<uint64_t>(p[i]) << shifts_[i + 2];
        return k;
    }

    int field(uint64_t k, size_t idx) const {
        return static_cast<int>((k & masks_[idx]) >> shifts_[idx]);
    }

    Mono decode(uint64_t k) const {
        Mono m;
        m.s = field(k, 0);
        m.t = field(k, 1);
        m.p.resize(caps_.m);
        for (int i = 0; i < caps_.m; ++i) m.p[i] = field(k, i + 2);
        return m;
    }

    void require_same_caps(const TruncatedSeries& o) const {
        if (!(caps_ == o.caps_)) throw std::invalid_argument("TruncatedSeries: mixed caps");
    }

    void prune_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    std::vector<Snap> snapshot() const {
        std::vector<Snap> v;
        v.reserve(terms_.size());
        for (const auto& [k, c] : terms_) {
            Mono m = decode(k);
            v.push_back(Snap{k, m.s, m.t, weight(m.p), &c});
        }
        return v;  // map order: already sorted by s (top bits)
    }

    bool s_graded() const {
        for (const auto& [k, c] : terms_)
            if (field(k, 0) == 0 && k != 0) return false;
        return true;
    }

    // s-degree slice helpers: keys with s-degree d form one contiguous key range
    std::vector<Snap> slice(int d) const {
        std::vector<Snap> v;
        uint64_t from = static_cast<uint64_t>(d) << shifts_[0];
        for (auto it = terms_.lower_bound(from); it != terms_.end(); ++it) {
            if (field(it->first, 0) != d) break;
            Mono m = decode(it->first);
            v.push_back(Snap{it->first, m.s, m.t, weight(m.p), &it->second});
        }
        return v;
    }

    static void accumulate_product(TruncatedSeries& acc, const std::vector<Snap>& a,
                                   const std::vector<Snap>& b, const Rational& scale) {
        for (const auto& ta : a)
            for (const auto& tb : b) {
                if (ta.t + tb.t > acc.caps_.b_max || ta.w + tb.w > acc.caps_.d_max) continue;
                Rational& slot = acc.terms_[ta.key + tb.key];
                slot += *ta.c * *tb.c * scale;
            }
    }

    TruncatedSeries log_graded() const {
        // Z = exp F  =>  d Z_d = sum_{d'=1..d} d' F_{d'} Z_{d-d'}
        TruncatedSeries f(caps_);
        for (int d = 1; d <= caps_.d_max; ++d) {
            TruncatedSeries acc(caps_);
            for (int dp = 1; dp < d; ++dp)
                accumulate_product(acc, f.slice(dp), slice(d - dp), Rational(dp, d));
            acc.prune_zeros();
            for (const auto& sn : slice(d)) f.terms_[sn.key] = *sn.c;
            for (const auto& [k, c] : acc.terms_) {
                Rational& slot = f.terms_[k];
                slot -= c;
                if (slot.is_zero()) f.terms_.erase(k);
            }
        }
        return f;
    }

    TruncatedSeries exp_graded() const {
        TruncatedSeries z = one(caps_);
        for (int d = 1; d <= caps_.d_max; ++d) {
            TruncatedSeries acc(caps_);
            for (int dp = 1; dp <= d; ++dp)
                accumulate_product(acc, slice(dp), z.slice(d - dp), Rational(dp, d));
            acc.prune_zeros();
            for (const auto& [k, c] : acc.terms_) z.terms_[k] = c;
        }
        return z;
    }

    TruncatedSeries log_powersum() const {
        TruncatedSeries w = *this;
        w.terms_.erase(0);
        TruncatedSeries f(caps_), p = w;
        for (int k = 1; !p.is_zero(); ++k) {
            f += p * Rational((k % 2) ? 1 : -1, k);
            p *= w;
        }
        return f;
    }

    TruncatedSeries exp_powersum() const {
        TruncatedSeries z = one(caps_), p = *this;
        Rational inv_fact(1);
        for (int k = 1; !p.is_zero(); ++k) {
            inv_fact = inv_fact / Rational(k);
            z += p * inv_fact;
            p *= *this;
        }
        return z;
    }
};

/// Free-function spellings of the series operations.
inline TruncatedSeries series_log(const TruncatedSeries& z) { return z.log(); }
inline TruncatedSeries series_exp(const TruncatedSeries& f) { return f.exp(); }
inline TruncatedSeries series_apply_cut_join(const TruncatedSeries& f) { return f.apply_cut_join(); }

}  // namespace mhn
