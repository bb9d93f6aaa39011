#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "mhn/bigint.hpp"
#include "mhn/rational.hpp"

namespace mhn {

/// Integer partition / Young diagram: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;

    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i - 1] < parts[i])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    /// Sorts a multiset of positive integers into a partition.
    static Partition from_multiset(std::vector<int> v) {
        std::sort(v.rbegin(), v.rend());
        return Partition(std::move(v));
    }

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int part(int i) const { return i < length() ? parts[i] : 0; }  // 0-based, padded

    Partition transpose() const {
        if (parts.empty()) return Partition();
        std::vector<int> t(parts[0], 0);
        for (int p : parts)
            for (int c = 0; c < p; ++c) ++t[c];
        return Partition(std::move(t));
    }

    /// Text format used by the CLI and JSON output: "3,1,1"; empty partition is "".
    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s;
    }

    static Partition parse(const std::string& s) {
        std::vector<int> v;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            v.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
        return Partition(std::move(v));
    }

    auto operator<=>(const Partition&) const = default;
};

struct Box {
    int row = 0;  // 1-based
    int col = 0;

    bool operator==(const Box&) const = default;
};

/// Contents col - row in row-major order; length |lambda|.
inline std::vector<long long> contents(const Partition& lambda) {
    std::vector<long long> c;
    c.reserve(lambda.size());
    for (int r = 0; r < lambda.length(); ++r)
        for (int col = 1; col <= lambda.parts[r]; ++col) c.push_back(col - (r + 1));
    return c;
}

inline long long content_sum(const Partition& lambda) {
    long long s = 0;
    for (long long c : contents(lambda)) s += c;
    return s;
}

/// Product of all hook lengths H_nu.
inline BigInt hook_product(const Partition& nu) {
    BigInt h(1);
    Partition t = nu.transpose();
    for (int r = 0; r < nu.length(); ++r)
        for (int c = 0; c < nu.parts[r]; ++c) {
            long long hook = (nu.parts[r] - (c + 1)) + (t.parts[c] - (r + 1)) + 1;
            h *= BigInt(hook);
        }
    return h;
}

/// dim nu = |nu|! / H_nu; divisibility is asserted.
inline BigInt dimension(const Partition& nu) {
    return BigInt::divexact(BigInt::factorial(static_cast<unsigned>(nu.size())), hook_product(nu));
}

/// All ways to remove one corner box, largest row first.
inline std::vector<std::pair<Partition, Box>> remove_corners(const Partition& nu) {
    if (nu.empty()) throw std::invalid_argument("remove_corners: empty partition");
    std::vector<std::pair<Partition, Box>> out;
    for (int r = 0; r < nu.length(); ++r) {
        if (r + 1 < nu.length() && nu.parts[r] == nu.parts[r + 1]) continue;
        std::vector<int> p = nu.parts;
        Box box{r + 1, p[r]};
        if (--p[r] == 0) p.erase(p.begin() + r);
        out.emplace_back(Partition(std::move(p)), box);
    }
    return out;
}

namespace detail {
inline void gen_partitions(int d, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (d == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int first = std::min(d, max_part); first >= 1; --first) {
        cur.push_back(first);
        gen_partitions(d - first, first, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// Partitions of d in reverse-lexicographic order: (d) first, (1,...,1) last.
inline std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::gen_partitions(d, d == 0 ? 1 : d, cur, out);
    return out;
}

}  // namespace mhn
