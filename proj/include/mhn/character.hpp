#pragma once

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "mhn/partition.hpp"

namespace mhn {

namespace detail {

inline std::string char_key(const Partition& lambda, const Partition& mu) {
    std::string k;
    k.reserve(lambda.length() + mu.length() + 1);
    for (int p : lambda.parts) k.push_back(static_cast<char>(p));
    k.push_back(static_cast<char>(0x7f));
    for (int p : mu.parts) k.push_back(static_cast<char>(p));
    return k;
}

inline BigInt character_rec(const Partition& lambda, std::vector<int>& mu_rest);

/// Border-strip expansion step over beta-numbers: remove a strip of size k.
inline BigInt strip_expand(const Partition& lambda, int k, std::vector<int>& mu_rest) {
    int rows = lambda.length();
    std::vector<long long> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = lambda.parts[i] + (rows - 1 - i);
    // beta is strictly decreasing
    BigInt total;
    for (int i = 0; i < rows; ++i) {
        long long b = beta[i] - k;
        if (b < 0) continue;
        bool occupied = false;
        int crossed = 0;
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            if (beta[j] == b) { occupied = true; break; }
            if (beta[j] > b && beta[j] < beta[i]) ++crossed;
        }
        if (occupied) continue;
        std::vector<long long> nb = beta;
        nb[i] = b;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> np(rows);
        for (int j = 0; j < rows; ++j) np[j] = static_cast<int>(nb[j] - (rows - 1 - j));
        while (!np.empty() && np.back() == 0) np.pop_back();
        BigInt sub = character_rec(Partition(std::move(np)), mu_rest);
        total += (crossed % 2) ? -sub : sub;
    }
    return total;
}

inline BigInt character_rec(const Partition& lambda, std::vector<int>& mu_rest) {
    if (mu_rest.empty()) return BigInt(1);  // lambda is empty too by size bookkeeping

    static std::unordered_map<std::string, BigInt> memo;
    static std::shared_mutex memo_mutex;

    Partition mu{std::vector<int>(mu_rest)};  // already sorted descending
    std::string key = char_key(lambda, mu);
    {
        std::shared_lock lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    int k = mu_rest.back();  // strip smallest part; any fixed choice is valid
    mu_rest.pop_back();
    BigInt value = strip_expand(lambda, k, mu_rest);
    mu_rest.push_back(k);
    {
        std::unique_lock lock(memo_mutex);
        memo.emplace(key, value);
    }
    return value;
}

}  // namespace detail

/// Irreducible character chi_lambda at cycle type mu, by recursive border-strip
/// (Murnaghan-Nakayama) expansion with a process-wide memo table.
inline BigInt character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character: |lambda| != |mu|");
    std::vector<int> mu_rest = mu.parts;  // descending; smallest part consumed first
    return detail::character_rec(lambda, mu_rest);
}

}  // namespace mhn
