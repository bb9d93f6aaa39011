#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mhn {

/// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
/// Sized for desk-scale exact combinatorics: schoolbook multiplication and
/// Knuth algorithm D division are plenty here.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
        if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        size_t i = 0;
        int sign = 1;
        if (s[0] == '-') { sign = -1; i = 1; }
        else if (s[0] == '+') { i = 1; }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        BigInt chunk_base(1000000000LL);
        size_t first = (s.size() - i) % 9;
        if (first == 0) first = 9;
        for (size_t pos = i; pos < s.size();) {
            size_t len = (pos == i) ? first : 9;
            long long chunk = 0;
            for (size_t j = 0; j < len; ++j, ++pos) {
                char c = s[pos];
                if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
                chunk = chunk * 10 + (c - '0');
            }
            r = r * chunk_base + BigInt(chunk);
        }
        if (sign < 0) r.sign_ = r.is_zero() ? 0 : -1;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = mag_add(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = mag_cmp(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) { r.mag_ = mag_sub(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = mag_sub(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mag_mul(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    /// Truncated division: q rounded toward zero, r = a - q*b (same sign as a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) { q = BigInt(); r = BigInt(); return; }
        std::vector<uint32_t> qm, rm;
        mag_divmod(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        q.mag_ = std::move(qm);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r = BigInt();
        r.mag_ = std::move(rm);
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    /// Division known to be exact; throws if a remainder shows up.
    static BigInt divexact(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
        return q;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = mag_cmp(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    BigInt pow(unsigned e) const {
        BigInt base = *this, r(1);
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    static BigInt factorial(unsigned n) {
        BigInt r(1);
        for (unsigned i = 2; i <= n; ++i) r *= BigInt(static_cast<long long>(i));
        return r;
    }

    static BigInt binomial(unsigned n, unsigned k) {
        if (k > n) return BigInt();
        if (k > n - k) k = n - k;
        BigInt r(1);
        for (unsigned i = 1; i <= k; ++i)
            r = divexact(r * BigInt(static_cast<long long>(n - k + i)), BigInt(static_cast<long long>(i)));
        return r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int j = 0; j < 9; ++j) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    /// Fits in long long? (used by tests to cross-check against native arithmetic)
    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long m = 0;
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
        return m <= 0x8000000000000000ULL;
    }

    long long as_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
        unsigned long long m = 0;
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        return sign_ < 0 ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no leading zero limb

    static void trim(std::vector<uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int mag_cmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> mag_add(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& x = a.size() >= b.size() ? a : b;
        const auto& y = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(x.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            uint64_t cur = carry + x[i] + (i < y.size() ? y[i] : 0u);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r[x.size()] = static_cast<uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires a >= b
    static std::vector<uint32_t> mag_sub(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size(), 0);
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
            if (cur < 0) { cur += (1LL << 32); borrow = 1; }
            else borrow = 0;
            r[i] = static_cast<uint32_t>(cur);
        }
        trim(r);
        return r;
    }

    static std::vector<uint32_t> mag_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = r[i + j] + carry + ai * b[j];
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.size()] += static_cast<uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    static std::vector<uint32_t> mag_shl(const std::vector<uint32_t>& a, unsigned s) {
        if (s == 0 || a.empty()) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] = a[i] >> (32 - s);
        }
        trim(r);
        return r;
    }

    static std::vector<uint32_t> mag_shr(const std::vector<uint32_t>& a, unsigned s) {
        if (s == 0 || a.empty()) {
            std::vector<uint32_t> r = a;
            trim(r);
            return r;
        }
        std::vector<uint32_t> r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> s;
            if (i + 1 < a.size()) r[i] |= a[i + 1] << (32 - s);
        }
        trim(r);
        return r;
    }

    // Knuth TAOCP vol 2, algorithm D
    static void mag_divmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        q.clear();
        r.clear();
        if (b.empty()) throw std::domain_error("BigInt: division by zero");
        if (mag_cmp(a, b) < 0) { r = a; trim(r); return; }
        if (b.size() == 1) {
            uint64_t d = b[0], rem = 0;
            q.assign(a.size(), 0);
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            trim(q);
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        unsigned shift = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<uint32_t> u = mag_shl(a, shift);
        std::vector<uint32_t> v = mag_shl(b, shift);
        size_t n = v.size(), m = u.size() - n;
        u.resize(u.size() + 1, 0);
        q.assign(m + 1, 0);
        const uint64_t base = 1ULL << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t cur = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
                if (cur < 0) { cur += static_cast<int64_t>(base); borrow = 1; }
                else borrow = 0;
                u[i + j] = static_cast<uint32_t>(cur);
            }
            int64_t cur = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (cur < 0) {
                // qhat was one too large: add back
                cur += static_cast<int64_t>(base);
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                cur += static_cast<int64_t>(c2);
                cur &= static_cast<int64_t>(base) - 1;
            }
            u[j + n] = static_cast<uint32_t>(cur);
            q[j] = static_cast<uint32_t>(qhat);
        }
        trim(q);
        u.resize(n);
        r = mag_shr(u, shift);
    }
};

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace mhn
