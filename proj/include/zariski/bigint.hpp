#pragma once

// Arbitrary-precision signed integers, base 10^9 limbs.
// Small footprint on purpose: the library only needs exact ring
// arithmetic at desk scale (valuations, contents, Bezout data).

#include <algorithm>
#include <cstdint>
#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zariski {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) {  // NOLINT: implicit by design, mirrors built-in ints
        if (v < 0) { neg_ = true; }
        unsigned long long u = neg_ ? 0ULL - static_cast<unsigned long long>(v)
                                    : static_cast<unsigned long long>(v);
        while (u != 0) {
            limbs_.push_back(static_cast<uint32_t>(u % kBase));
            u /= kBase;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        BigInt r;
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
            r.mul_small_add(10, static_cast<uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }

    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        r.neg_ = false;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_ && !r.limbs_.empty();
            return r;
        }
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt{};
        BigInt r;
        if (c > 0) {
            r.limbs_ = sub_mag(a.limbs_, b.limbs_);
            r.neg_ = a.neg_;
        } else {
            r.limbs_ = sub_mag(b.limbs_, a.limbs_);
            r.neg_ = b.neg_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt{};
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = r.limbs_[i + j] +
                               static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry != 0) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_) && !r.is_zero();
        return r;
    }

    // Truncated division: quotient rounds toward zero, remainder has the
    // dividend's sign and |r| < |b|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt{};
            r = a;
            return;
        }
        if (b.limbs_.size() == 1) {
            q.limbs_.assign(a.limbs_.size(), 0);
            uint64_t rem = 0;
            uint32_t d = b.limbs_[0];
            for (std::size_t i = a.limbs_.size(); i-- > 0;) {
                uint64_t cur = rem * kBase + a.limbs_[i];
                q.limbs_[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            q.trim();
            r = BigInt{};
            while (rem != 0) {  // rem < 10^9, single limb
                r.limbs_.push_back(static_cast<uint32_t>(rem % kBase));
                rem /= kBase;
            }
        } else {
            divmod_knuth(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
            q.trim();
            r.trim();
        }
        q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
        r.neg_ = a.neg_ && !r.is_zero();
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

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (a.neg_) c = -c;
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    // g = gcd(a,b) = x*a + y*b
    static BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
        BigInt old_r = a, r = b;
        BigInt old_x = 1, xx = 0;
        BigInt old_y = 0, yy = 1;
        while (!r.is_zero()) {
            BigInt q, rem;
            divmod(old_r, r, q, rem);
            old_r = std::exchange(r, rem);
            BigInt tx = old_x - q * xx;
            old_x = std::exchange(xx, tx);
            BigInt ty = old_y - q * yy;
            old_y = std::exchange(yy, ty);
        }
        if (old_r.is_negative()) {
            old_r = -old_r;
            old_x = -old_x;
            old_y = -old_y;
        }
        x = old_x;
        y = old_y;
        return old_r;
    }

    static BigInt pow(BigInt base, unsigned long long e) {
        BigInt r = 1;
        while (e != 0) {
            if (e & 1ULL) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    bool fits_int64() const {
        static const BigInt lo = std::numeric_limits<long long>::min();
        static const BigInt hi = std::numeric_limits<long long>::max();
        return *this >= lo && *this <= hi;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in 64 bits");
        long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            v = v * static_cast<long long>(kBase) + limbs_[i];
        return neg_ ? -v : v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s = neg_ ? "-" : "";
        s += std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s.append(9 - part.size(), '0');
            s += part;
        }
        return s;
    }

    std::size_t limb_count() const { return limbs_.size(); }

private:
    static constexpr uint64_t kBase = 1000000000ULL;

    std::vector<uint32_t> limbs_;  // little-endian, no trailing zero limbs
    bool neg_ = false;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) neg_ = false;
    }

    void mul_small_add(uint32_t m, uint32_t add) {
        uint64_t carry = add;
        for (auto& limb : limbs_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            limb = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<uint32_t>(carry % kBase));
            carry /= kBase;
        }
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry +
                           (i < small.size() ? small[i] : 0);
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry != 0) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow -
                          (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on base-10^9 limbs; requires |u| >= |v|, v.size() >= 2.
    static void divmod_knuth(const std::vector<uint32_t>& u_in,
                             const std::vector<uint32_t>& v_in,
                             std::vector<uint32_t>& q,
                             std::vector<uint32_t>& r) {
        const std::size_t n = v_in.size();
        const std::size_t m = u_in.size() - n;

        const uint32_t d = static_cast<uint32_t>(kBase / (v_in.back() + 1ULL));
        std::vector<uint32_t> u(u_in.size() + 1, 0), v(n, 0);
        {
            uint64_t carry = 0;
            for (std::size_t i = 0; i < u_in.size(); ++i) {
                uint64_t cur = static_cast<uint64_t>(u_in[i]) * d + carry;
                u[i] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            u[u_in.size()] = static_cast<uint32_t>(carry);
            carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                uint64_t cur = static_cast<uint64_t>(v_in[i]) * d + carry;
                v[i] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
        }

        q.assign(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            uint64_t num = u[j + n] * kBase + u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= kBase ||
                   qhat * v[n - 2] > rhat * kBase + u[j + n - 2]) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= kBase) break;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p / kBase;
                int64_t sub = static_cast<int64_t>(u[i + j]) -
                              static_cast<int64_t>(p % kBase) - borrow;
                if (sub < 0) {
                    sub += static_cast<int64_t>(kBase);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<uint32_t>(sub);
            }
            int64_t top = static_cast<int64_t>(u[j + n]) -
                          static_cast<int64_t>(carry) - borrow;
            if (top < 0) {  // qhat was one too large: add back
                top += static_cast<int64_t>(kBase);
                --qhat;
                uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(cur % kBase);
                    c2 = cur / kBase;
                }
                top += static_cast<int64_t>(c2);
                top %= static_cast<int64_t>(kBase);
            }
            u[j + n] = static_cast<uint32_t>(top);
            q[j] = static_cast<uint32_t>(qhat);
        }

        // denormalize remainder
        r.assign(n, 0);
        uint64_t rem = 0;
        for (std::size_t i = n; i-- > 0;) {
            uint64_t cur = rem * kBase + u[i];
            r[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
};

inline BigInt abs(const BigInt& a) { return a.abs(); }

}  // namespace zariski
