#pragma once

// Prime-field elements with a runtime modulus. Each value carries its
// modulus; mixing moduli is a hard error. Zero constructed without a
// modulus acts as a universal additive identity so that generic
// polynomial code can strip trailing zeros without field context.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zariski {

class Fp {
public:
    Fp() = default;  // universal zero
    Fp(long long v, uint32_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        v_ = static_cast<uint32_t>(m);
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint32_t p = joint(a, b);
        if (p == 0) return Fp{};
        return make((a.v_ + static_cast<uint64_t>(b.v_)) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint32_t p = joint(a, b);
        if (p == 0) return Fp{};
        return make((a.v_ + static_cast<uint64_t>(p) - b.v_) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint32_t p = joint(a, b);
        if (p == 0 || a.is_zero() || b.is_zero()) return Fp{};
        return make(static_cast<uint64_t>(a.v_) * b.v_ % p, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp operator-() const {
        if (is_zero()) return *this;
        return make(p_ - v_, p_);
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (is_zero() || p_ == 0) throw std::domain_error("Fp: inverse of zero");
        return pow(*this, p_ - 2);
    }

    static Fp pow(Fp base, uint64_t e) {
        if (base.p_ == 0) return e == 0 ? Fp{} : base;
        Fp r = make(1, base.p_);
        while (e != 0) {
            if (e & 1ULL) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;
        return joint(a, b) != 0 && a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    // natural residue order 0 < 1 < ... < p-1, used for enumeration
    friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

    std::string to_string() const { return std::to_string(v_); }

private:
    uint32_t v_ = 0;
    uint32_t p_ = 0;  // 0 only in the universal zero

    static Fp make(uint64_t v, uint32_t p) {
        Fp r;
        r.v_ = static_cast<uint32_t>(v);
        r.p_ = p;
        return r;
    }

    static uint32_t joint(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw std::invalid_argument("Fp: mixed moduli");
        return a.p_;
    }
};

}  // namespace zariski
