#pragma once

// Dense univariate polynomials over a field K, coefficients stored low
// degree first with no trailing zeros. The one generic type serves the
// coefficient fields, the function fields k(x) and the auxiliary
// variable T, so K ranges over Fp, Rational and RatFunc<...>.

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace zariski {

template <typename K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const K& constant) {  // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(constant);
    }

    static Poly monomial(const K& coeff, std::size_t degree) {
        if (coeff.is_zero()) return Poly{};
        std::vector<K> c(degree + 1);
        c[degree] = coeff;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0

    const K& operator[](std::size_t i) const {
        static const K zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && c_.back().is_one(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& s, const Poly& p) { return Poly(s) * p; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        q = Poly{};
        r = a;
        if (a.degree() < b.degree()) return;
        std::vector<K> qc(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            K factor = r.leading() / b.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            qc[shift] = qc[shift] + factor;
            std::vector<K> rc = r.c_;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rc[i + shift] = rc[i + shift] - factor * b.c_[i];
            r = Poly(std::move(rc));
        }
        q = Poly(std::move(qc));
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    bool divides(const Poly& a) const { return (a % *this).is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv_lead = unit_one() / leading();
        Poly r = *this;
        for (auto& x : r.c_) x = x * inv_lead;
        return r;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly rem = a % b;
            a = std::exchange(b, rem);
        }
        return a.monic();
    }

    // monic g = gcd(a,b) together with x, y such that g = x*a + y*b
    static Poly egcd(const Poly& a, const Poly& b, Poly& x, Poly& y) {
        if (a.is_zero() && b.is_zero()) {
            x = y = Poly{};
            return Poly{};
        }
        K one = a.is_zero() ? b.unit_one() : a.unit_one();
        Poly old_r = a, r = b;
        Poly old_x = Poly(one), xx;
        Poly old_y, yy = Poly(one);
        while (!r.is_zero()) {
            Poly q, rem;
            divmod(old_r, r, q, rem);
            old_r = std::exchange(r, rem);
            Poly tx = old_x - q * xx;
            old_x = std::exchange(xx, tx);
            Poly ty = old_y - q * yy;
            old_y = std::exchange(yy, ty);
        }
        K inv_lead = one / old_r.leading();
        x = Poly(inv_lead) * old_x;
        y = Poly(inv_lead) * old_y;
        return old_r.monic();
    }

    K eval(const K& point) const {
        K acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly{};
        std::vector<K> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K acc{};
            for (std::size_t k = 0; k < i; ++k) acc = acc + c_[i];  // i * c_i
            r[i - 1] = acc;
        }
        return Poly(std::move(r));
    }

    static Poly powmod(Poly base, uint64_t e, const Poly& mod) {
        if (mod.degree() < 1) throw std::domain_error("Poly: powmod needs modulus of degree >= 1");
        Poly r = Poly(mod.unit_one());
        base = base % mod;
        while (e != 0) {
            if (e & 1ULL) r = r * base % mod;
            base = base * base % mod;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // multiplicative identity of K recovered from a nonzero coefficient
    K unit_one() const {
        if (is_zero()) throw std::domain_error("Poly: no coefficient context");
        return leading() / leading();
    }

private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Rational functions num/den over K, normalized: coprime, monic
// denominator. The zero value is canonically num = 0 with den = 0 kept
// empty, so zero needs no field context.
template <typename K>
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly<K> num) : num_(std::move(num)) {  // NOLINT: implicit by design
        if (!num_.is_zero()) den_ = Poly<K>(num_.unit_one());
    }
    RatFunc(const K& constant) : RatFunc(Poly<K>(constant)) {}  // NOLINT
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const {
        if (is_zero()) throw std::domain_error("RatFunc: denominator of context-free zero");
        return den_;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return is_zero() || den_.is_constant(); }
    bool is_constant() const { return is_zero() || (num_.is_constant() && den_.is_constant()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return -b;
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc{};
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        if (a.is_zero()) return RatFunc{};
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    Poly<K> num_;
    Poly<K> den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>{};
            return;
        }
        Poly<K> g = Poly<K>::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K inv_lead = den_.unit_one() / den_.leading();
        num_ = Poly<K>(inv_lead) * num_;
        den_ = Poly<K>(inv_lead) * den_;
    }
};

}  // namespace zariski
