#pragma once

// Integers extended with +infinity, the value group of a rank-one
// discrete valuation together with the value of zero.

#include <stdexcept>
#include <string>

namespace zariski {

class ExtInt {
public:
    ExtInt() = default;
    ExtInt(long long v) : v_(v) {}  // NOLINT: implicit by design
    static ExtInt infinity() {
        ExtInt e;
        e.inf_ = true;
        return e;
    }

    bool is_infinity() const { return inf_; }
    long long finite() const {
        if (inf_) throw std::domain_error("ExtInt: infinite value");
        return v_;
    }

    friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtInt(a.v_ + b.v_);
    }
    friend ExtInt operator-(const ExtInt& a, const ExtInt& b) {
        if (b.inf_) throw std::domain_error("ExtInt: cannot subtract infinity");
        if (a.inf_) return infinity();
        return ExtInt(a.v_ - b.v_);
    }
    ExtInt operator-() const {
        if (inf_) throw std::domain_error("ExtInt: cannot negate infinity");
        return ExtInt(-v_);
    }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return a < b || a == b; }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return b <= a; }

    static ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

    std::string to_string() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    long long v_ = 0;
    bool inf_ = false;
};

}  // namespace zariski
