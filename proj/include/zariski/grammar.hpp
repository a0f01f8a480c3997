#pragma once

// The ASCII grammar shared by the CLI and the tests.
//
// Expressions: integer literals, named variables, + - * / ^ with the
// usual precedence, parentheses, unary minus, and implicit
// multiplication between adjacent factors ("2x", "3(x+1)"). Exponents
// are nonnegative integer literals. Printing is canonical: descending
// degree, '*' between coefficient and variable, caret powers.

#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "zariski/fields.hpp"
#include "zariski/tpoly.hpp"

namespace zariski {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// V must support + - * / and unary -; integers and variables are
// supplied by the callbacks.
template <typename V>
class ExprParser {
public:
    ExprParser(std::string text, std::function<V(const BigInt&)> lit,
               std::function<V(const std::string&)> var)
        : s_(std::move(text)), lit_(std::move(lit)), var_(std::move(var)) {}

    V parse() {
        V v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected input at '" + s_.substr(pos_) + "'");
        return v;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
    std::function<V(const BigInt&)> lit_;
    std::function<V(const std::string&)> var_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_primary() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    V expr() {
        V acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    V term() {
        V acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                acc = acc / factor();
            } else if (starts_primary()) {  // implicit multiplication
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    V factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        V base = primary();
        if (peek() == '^') {
            ++pos_;
            long long e = integer_literal();
            if (e < 0) throw ParseError("negative exponent");
            // nonnegative power by repeated squaring over the domain
            if (e == 0) return base / base;  // domain one; rejects zero base
            V acc = base;
            long long done = 1;
            while (done * 2 <= e) {
                acc = acc * acc;
                done *= 2;
            }
            for (; done < e; ++done) acc = acc * base;
            return acc;
        }
        return base;
    }

    long long integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    V primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (peek() != ')') throw ParseError("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return lit_(BigInt::from_string(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return var_(s_.substr(start, pos_ - start));
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
};

// ---- element parsing per setting -----------------------------------------

inline Rational parse_elem(const QOverZ&, const std::string& text) {
    ExprParser<Rational> p(
        text, [](const BigInt& n) { return Rational(n); },
        [](const std::string& v) -> Rational {
            throw ParseError("no variable '" + v + "' in this field");
        });
    return p.parse();
}

template <typename S>
    requires S::function_field
typename S::Elem parse_elem(const S& s, const std::string& text) {
    using E = typename S::Elem;
    ExprParser<E> p(
        text,
        [&s](const BigInt& n) {
            if constexpr (std::is_same_v<S, FpRational>) {
                return E(Poly<Fp>(Fp((n % BigInt(static_cast<long long>(s.p))).to_int64(), s.p)));
            } else {
                return E(Poly<Rational>(Rational(n)));
            }
        },
        [&s](const std::string& v) -> E {
            if (v == "x") return s.x();
            throw ParseError("unknown variable '" + v + "'");
        });
    return p.parse();
}

// a monic polynomial in x, used for place keys
template <typename S>
    requires S::function_field
typename S::PlaceKey parse_place_poly(const S& s, const std::string& text) {
    auto e = parse_elem(s, text);
    if (!e.is_polynomial()) throw ParseError("place key must be a polynomial");
    auto p = e.num();  // normalized form has denominator 1 here
    if (!p.is_monic()) throw ParseError("place key must be monic");
    return p;
}

template <typename S>
std::string place_to_string(const S& s, const Place<S>& p) {
    switch (p.kind) {
        case Place<S>::Kind::trivial: return "trivial";
        case Place<S>::Kind::infinity: return "infinity";
        default:
            if constexpr (S::function_field) {
                (void)s;
                return poly_to_string(p.key, "x");
            } else {
                return p.key.to_string();
            }
    }
}

template <typename S>
Place<S> parse_place(const S& s, const std::string& text) {
    if (text == "trivial") return Place<S>::trivial();
    if (text == "infinity" || text == "inf") {
        if constexpr (S::has_infinity_place) return Place<S>::infinity();
        throw ParseError("this field has no infinite place");
    }
    Place<S> p;
    if constexpr (S::function_field) {
        p = Place<S>::finite(parse_place_poly(s, text));
    } else {
        p = Place<S>::finite(BigInt::from_string(text));
    }
    if (!valid_place(s, p)) throw ParseError("not a place: " + text);
    return p;
}

// fractions in T with coefficients in F; variables T and (for function
// fields) x are available
template <typename S>
TRational<S> parse_trational(const S& s, const std::string& text) {
    using TR = TRational<S>;
    using E = typename S::Elem;
    auto t_of_elem = [](E e) { return TR(TPoly<S>(Poly<E>(std::move(e)))); };
    ExprParser<TR> p(
        text,
        [&](const BigInt& n) {
            if constexpr (std::is_same_v<S, QOverZ>) {
                return t_of_elem(Rational(n));
            } else if constexpr (std::is_same_v<S, FpRational>) {
                return t_of_elem(s.constant((n % BigInt(static_cast<long long>(s.p))).to_int64()));
            } else {
                return t_of_elem(E(Poly<Rational>(Rational(n))));
            }
        },
        [&](const std::string& v) -> TR {
            if (v == "T") {
                if constexpr (std::is_same_v<S, QOverZ>) {
                    return TR(TPoly<S>::monomial(Rational(1), 1));
                } else {
                    return TR(TPoly<S>::monomial(s.one(), 1));
                }
            }
            if constexpr (S::function_field) {
                if (v == "x") return t_of_elem(s.x());
            }
            throw ParseError("unknown variable '" + v + "'");
        });
    return p.parse();
}

// ---- canonical printing ---------------------------------------------------

inline std::string coeff_to_string(const Fp& c) { return std::to_string(c.value()); }
inline std::string coeff_to_string(const Rational& c) { return c.to_string(); }

template <typename K>
std::string poly_to_string(const Poly<K>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const K& c = f[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = coeff_to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (out.empty()) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? "-" : "+";
            if (neg) cs = cs.substr(1);
        }
        bool coeff_is_one = cs == "1";
        if (i == 0) {
            out += cs;
        } else {
            if (!coeff_is_one) out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string elem_to_string(const QOverZ&, const Rational& e) { return e.to_string(); }

template <typename S>
    requires S::function_field
std::string elem_to_string(const S&, const typename S::Elem& e) {
    if (e.is_zero()) return "0";
    if (e.is_polynomial()) {
        std::string n = poly_to_string(e.num(), "x");
        if (e.den().is_one()) return n;
        return "(" + n + ")/(" + coeff_to_string(e.den().leading()) + ")";
    }
    return "(" + poly_to_string(e.num(), "x") + ")/(" + poly_to_string(e.den(), "x") + ")";
}

template <typename S>
std::string tpoly_to_string(const S& s, const TPoly<S>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const auto& c = f[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = elem_to_string(s, c);
        if (i == 0) {
            out += cs.find_first_of("+-*/") != std::string::npos && cs[0] != '-'
                       ? "(" + cs + ")"
                       : cs;
            continue;
        }
        bool one = cs == "1";
        if (!one) {
            bool needs_paren = cs.find_first_of("+-*/") != std::string::npos;
            out += (needs_paren ? "(" + cs + ")" : cs) + "*";
        }
        out += "T";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template <typename S>
std::string trational_to_string(const S& s, const TRational<S>& h) {
    if (h.is_zero()) return "0";
    return "(" + tpoly_to_string(s, h.num) + ")/(" + tpoly_to_string(s, h.den) + ")";
}

}  // namespace zariski
