#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zariski/bigint.hpp"
#include "zariski/fp.hpp"
#include "zariski/poly.hpp"
#include "zariski/rational.hpp"

using namespace zariski;

TEST_CASE("BigInt small arithmetic matches built-in") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("BigInt divmod identity on large operands") {
    std::mt19937_64 rng(999);
    auto random_big = [&](int limbs) {
        BigInt r = 0;
        for (int i = 0; i < limbs; ++i)
            r = r * BigInt(1000000000LL) + BigInt(static_cast<long long>(rng() % 1000000000ULL));
        if (rng() & 1) r = -r;
        return r;
    };
    for (int i = 0; i < 800; ++i) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 7));
        BigInt b = random_big(1 + static_cast<int>(rng() % 5));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("BigInt divmod exercises quotient correction paths") {
    // dividends built as q*b + r reconstruct exactly
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 500; ++i) {
        BigInt b = BigInt::from_string("1000000000000000000") + BigInt(static_cast<long long>(rng() % 1000));
        BigInt q = BigInt::from_string("999999999999999999999") - BigInt(static_cast<long long>(rng() % 7919));
        BigInt r = BigInt(static_cast<long long>(rng() % 1000000007ULL));
        BigInt a = q * b + r;
        BigInt q2, r2;
        BigInt::divmod(a, b, q2, r2);
        CHECK(q2 == q);
        CHECK(r2 == r);
    }
}

TEST_CASE("BigInt string round-trips and powers") {
    CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    CHECK(BigInt::from_string("0000123").to_string() == "123");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK(BigInt::pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
    CHECK(BigInt::gcd(BigInt::pow(BigInt(6), 20), BigInt::pow(BigInt(15), 20)) ==
          BigInt::pow(BigInt(3), 20));
}

TEST_CASE("BigInt extended gcd is a Bezout identity") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        BigInt a(static_cast<long long>(rng() % 1000000) - 500000);
        BigInt b(static_cast<long long>(rng() % 1000000) - 500000);
        BigInt x, y;
        BigInt g = BigInt::egcd(a, b, x, y);
        CHECK(x * a + y * b == g);
        if (!a.is_zero() || !b.is_zero()) {
            CHECK(!g.is_negative());
            CHECK((a % g).is_zero());
            CHECK((b % g).is_zero());
        }
    }
}

TEST_CASE("Rational normalization and field axioms") {
    Rational half(1, 2);
    CHECK(Rational(2, 4) == half);
    CHECK(Rational(-3, -6) == half);
    CHECK(Rational(3, -6) == -half);
    CHECK((half + half).is_one());
    CHECK(half * Rational(2) == Rational(1));
    CHECK(Rational::from_string("6/4").to_string() == "3/2");
    CHECK(Rational::from_string("-10").to_string() == "-10");
    CHECK_THROWS(Rational(1, 0));
    CHECK(half.inverse() == Rational(2));
    CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("Rational height order enumerates 0,1,-1,2,-2,1/2,-1/2") {
    std::vector<Rational> expect = {Rational(0), Rational(1), Rational(-1),
                                    Rational(2), Rational(-2), Rational(1, 2),
                                    Rational(-1, 2)};
    for (std::size_t i = 0; i + 1 < expect.size(); ++i)
        CHECK(Rational::height_less(expect[i], expect[i + 1]));
}

TEST_CASE("Fp field arithmetic") {
    Fp a(3, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK(a.inverse().value() == 5);
    CHECK((a / b).value() == (a * b.inverse()).value());
    CHECK((-a).value() == 4);
    CHECK(Fp(-1, 7).value() == 6);
    CHECK(Fp(14, 7).is_zero());
    CHECK(Fp{} == Fp(0, 7));
    CHECK((Fp{} + a) == a);
    CHECK_THROWS(a + Fp(1, 5));
    CHECK_THROWS(Fp(0, 7).inverse());
}

static Poly<Fp> fp_poly(std::initializer_list<int> coeffs_low_first, uint32_t p) {
    std::vector<Fp> c;
    for (int v : coeffs_low_first) c.emplace_back(v, p);
    return Poly<Fp>(std::vector<Fp>(c));
}

TEST_CASE("Poly arithmetic and division over F_5") {
    auto f = fp_poly({1, 0, 1}, 5);   // x^2 + 1
    auto g = fp_poly({1, 1}, 5);      // x + 1
    auto prod = f * g;                // x^3 + x^2 + x + 1
    CHECK(prod == fp_poly({1, 1, 1, 1}, 5));
    Poly<Fp> q, r;
    Poly<Fp>::divmod(prod, g, q, r);
    CHECK(q == f);
    CHECK(r.is_zero());
    Poly<Fp>::divmod(f, g, q, r);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
    CHECK(Poly<Fp>::gcd(prod, f) == f.monic());
}

TEST_CASE("Poly egcd Bezout identity over F_7 and Q") {
    auto a = fp_poly({3, 1, 4, 1}, 7);
    auto b = fp_poly({2, 6, 1}, 7);
    Poly<Fp> x, y;
    auto g = Poly<Fp>::egcd(a, b, x, y);
    CHECK(x * a + y * b == g);
    CHECK(g.is_monic());

    std::vector<Rational> ac = {Rational(1), Rational(0), Rational(-2)};  // -2x^2+1
    std::vector<Rational> bc = {Rational(1, 2), Rational(1)};             // x+1/2
    Poly<Rational> aq{std::vector<Rational>(ac)}, bq{std::vector<Rational>(bc)};
    Poly<Rational> xq, yq;
    auto gq = Poly<Rational>::egcd(aq, bq, xq, yq);
    CHECK(xq * aq + yq * bq == gq);
}

TEST_CASE("Poly powmod computes Frobenius powers") {
    // over F_5 mod x^2+1: x^2 = -1, x^4 = 1, so x^5 = x
    auto mod = fp_poly({1, 0, 1}, 5);
    auto x = fp_poly({0, 1}, 5);
    CHECK(Poly<Fp>::powmod(x, 5, mod) == x);
    CHECK(x * x % mod == fp_poly({4}, 5));
    CHECK(Poly<Fp>::powmod(x, 4, mod) == fp_poly({1}, 5));
}

TEST_CASE("RatFunc normalizes and has exact field ops") {
    uint32_t p = 5;
    auto x = fp_poly({0, 1}, p);
    auto one = fp_poly({1}, p);
    RatFunc<Fp> f(x * x - one, x - one);  // (x^2-1)/(x-1) = x+1
    CHECK(f.is_polynomial());
    CHECK(f.num() == fp_poly({1, 1}, p));
    RatFunc<Fp> g(one, x);
    CHECK((f * g).num() == fp_poly({1, 1}, p));
    CHECK((f * g).den() == x);
    CHECK((g + g) == RatFunc<Fp>(fp_poly({2}, p), x));
    CHECK(g.inverse() == RatFunc<Fp>(x));
    RatFunc<Fp> z;
    CHECK(z.is_zero());
    CHECK((z + g) == g);
    CHECK((g - g).is_zero());
    CHECK((z * g).is_zero());
    CHECK_THROWS(g / z);
    // denominator made monic
    RatFunc<Fp> h(one, fp_poly({0, 2}, p));  // 1/(2x) -> 3/x? (2^{-1} = 3 mod 5)
    CHECK(h.den() == x);
    CHECK(h.num() == fp_poly({3}, p));
}
