#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zariski/grammar.hpp"
#include "zariski/places.hpp"
#include "zariski/tpoly.hpp"

using namespace zariski;

namespace {
const QOverZ qz{};
const FpRational f2{2};
const FpRational f3{3};
const FpRational f5{5};
const QRational qx{};

template <typename S>
Place<S> pl(const S& s, const std::string& t) {
    return parse_place(s, t);
}
}  // namespace

TEST_CASE("p-adic values of rationals") {
    auto v2 = pl(qz, "2");
    CHECK(place_value(qz, v2, Rational(12)) == ExtInt(2));  // 12 = 4*3
    CHECK(place_value(qz, v2, Rational(1, 2)) == ExtInt(-1));
    CHECK(place_value(qz, v2, Rational(0)).is_infinity());
    CHECK(place_value(qz, Place<QOverZ>::trivial(), Rational(7, 3)) == ExtInt(0));
    CHECK(in_ring(qz, pl(qz, "3"), Rational(1, 2)));
    CHECK_FALSE(in_ring(qz, v2, Rational(1, 2)));
}

TEST_CASE("orders at finite places of k(x)") {
    auto vx = pl(f5, "x");
    auto a = parse_elem(f5, "x^3/(x+1)");
    CHECK(place_value(f5, vx, a) == ExtInt(3));
    auto vx1 = pl(f5, "x-1");
    auto b = parse_elem(f5, "(x-1)^2/x");
    CHECK(place_value(f5, vx1, b) == ExtInt(2));
    CHECK(in_max_ideal(f5, vx1, b));
}

TEST_CASE("degree valuation at infinity") {
    auto vinf = Place<QRational>::infinity();
    auto a = parse_elem(qx, "(x^2+1)/x");
    CHECK(place_value(qx, vinf, a) == ExtInt(-1));  // deg den - deg num = 1 - 2
    CHECK_FALSE(in_ring(qx, vinf, parse_elem(qx, "x")));
    CHECK(in_ring(qx, vinf, parse_elem(qx, "1/x")));
    CHECK(place_value(qx, vinf, parse_elem(qx, "7")) == ExtInt(0));
}

TEST_CASE("residue degrees") {
    CHECK(residue_degree(f3, pl(f3, "x^2+1")) == 2);  // irreducible over F_3
    CHECK(residue_degree(f3, Place<FpRational>::infinity()) == 1);
    CHECK(residue_degree(qz, pl(qz, "7")) == 1);
    CHECK(residue_characteristic(qz, pl(qz, "7")) == BigInt(7));
    CHECK(residue_characteristic(f3, pl(f3, "x")) == BigInt(3));
    CHECK(residue_characteristic(qx, pl(qx, "x")) == BigInt(0));
    CHECK_THROWS(residue_degree(qz, Place<QOverZ>::trivial()));
}

TEST_CASE("multiplicativity and the ultrametric inequality, randomized") {
    std::mt19937_64 rng(2024);
    auto rand_rational = [&]() {
        long long n = static_cast<long long>(rng() % 200) - 100;
        long long d = 1 + static_cast<long long>(rng() % 99);
        if (n == 0) n = 1;
        return Rational(n, d);
    };
    std::vector<Place<QOverZ>> places = {pl(qz, "2"), pl(qz, "3"), pl(qz, "5"), pl(qz, "7")};
    for (int i = 0; i < 300; ++i) {
        Rational a = rand_rational(), b = rand_rational();
        for (const auto& v : places) {
            CHECK(place_value(qz, v, a * b) == place_value(qz, v, a) + place_value(qz, v, b));
            if (!(a + b).is_zero()) {
                CHECK(place_value(qz, v, a + b) >=
                      ExtInt::min(place_value(qz, v, a), place_value(qz, v, b)));
            }
        }
    }
    // same over F_5(x), on elements built from random polynomials
    auto rand_poly = [&]() {
        int d = static_cast<int>(rng() % 4);
        std::vector<Fp> c(static_cast<std::size_t>(d) + 1);
        for (auto& e : c) e = Fp(static_cast<long long>(rng() % 5), 5);
        if (c.back().is_zero()) c.back() = Fp(1, 5);
        return Poly<Fp>(std::move(c));
    };
    std::vector<Place<FpRational>> fplaces = {Place<FpRational>::infinity(), pl(f5, "x"),
                                              pl(f5, "x+1"), pl(f5, "x^2+2")};
    for (int i = 0; i < 200; ++i) {
        RatFunc<Fp> a(rand_poly(), rand_poly());
        RatFunc<Fp> b(rand_poly(), rand_poly());
        if (a.is_zero() || b.is_zero()) continue;
        for (const auto& v : fplaces) {
            CHECK(place_value(f5, v, a * b) == place_value(f5, v, a) + place_value(f5, v, b));
            if (!(a + b).is_zero())
                CHECK(place_value(f5, v, a + b) >=
                      ExtInt::min(place_value(f5, v, a), place_value(f5, v, b)));
        }
    }
}

TEST_CASE("degree formula: zeros and poles balance with residue weights") {
    // build elements with known support, sum res_deg * value over all places
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Place<FpRational>> support = {pl(f3, "x"), pl(f3, "x+1"), pl(f3, "x^2+1"),
                                                  pl(f3, "x^2+x+2")};
        auto elem = f3.one();
        for (const auto& v : support) {
            long long e = static_cast<long long>(rng() % 5) - 2;
            auto piece = FpRational::Elem(v.key);
            for (long long k = 0; k < (e < 0 ? -e : e); ++k)
                elem = e > 0 ? elem * piece : elem / piece;
        }
        if (elem.is_zero()) continue;
        long long total = 0;
        for (const auto& v : support)
            total += residue_degree(f3, v) * place_value(f3, v, elem).finite();
        total += residue_degree(f3, Place<FpRational>::infinity()) *
                 place_value(f3, Place<FpRational>::infinity(), elem).finite();
        CHECK(total == 0);
    }
}

TEST_CASE("Gauss values of T-fractions") {
    auto h = parse_trational(qz, "(2T+4)/(T+1)");
    CHECK(gauss_value(qz, pl(qz, "2"), h) == ExtInt(1));  // min(1,2) - min(0,0)
    auto t = parse_trational(qz, "T");
    CHECK(gauss_value(qz, pl(qz, "2"), t) == ExtInt(0));
    CHECK(gauss_value(qz, pl(qz, "97"), t) == ExtInt(0));
    auto hf = parse_trational(f5, "(x*T + x^2)/(T + x)");
    CHECK(gauss_value(f5, pl(f5, "x"), hf) == ExtInt(1));  // min(1,2) - min(0,1)
    CHECK(gauss_value(qz, pl(qz, "2"), parse_trational(qz, "1/(2T)")) == ExtInt(-1));
    CHECK_THROWS(gauss_value(qz, Place<QOverZ>::trivial(), t));
    CHECK(in_star(qz, Place<QOverZ>::trivial(), t));
}

TEST_CASE("Gauss value restricted to T-constant elements equals the value") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        long long n = static_cast<long long>(rng() % 100) + 1;
        long long d = static_cast<long long>(rng() % 100) + 1;
        Rational a(n, d);
        TRational<QOverZ> h{TPoly<QOverZ>(Poly<Rational>(a))};
        for (const char* ps : {"2", "3", "5"}) {
            auto v = pl(qz, ps);
            CHECK(gauss_value(qz, v, h) == place_value(qz, v, a));
        }
    }
}

TEST_CASE("zr_space enumerations are the documented ones") {
    auto zq = zr_space(qz);
    CHECK(place_to_string(qz, zq.closed_point(0)) == "2");
    CHECK(place_to_string(qz, zq.closed_point(1)) == "3");
    CHECK(place_to_string(qz, zq.closed_point(2)) == "5");
    CHECK(place_to_string(qz, zq.closed_point(3)) == "7");

    auto z2 = zr_space(f2);
    CHECK(place_to_string(f2, z2.closed_point(0)) == "infinity");
    CHECK(place_to_string(f2, z2.closed_point(1)) == "x");
    CHECK(place_to_string(f2, z2.closed_point(2)) == "x+1");
    CHECK(place_to_string(f2, z2.closed_point(3)) == "x^2+x+1");
    CHECK(place_to_string(f2, z2.closed_point(4)) == "x^3+x+1");
    CHECK(place_to_string(f2, z2.closed_point(5)) == "x^3+x^2+1");

    auto zx = zr_space(qx);
    CHECK(place_to_string(qx, zx.closed_point(0)) == "infinity");
    CHECK(place_to_string(qx, zx.closed_point(1)) == "x");
    CHECK(place_to_string(qx, zx.closed_point(2)) == "x+1");
    CHECK(place_to_string(qx, zx.closed_point(3)) == "x-1");
}

TEST_CASE("place ordering is the enumeration order") {
    for (int i = 0; i < 12; ++i) {
        auto a = nth_place(f3, static_cast<std::size_t>(i));
        auto b = nth_place(f3, static_cast<std::size_t>(i + 1));
        CHECK(place_less(f3, a, b));
        CHECK_FALSE(place_less(f3, b, a));
        auto c = nth_place(qx, static_cast<std::size_t>(i));
        auto d = nth_place(qx, static_cast<std::size_t>(i + 1));
        CHECK(place_less(qx, c, d));
    }
}

TEST_CASE("place validity") {
    CHECK(valid_place(qz, pl(qz, "13")));
    CHECK_THROWS(parse_place(qz, "12"));
    CHECK_THROWS(parse_place(f5, "x^2-1"));   // (x-1)(x+1)
    CHECK(valid_place(f5, pl(f5, "x^2+2")));  // -2 = 3 is a non-square mod 5
    CHECK_THROWS(parse_place(qz, "infinity"));
    CHECK(valid_place(qx, pl(qx, "x^2+1")));
    CHECK_THROWS(parse_place(qx, "x^2-1"));
}

TEST_CASE("intersection membership") {
    auto zq = zr_space(qz);
    auto just2 = zq.make_finite({pl(qz, "2")}, false);
    CHECK(intersection_member(qz, just2, Rational(1, 3)));
    CHECK_FALSE(intersection_member(qz, just2, Rational(1, 2)));
    auto all = zq.whole();
    CHECK(intersection_member(qz, all, Rational(42)));
    CHECK_FALSE(intersection_member(qz, all, Rational(1, 5)));

    auto z5 = zr_space(f5);
    auto nox = z5.make_cofinite({pl(f5, "x")}, false);
    CHECK(intersection_member(f5, nox, parse_elem(f5, "1/x")));
    CHECK_FALSE(intersection_member(f5, nox, parse_elem(f5, "1/(x+1)")));
    CHECK_FALSE(intersection_member(f5, nox, parse_elem(f5, "x")));  // pole at infinity
    auto noinf = z5.make_cofinite({Place<FpRational>::infinity()}, false);
    CHECK(intersection_member(f5, noinf, parse_elem(f5, "x^3+2x")));
    CHECK_FALSE(intersection_member(f5, noinf, parse_elem(f5, "1/x")));
    // whole space: only constants
    auto all5 = z5.whole();
    CHECK(intersection_member(f5, all5, parse_elem(f5, "3")));
    CHECK_FALSE(intersection_member(f5, all5, parse_elem(f5, "x")));
    CHECK_FALSE(intersection_member(f5, all5, parse_elem(f5, "(x+1)/(x+2)")));
}

TEST_CASE("for the full space the ring of global sections is the base") {
    // over Q/Z: exactly the integers
    auto zq = zr_space(qz);
    auto all = zq.whole();
    for (long long n = -20; n <= 20; ++n) CHECK(intersection_member(qz, all, Rational(n)));
    CHECK_FALSE(intersection_member(qz, all, Rational(3, 2)));
    // over Q(x): exactly the rational constants
    auto zx = zr_space(qx);
    auto allx = zx.whole();
    CHECK(intersection_member(qx, allx, parse_elem(qx, "7/3")));
    CHECK_FALSE(intersection_member(qx, allx, parse_elem(qx, "x+1")));
}

TEST_CASE("element and T-fraction parsing round-trips") {
    auto e = parse_elem(f5, "(x^2-1)/(x-1)");
    CHECK(elem_to_string(f5, e) == "x+1");
    CHECK(parse_elem(qx, "1/2x^2 - 3") == parse_elem(qx, "(x^2-6)/2"));
    auto h = parse_trational(qz, "(2*T^2+6)/(4*T+2)");
    CHECK(trational_to_string(qz, h) == "(2*T^2+6)/(4*T+2)");
    auto h2 = parse_trational(f5, trational_to_string(f5, parse_trational(f5, "(x*T+x^2)/(T+x)")));
    CHECK(h2 == parse_trational(f5, "(x*T + x^2)/(T + x)"));
    CHECK_THROWS(parse_elem(qz, "x"));
    CHECK_THROWS(parse_trational(qz, "(T+1)/0"));
}
