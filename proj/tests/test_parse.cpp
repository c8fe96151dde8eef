#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "commpoly/parse.hpp"

using namespace commpoly;

namespace {

Poly<Rational> q_poly(std::initializer_list<long long> asc) {
    std::vector<Rational> c;
    for (long long v : asc) c.emplace_back(v);
    return Poly<Rational>(c);
}

}  // namespace

TEST_CASE("pinned parses") {
    CHECK(parse_poly("x^2+4x") == q_poly({0, 4, 1}));
    CHECK(parse_poly("(x+1)^3-1") == q_poly({0, 3, 3, 1}));
    auto p = parse_poly("1/2x^2 - 1");
    REQUIRE(p.degree() == 2);
    CHECK(p.coeffs()[0] == Rational(-1));
    CHECK(p.coeffs()[1] == Rational(0));
    CHECK(p.coeffs()[2] == Rational(1, 2));
}

TEST_CASE("grammar coverage") {
    CHECK(parse_poly("x") == q_poly({0, 1}));
    CHECK(parse_poly("-x") == q_poly({0, -1}));
    CHECK(parse_poly("3") == q_poly({3}));
    CHECK(parse_poly("2^3") == q_poly({8}));
    CHECK(parse_poly("7/3") == Poly<Rational>(std::vector<Rational>{Rational(7, 3)}));
    CHECK(parse_poly("2*x*x") == q_poly({0, 0, 2}));
    CHECK(parse_poly("4x") == q_poly({0, 4}));
    CHECK(parse_poly("x x") == q_poly({0, 0, 1}));  // implicit multiplication
    CHECK(parse_poly("(x+1)(x-1)") == q_poly({-1, 0, 1}));
    CHECK(parse_poly("x^2 - 2x + 1") == q_poly({1, -2, 1}));
    CHECK(parse_poly(" ( x + 1 ) ^ 2 ") == q_poly({1, 2, 1}));
    CHECK(parse_poly("x^0") == q_poly({1}));
    CHECK(parse_poly("0") == Poly<Rational>{});
    CHECK(parse_poly("x^3-x^3") == Poly<Rational>{});
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS((void)parse_poly(""), ParseError);
    CHECK_THROWS_AS((void)parse_poly("   "), ParseError);
    try {
        (void)parse_poly("x^2+*3");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
    try {
        (void)parse_poly("x/2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 1);  // '/' is only valid inside a rational literal
    }
    CHECK_THROWS_AS((void)parse_poly("x^"), ParseError);
    CHECK_THROWS_AS((void)parse_poly("x^-2"), ParseError);
    CHECK_THROWS_AS((void)parse_poly("x^1/2"), ParseError);
    CHECK_THROWS_AS((void)parse_poly("(x+1"), ParseError);
    CHECK_THROWS_AS((void)parse_poly("y+1"), ParseError);
    CHECK_THROWS_AS((void)parse_poly("3/0"), ParseError);
}

TEST_CASE("exponent overflow guard") {
    CHECK_THROWS_AS((void)parse_poly("x^10001"), ParseError);
    CHECK_THROWS_AS((void)parse_poly("(x^100)^200"), ParseError);  // degree guard
    CHECK(parse_poly("x^10000").degree() == 10000);
}

TEST_CASE("pretty printer round-trip on 1000 random canonical polynomials") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 1000; ++iter) {
        int deg = static_cast<int>(rng() % 9);
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i)
            c.emplace_back(static_cast<long long>(rng() % 41) - 20,
                           1 + static_cast<long long>(rng() % 9));
        Poly<Rational> p(c);
        CHECK(parse_poly(print_pretty(p)) == p);
    }
    CHECK(print_pretty(Poly<Rational>{}) == "0");
    CHECK(parse_poly(print_pretty(Poly<Rational>{})) == Poly<Rational>{});
}

TEST_CASE("pretty and csv forms") {
    CHECK(print_pretty(q_poly({0, 4, 1})) == "x^2+4x");
    CHECK(print_csv(q_poly({0, 4, 1})) == "0,4,1");
    CHECK(print_pretty(q_poly({-1, 0, -1})) == "-x^2-1");
    CHECK(print_pretty(Poly<Rational>(std::vector<Rational>{Rational(-1), Rational(0), Rational(1, 2)})) ==
          "1/2x^2-1");
    CHECK(print_csv(Poly<Rational>(std::vector<Rational>{Rational(1, 2)})) == "1/2");
}
