#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "commpoly/chebyshev.hpp"
#include "commpoly/poly.hpp"

using namespace commpoly;

namespace {

Poly<Rational> q_poly(std::initializer_list<long long> asc) {
    std::vector<Rational> c;
    for (long long v : asc) c.emplace_back(v);
    return Poly<Rational>(c);
}

Poly<Rational> random_q_poly(std::mt19937_64& rng, int max_deg) {
    int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i)
        c.emplace_back(static_cast<long long>(rng() % 21) - 10, 1 + static_cast<long long>(rng() % 6));
    return Poly<Rational>(c);
}

Poly<Fp> random_fp_poly(std::mt19937_64& rng, std::int64_t p, int max_deg) {
    int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<Fp> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<std::int64_t>(rng() % p), p);
    return Poly<Fp>(c);
}

}  // namespace

TEST_CASE("canonical form and degree sentinel") {
    CHECK(Poly<Rational>{}.degree() == -1);
    CHECK(q_poly({0, 0, 0}).is_zero());
    CHECK(q_poly({1, 2, 0, 0}).degree() == 1);
    CHECK_THROWS_AS(Poly<Rational>{}.leading(), std::domain_error);
}

TEST_CASE("ring arithmetic basics") {
    auto xp1 = q_poly({1, 1});
    auto xm1 = q_poly({-1, 1});
    CHECK(mul(xp1, xm1) == q_poly({-1, 0, 1}));
    auto p = q_poly({3, 0, 7});
    CHECK(add(p, Poly<Rational>{}) == p);
    CHECK(mul(q_poly({0, 4, 1}), q_poly({0, 1})) == q_poly({0, 0, 4, 1}));
    CHECK(sub(p, p).is_zero());
    // degree of product = sum of degrees over an integral domain
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        auto a = random_q_poly(rng, 6), b = random_q_poly(rng, 6);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(mul(a, b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("mixed-modulus operands are rejected") {
    FpField f5(5), f7(7);
    Poly<Fp> a(std::vector<Fp>{f5(1), f5(2)});
    Poly<Fp> b(std::vector<Fp>{f7(1), f7(2)});
    CHECK_THROWS_AS((void)add(a, b), std::invalid_argument);
    CHECK_THROWS_AS((void)mul(a, b), std::invalid_argument);
}

TEST_CASE("compose examples and asymmetry") {
    CHECK(compose(q_poly({0, 0, 1}), q_poly({1, 1})) == q_poly({1, 2, 1}));
    CHECK(compose(q_poly({1, 1}), q_poly({0, 0, 1})) == q_poly({1, 0, 1}));
    // commuting Chebyshev pair
    auto t2 = cheb(ChebKind::First, 2), t3 = cheb(ChebKind::First, 3);
    auto expect = q_poly({-1, 0, 18, 0, -48, 0, 32});
    CHECK(compose(t2, t3) == expect);
    CHECK(compose(t3, t2) == expect);
}

TEST_CASE("compose degree law and associativity") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        auto p = random_q_poly(rng, 5), q = random_q_poly(rng, 5), r = random_q_poly(rng, 5);
        CHECK(compose(p, compose(q, r)) == compose(compose(p, q), r));
        if (p.degree() >= 1 && q.degree() >= 1)
            CHECK(compose(p, q).degree() == p.degree() * q.degree());
    }
}

TEST_CASE("divrem pinned examples") {
    auto [q1, r1] = divrem(q_poly({-1, 0, 1}), q_poly({-1, 1}));
    CHECK(q1 == q_poly({1, 1}));
    CHECK(r1.is_zero());
    // T_4 / T_2 = (2 T_2, -1)
    auto [q2, r2] = divrem(cheb(ChebKind::First, 4), cheb(ChebKind::First, 2));
    CHECK(q2 == q_poly({-2, 0, 4}));
    CHECK(r2 == q_poly({-1}));
    auto [q3, r3] = divrem(q_poly({0, 0, 1}), q_poly({0, 0, 0, 1}));
    CHECK(q3.is_zero());
    CHECK(r3 == q_poly({0, 0, 1}));
    CHECK_THROWS_AS((void)divrem(q_poly({1}), Poly<Rational>{}), std::domain_error);
}

TEST_CASE("divrem reconstruction over Q and Fp up to degree 40") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 150; ++iter) {
        auto num = random_q_poly(rng, 40);
        auto den = random_q_poly(rng, 12);
        if (den.is_zero()) continue;
        auto [q, r] = divrem(num, den);
        CHECK(add(mul(q, den), r) == num);
        CHECK(r.degree() < den.degree());
    }
    for (std::int64_t p : {2, 5, 11}) {
        for (int iter = 0; iter < 100; ++iter) {
            auto num = random_fp_poly(rng, p, 40);
            auto den = random_fp_poly(rng, p, 12);
            if (den.is_zero()) continue;
            auto [q, r] = divrem(num, den);
            CHECK(add(mul(q, den), r) == num);
            CHECK(r.degree() < den.degree());
        }
    }
}

TEST_CASE("gcd_monic divides both inputs and is monic") {
    CHECK(gcd_monic(q_poly({-1, 0, 1}), q_poly({-1, 1})) == q_poly({-1, 1}));
    // F_4, F_6 from the b=1 chain; gcd is F_2 = x^2+4x
    auto f4 = q_poly({0, 16, 20, 8, 1});
    auto f6 = q_poly({0, 36, 105, 112, 54, 12, 1});
    CHECK(gcd_monic(f4, f6) == q_poly({0, 4, 1}));
    auto p = q_poly({2, 0, 6});
    CHECK(gcd_monic(p, p) == q_poly({Rational(1, 3).num().is_zero() ? 0 : 1, 0, 3}) * Rational(1, 3));
    CHECK(gcd_monic(p, p) == make_monic(p));
    CHECK_THROWS_AS((void)gcd_monic(Poly<Rational>{}, Poly<Rational>{}), std::domain_error);
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 80; ++iter) {
        auto a = random_q_poly(rng, 10), b = random_q_poly(rng, 10);
        if (a.is_zero() && b.is_zero()) continue;
        auto g = gcd_monic(a, b);
        CHECK(g.leading() == Rational(1));
        if (!a.is_zero()) CHECK(divrem(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(divrem(b, g).second.is_zero());
    }
}

TEST_CASE("eval, derivative, reduction examples") {
    CHECK(eval(q_poly({0, 4, 1}), Rational(-2)) == Rational(-4));
    CHECK(derivative(cheb(ChebKind::First, 3)) == q_poly({-3, 0, 12}));
    CHECK(derivative(cheb(ChebKind::First, 3)) == scale(cheb(ChebKind::Second, 2), Rational(3)));
    auto f3 = q_poly({0, 9, 6, 1});  // x^3+6x^2+9x = F_3
    auto reduced = reduce_mod_p(f3, 3);
    FpField f(3);
    CHECK(reduced == Poly<Fp>(std::vector<Fp>{f(0), f(0), f(0), f(1)}));
    CHECK_THROWS_AS((void)reduce_mod_p(q_poly({1}) * Rational(1, 3), 3), std::domain_error);
    CHECK(reduce_mod_p(Poly<Rational>(std::vector<Rational>{Rational(1, 2)}), 3) ==
          Poly<Fp>(std::vector<Fp>{f(2)}));  // 1/2 = 2 mod 3
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937_64 rng(57);
    for (int iter = 0; iter < 120; ++iter) {
        auto p = random_q_poly(rng, 8), q = random_q_poly(rng, 8);
        CHECK(derivative(add(p, q)) == add(derivative(p), derivative(q)));
        CHECK(derivative(mul(p, q)) == add(mul(derivative(p), q), mul(p, derivative(q))));
    }
}

TEST_CASE("integrality assertion on Q -> Z conversion") {
    CHECK(integer_poly(q_poly({1, -2, 3})).coeffs().size() == 3);
    CHECK_THROWS_AS((void)integer_poly(Poly<Rational>(std::vector<Rational>{Rational(1, 2)})),
                    std::domain_error);
}
