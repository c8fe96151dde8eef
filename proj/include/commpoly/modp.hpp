#ifndef COMMPOLY_MODP_HPP
#define COMMPOLY_MODP_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "commpoly/chains.hpp"
#include "commpoly/factor.hpp"
#include "commpoly/fp.hpp"
#include "commpoly/numtheory.hpp"
#include "commpoly/poly.hpp"

namespace commpoly {

// predicted/measured (degree, count) profile of the irreducible factors of a
// squarefree polynomial over F_p
struct FactorShape {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;  // ascending degree

    friend bool operator==(const FactorShape& a, const FactorShape& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const FactorShape& a, const FactorShape& b) { return !(a == b); }
};

// product of the distinct irreducible factors, each to multiplicity one;
// f' = 0 descends through f = g(x^p) (coefficient p-th roots are the identity
// over F_p)
inline Poly<Fp> squarefree_part(const Poly<Fp>& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    Poly<Fp> g = make_monic(f);
    if (g.degree() == 0) return g;
    std::int64_t p = g.leading().p;
    Poly<Fp> deriv = derivative(g);
    if (deriv.is_zero()) {
        // g = h(x^p): fold exponents down and recurse
        std::vector<Fp> h;
        for (std::size_t i = 0; i < g.coeffs().size(); i += static_cast<std::size_t>(p))
            h.push_back(g.coeffs()[i]);
        return squarefree_part(Poly<Fp>(std::move(h)));
    }
    Poly<Fp> c = gcd_monic(g, deriv);
    if (c.degree() == 0) return g;
    Poly<Fp> w = divrem(g, c).first;  // irreducibles with multiplicity not divisible by p
    // strip every w-irreducible out of g entirely; what survives has all
    // multiplicities divisible by p and is therefore a polynomial in x^p
    Poly<Fp> y = g;
    for (;;) {
        Poly<Fp> d = gcd_monic(y, w);
        if (d.degree() == 0) break;
        y = divrem(y, d).first;
    }
    if (y.degree() == 0) return w;
    return mul(w, squarefree_part(y));
}

// x^(p^d) mod f by iterated Frobenius: t <- t^p (mod f)
namespace detail {

inline Poly<Fp> pow_mod(const Poly<Fp>& base, std::int64_t e, const Poly<Fp>& mod) {
    Poly<Fp> r = constant_poly(one_like(mod.leading()));
    Poly<Fp> b = divrem(base, mod).second;
    while (e > 0) {
        if (e & 1) r = divrem(mul(r, b), mod).second;
        e >>= 1;
        if (e) b = divrem(mul(b, b), mod).second;
    }
    return r;
}

}  // namespace detail

// distinct-degree factorization shape of a monic squarefree polynomial:
// g_d = gcd(f, x^(p^d) - x), count_d = deg(g_d)/d
inline FactorShape ddf(const Poly<Fp>& input) {
    if (input.is_zero() || !input.leading().is_one())
        throw std::invalid_argument("ddf: polynomial must be monic");
    if (input.degree() >= 1) {
        Poly<Fp> deriv = derivative(input);
        if (deriv.is_zero() || gcd_monic(input, deriv).degree() != 0)
            throw std::invalid_argument("ddf: polynomial must be squarefree");
    }
    FactorShape shape;
    Poly<Fp> f = input;
    if (f.degree() == 0) return shape;
    std::int64_t p = f.leading().p;
    Poly<Fp> x = monomial(one_like(f.leading()), 1);
    Poly<Fp> frob = divrem(x, f).second;  // x^(p^d) mod f, starting at d=0
    for (std::int64_t d = 1; f.degree() >= 1; ++d) {
        if (2 * d > f.degree()) {
            // whatever is left is a single irreducible
            shape.entries.emplace_back(f.degree(), 1);
            break;
        }
        frob = detail::pow_mod(frob, p, f);
        Poly<Fp> g = gcd_monic(f, sub(frob, x));
        if (g.degree() > 0) {
            shape.entries.emplace_back(d, g.degree() / d);
            f = divrem(f, g).first;
            frob = divrem(frob, f).second;
        }
    }
    return shape;
}

// Phi_n mod p: phi(n)/f distinct irreducibles of degree f, f = ord_n(p)
inline FactorShape predict_phi_shape(std::int64_t p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("predict_phi_shape: n must be positive");
    if (n > 1 && std::gcd(p, n) != 1)
        throw std::invalid_argument("predict_phi_shape: requires gcd(p, n) = 1");
    if (n == 1 || n == 2) return FactorShape{{{1, 1}}};
    std::int64_t f = mult_order(p, n);
    return FactorShape{{{f, euler_phi(n) / f}}};
}

// Psi_n mod p for n >= 3: degree f/2 when p^(f/2) = -1 (mod n), else degree f
inline FactorShape predict_psi_shape(std::int64_t p, std::int64_t n) {
    if (n < 3) throw std::invalid_argument("predict_psi_shape: n must be >= 3");
    if (std::gcd(p, n) != 1)
        throw std::invalid_argument("predict_psi_shape: requires gcd(p, n) = 1");
    std::int64_t f = mult_order(p, n);
    if (f % 2 == 0 && pow_mod(p, f / 2, n) == n - 1)
        return FactorShape{{{f / 2, euler_phi(n) / f}}};
    return FactorShape{{{f, euler_phi(n) / (2 * f)}}};
}

inline FactorShape measure_phi_shape(std::int64_t p, std::int64_t n) {
    return ddf(reduce_mod_p(cyclotomic(n), p));
}

inline FactorShape measure_psi_shape(std::int64_t p, std::int64_t n) {
    return ddf(reduce_mod_p(psi(n).poly, p));
}

// Psi_N mod p via the mod-p Dickson rewrite of Phi_N mod p; the rewrite map
// is linear in the coefficients, so it commutes with reduction. Keeps the
// huge-index power-identity checks inside F_p instead of Z.
inline Poly<Fp> psi_mod_p(std::int64_t p, std::int64_t n) {
    if (n < 3) throw std::invalid_argument("psi_mod_p: n must be >= 3");
    return detail::dickson_rewrite(reduce_mod_p(cyclotomic(n), p));
}

struct PowerIdentityResult {
    bool phi_holds = false;
    std::optional<bool> psi_holds;  // engaged only for n >= 3
};

// Phi_{p^r n} = Phi_n^phi(p^r) and Psi_{p^r n} = Psi_n^phi(p^r) over F_p.
// The Psi side is asserted only for n >= 3; the degree-1 conventions Psi_1,
// Psi_2 put n <= 2 outside the identity's bookkeeping.
inline PowerIdentityResult phi_psi_power_identity(std::int64_t p, std::int64_t r, std::int64_t n) {
    if (r < 1) throw std::invalid_argument("phi_psi_power_identity: r must be positive");
    if (std::gcd(p, n) != 1)
        throw std::invalid_argument("phi_psi_power_identity: requires gcd(p, n) = 1");
    std::int64_t pr = 1;
    for (std::int64_t i = 0; i < r; ++i) pr *= p;
    unsigned long long e = static_cast<unsigned long long>(euler_phi(pr));
    PowerIdentityResult out;
    Poly<Fp> lhs_phi = reduce_mod_p(cyclotomic(pr * n), p);
    Poly<Fp> rhs_phi = poly_pow(reduce_mod_p(cyclotomic(n), p), e);
    out.phi_holds = lhs_phi == rhs_phi;
    if (n >= 3) {
        Poly<Fp> lhs_psi = psi_mod_p(p, pr * n);
        Poly<Fp> rhs_psi = poly_pow(reduce_mod_p(psi(n).poly, p), e);
        out.psi_holds = lhs_psi == rhs_psi;
    }
    return out;
}

// F_{p^r} = Ftilde_{p^r} = x^(p^r) mod p
inline bool frobenius_identity(std::int64_t p, std::int64_t r) {
    if (!is_prime(p)) throw std::invalid_argument("frobenius_identity: p must be prime");
    if (r < 1) throw std::invalid_argument("frobenius_identity: r must be positive");
    std::int64_t pr = 1;
    for (std::int64_t i = 0; i < r; ++i) pr *= p;
    Poly<Fp> target = monomial(Fp(1, p), static_cast<std::size_t>(pr));
    Poly<Fp> cheb_side =
        reduce_mod_p(chain_member(ChainSpec(ChainType::Chebyshev, Rational(1, 2), Rational(1)), pr), p);
    Poly<Fp> mono_side =
        reduce_mod_p(chain_member(ChainSpec(ChainType::Monomial, Rational(1), Rational(1)), pr), p);
    return cheb_side == target && mono_side == target;
}

// all degree-k polynomials over F_p commuting with f under composition, by
// exhaustive enumeration; the candidate count (p-1) p^k is capped via p^(k+1)
inline std::vector<Poly<Fp>> enumerate_commuting(std::int64_t p, const Poly<Fp>& f, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("enumerate_commuting: k must be nonnegative");
    double budget = 1.0;
    for (std::int64_t i = 0; i <= k; ++i) {
        budget *= static_cast<double>(p);
        if (budget > 1e6) throw std::invalid_argument("enumerate_commuting: p^(k+1) budget exceeded");
    }
    FpField gf(p);
    std::vector<Poly<Fp>> found;
    std::vector<std::int64_t> digits(static_cast<std::size_t>(k) + 1, 0);
    digits.back() = 1;  // leading coefficient nonzero
    for (;;) {
        std::vector<Fp> coeffs;
        coeffs.reserve(digits.size());
        for (std::int64_t d : digits) coeffs.push_back(gf(d));
        Poly<Fp> g(std::move(coeffs));
        if (compose(g, f) == compose(f, g)) found.push_back(g);
        // odometer: low coefficients run over [0,p), the leading one over [1,p)
        std::size_t pos = 0;
        for (;;) {
            ++digits[pos];
            if (digits[pos] < p) break;
            digits[pos] = pos + 1 == digits.size() ? 1 : 0;
            ++pos;
            if (pos == digits.size()) return found;
        }
    }
}

}  // namespace commpoly

#endif
