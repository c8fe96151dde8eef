#ifndef COMMPOLY_CHAINS_HPP
#define COMMPOLY_CHAINS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "commpoly/chebyshev.hpp"
#include "commpoly/poly.hpp"

namespace commpoly {

enum class ChainType { Chebyshev, Monomial };

inline const char* chain_type_name(ChainType t) {
    return t == ChainType::Chebyshev ? "chebyshev" : "monomial";
}

// lambda(x) = a x + b with a != 0; conjugation g = lambda^-1 ( f ( lambda ) )
struct SimilarityMap {
    Rational a, b;

    SimilarityMap(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a.is_zero()) throw std::invalid_argument("SimilarityMap: a must be nonzero");
    }

    Poly<Rational> poly() const {
        return Poly<Rational>(std::vector<Rational>{b, a});
    }
    SimilarityMap inverse() const { return SimilarityMap(a.reciprocal(), -b / a); }
    // (this o other)(x) = this(other(x))
    SimilarityMap after(const SimilarityMap& other) const {
        return SimilarityMap(a * other.a, a * other.b + b);
    }
};

inline Poly<Rational> conjugate(const Poly<Rational>& f, const SimilarityMap& lam) {
    Poly<Rational> inner = compose(f, lam.poly());
    return scale(sub(inner, constant_poly(lam.b)), lam.a.reciprocal());
}

// chain family descriptor: f_n = (T_n(ax+b) - b)/a or ((ax+b)^n - b)/a
struct ChainSpec {
    ChainType type;
    Rational a, b;

    ChainSpec(ChainType t, Rational a_, Rational b_)
        : type(t), a(std::move(a_)), b(std::move(b_)) {
        if (a.is_zero()) throw std::invalid_argument("ChainSpec: a must be nonzero");
    }

    SimilarityMap similarity() const { return SimilarityMap(a, b); }
};

// degree-n member by direct substitution; n >= 1 (chain indexing starts at 1,
// the excluded f_0 only ever appears inside division closed forms)
inline Poly<Rational> chain_member(const ChainSpec& spec, long long n) {
    if (n < 1) throw std::invalid_argument("chain_member: n must be >= 1");
    Poly<Rational> lam = spec.similarity().poly();
    Poly<Rational> inner = spec.type == ChainType::Chebyshev
                               ? compose(cheb(ChebKind::First, static_cast<std::size_t>(n)), lam)
                               : poly_pow(lam, static_cast<unsigned long long>(n));
    return scale(sub(inner, constant_poly(spec.b)), spec.a.reciprocal());
}

// members f_1..f_N via the recurrences (independent route used to cross-check
// the substitution path): Chebyshev type from the f_2 coefficient formula and
// f_n = 2(ax+b) f_{n-1} - f_{n-2} + 2bx + 2b(b-1)/a; monomial type from
// f_n = (ax+b) f_{n-1} + bx + (b^2-b)/a. Returned vector is 1-indexed.
inline std::vector<Poly<Rational>> chain_members_recurrence(const ChainSpec& spec, long long max_n) {
    if (max_n < 1) throw std::invalid_argument("chain_members_recurrence: max_n must be >= 1");
    const Rational &a = spec.a, &b = spec.b;
    std::vector<Poly<Rational>> f(static_cast<std::size_t>(max_n) + 1);
    f[1] = monomial(Rational(1), 1);
    if (spec.type == ChainType::Chebyshev) {
        if (max_n >= 2)
            f[2] = Poly<Rational>(std::vector<Rational>{
                (Rational(2) * b + 1) * (b - Rational(1)) / a, Rational(4) * b, Rational(2) * a});
        Poly<Rational> lin2 = Poly<Rational>(std::vector<Rational>{Rational(2) * b, Rational(2) * a});
        Poly<Rational> tail = Poly<Rational>(std::vector<Rational>{
            Rational(2) * b * (b - Rational(1)) / a, Rational(2) * b});
        for (long long n = 3; n <= max_n; ++n)
            f[static_cast<std::size_t>(n)] =
                add(sub(mul(lin2, f[static_cast<std::size_t>(n - 1)]), f[static_cast<std::size_t>(n - 2)]), tail);
    } else {
        Poly<Rational> lin = spec.similarity().poly();
        Poly<Rational> tail =
            Poly<Rational>(std::vector<Rational>{(b * b - b) / a, b});
        for (long long n = 2; n <= max_n; ++n)
            f[static_cast<std::size_t>(n)] = add(mul(lin, f[static_cast<std::size_t>(n - 1)]), tail);
    }
    f.erase(f.begin());
    return f;
}

// Condition (i): every member monic <=> a = 1/2 (Chebyshev) / a = 1 (monomial)
inline bool check_monic(const ChainSpec& spec) {
    return spec.type == ChainType::Chebyshev ? spec.a == Rational(1, 2) : spec.a == Rational(1);
}

// Condition (ii): every member in Z[x] <=> a in (1/2)Z and b-1 in aZ
// (Chebyshev) / a, b in Z and a | b(b-1) (monomial)
inline bool check_integral(const ChainSpec& spec) {
    const Rational &a = spec.a, &b = spec.b;
    if (spec.type == ChainType::Chebyshev)
        return a.is_half_integer() && ((b - Rational(1)) / a).is_integer();
    return a.is_integer() && b.is_integer() && (b * (b - Rational(1)) / a).is_integer();
}

// Solves (a, b) from the leading and linear coefficients of a quadratic for
// each chain type and keeps a type iff the constant term matches exactly.
// Over Q the two families' constant terms differ by 1/a, so at most one entry
// comes back; the interface still allows both.
inline std::vector<ChainSpec> classify_quadratic(const Poly<Rational>& f) {
    if (f.degree() != 2) throw std::invalid_argument("classify_quadratic: polynomial must be quadratic");
    const Rational& lead = f.coeffs()[2];
    const Rational& lin = f.coeffs()[1];
    const Rational& cst = f.coeffs()[0];
    std::vector<ChainSpec> out;
    {
        Rational a = lead / Rational(2), b = lin / Rational(4);
        if (!a.is_zero() && cst == (Rational(2) * b * b - b - Rational(1)) / a)
            out.emplace_back(ChainType::Chebyshev, a, b);
    }
    {
        Rational a = lead, b = lin / Rational(2);
        if (!a.is_zero() && cst == (b * b - b) / a)
            out.emplace_back(ChainType::Monomial, a, b);
    }
    return out;
}

}  // namespace commpoly

#endif
