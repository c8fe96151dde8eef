#ifndef COMMPOLY_FACTOR_HPP
#define COMMPOLY_FACTOR_HPP

#include <cmath>
#include <complex>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "commpoly/chains.hpp"
#include "commpoly/numtheory.hpp"
#include "commpoly/poly.hpp"

namespace commpoly {

namespace detail {

// substitute x -> x^k by spreading coefficients
inline Poly<Integer> inflate(const Poly<Integer>& p, std::size_t k) {
    if (k == 1 || p.is_zero()) return p;
    std::vector<Integer> r((p.coeffs().size() - 1) * k + 1, Integer(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) r[i * k] = p.coeffs()[i];
    return Poly<Integer>(std::move(r));
}

inline std::int64_t radical(std::int64_t n) {
    std::int64_t r = 1;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            r *= p;
            while (n % p == 0) n /= p;
        }
    return n > 1 ? r * n : r;
}

// Rewrites a palindromic even-degree polynomial P(x) = x^m Q(x + 1/x) into Q
// in the Dickson basis: Q = c_m + sum_{j>=1} c_{m+j} D_j. Works over any
// coefficient ring, which modp reuses for the mod-p side.
template <class R>
Poly<R> dickson_rewrite(const Poly<R>& p) {
    int deg = p.degree();
    if (deg < 0 || deg % 2 != 0)
        throw std::invalid_argument("dickson_rewrite: even positive degree required");
    std::size_t m = static_cast<std::size_t>(deg) / 2;
    for (std::size_t j = 0; j <= m; ++j)
        if (!(p.coeffs()[m - j] == p.coeffs()[m + j]))
            throw std::invalid_argument("dickson_rewrite: polynomial is not palindromic");
    R one = one_like(p.leading());
    Poly<R> result = constant_poly(p.coeffs()[m]);
    Poly<R> d_prev = constant_poly(from_int(2, one));  // D_0
    Poly<R> d_cur = monomial(one, 1);                  // D_1
    Poly<R> x = d_cur;
    for (std::size_t j = 1; j <= m; ++j) {
        result = add(result, scale(d_cur, p.coeffs()[m + j]));
        if (j < m) {
            Poly<R> d_next = sub(mul(x, d_cur), d_prev);
            d_prev = std::move(d_cur);
            d_cur = std::move(d_next);
        }
    }
    return result;
}

}  // namespace detail

// n-th cyclotomic polynomial by recursive exact division at the squarefree
// radical, then x -> x^(n/rad): Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
inline Poly<Integer> cyclotomic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    static std::mutex mtx;
    static std::vector<Poly<Integer>> cache;  // cache[k] = Phi_k for squarefree k
    std::int64_t rad = detail::radical(n);
    Poly<Integer> base;
    {
        std::lock_guard<std::mutex> lock(mtx);
        if (cache.size() <= static_cast<std::size_t>(rad)) cache.resize(static_cast<std::size_t>(rad) + 1);
        if (cache[static_cast<std::size_t>(rad)].is_zero()) {
            // fill all squarefree divisors bottom-up
            for (std::int64_t d : divisors(rad)) {
                auto& slot = cache[static_cast<std::size_t>(d)];
                if (!slot.is_zero()) continue;
                Poly<Rational> num =
                    sub(monomial(Rational(1), static_cast<std::size_t>(d)), constant_poly(Rational(1)));
                Poly<Rational> den = constant_poly(Rational(1));
                for (std::int64_t e : divisors(d))
                    if (e < d) den = mul(den, rational_poly(cache[static_cast<std::size_t>(e)]));
                auto [q, r] = divrem(num, den);
                if (!r.is_zero()) throw std::logic_error("cyclotomic: non-exact division");
                slot = integer_poly(q);
            }
        }
        base = cache[static_cast<std::size_t>(rad)];
    }
    return detail::inflate(base, static_cast<std::size_t>(n / rad));
}

// minimal polynomial of 2cos(2pi/n); degree phi(n)/2 for n >= 3, with the
// degree-1 conventions Psi_1 = x-2, Psi_2 = x+2
struct CosMinPoly {
    std::int64_t n;
    Poly<Integer> poly;
};

inline CosMinPoly psi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("psi: n must be positive");
    if (n == 1) return {1, Poly<Integer>(std::vector<Integer>{Integer(-2), Integer(1)})};
    if (n == 2) return {2, Poly<Integer>(std::vector<Integer>{Integer(2), Integer(1)})};
    return {n, detail::dickson_rewrite(cyclotomic(n))};
}

// c_n(x) = x (n odd), x(x+4) (n even); starred variant replaces the even case by 1
inline Poly<Integer> c_poly(std::int64_t n, bool starred) {
    if (n < 1) throw std::invalid_argument("c_poly: n must be positive");
    if (n % 2 == 1) return monomial(Integer(1), 1);
    if (starred) return constant_poly(Integer(1));
    return Poly<Integer>(std::vector<Integer>{Integer(0), Integer(4), Integer(1)});
}

struct FactorTerm {
    Poly<Integer> poly;
    unsigned mult;
    std::string label;
};

// multiset of monic irreducible factors with an exactness certificate:
// unit * prod poly^mult reproduces the chain member it was built for
struct Factorization {
    Rational unit;
    std::vector<FactorTerm> factors;
};

inline Poly<Rational> expand(const Factorization& f) {
    Poly<Rational> acc = constant_poly(f.unit);
    for (const FactorTerm& t : f.factors)
        acc = mul(acc, poly_pow(rational_poly(t.poly), t.mult));
    return acc;
}

namespace detail {

inline Poly<Integer> shifted_psi(std::int64_t k, long long shift) {
    Poly<Integer> p = psi(k).poly;
    if (shift == 0) return p;
    return compose(p, Poly<Integer>(std::vector<Integer>{Integer(shift), Integer(1)}));
}

inline std::string shift_suffix(long long shift) {
    if (shift == 0) return "(x)";
    return shift > 0 ? "(x+" + std::to_string(shift) + ")" : "(x" + std::to_string(shift) + ")";
}

inline void certify(const Factorization& f, const Poly<Rational>& target, const char* who) {
    if (expand(f) != target) throw std::logic_error(std::string(who) + ": certificate failed");
    long long deg = 0;
    for (const FactorTerm& t : f.factors) {
        if (!t.poly.leading().is_one()) throw std::logic_error(std::string(who) + ": non-monic factor");
        deg += static_cast<long long>(t.mult) * t.poly.degree();
    }
    if (deg != target.degree()) throw std::logic_error(std::string(who) + ": degree bookkeeping failed");
}

}  // namespace detail

// the five factorization cases of the Chebyshev-type monic chain
// f_n = 2 T_n(x/2 + b) - 2b, b in {0, +-1, +-1/2}
inline Factorization factor_cheb_chain(const Rational& b, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factor_cheb_chain: n must be positive");
    Factorization out;
    out.unit = Rational(1);
    auto add_psi = [&](std::int64_t k, long long shift, unsigned mult) {
        out.factors.push_back({detail::shifted_psi(k, shift), mult,
                               "Psi_" + std::to_string(k) + detail::shift_suffix(shift)});
    };
    if (b == Rational(0)) {
        for (std::int64_t k : divisors(n))
            if ((n / k) % 2 == 1) add_psi(4 * k, 0, 1);
    } else if (b == Rational(1)) {
        out.factors.push_back({monomial(Integer(1), 1), 1, "x"});
        if (n % 2 == 0)
            out.factors.push_back(
                {Poly<Integer>(std::vector<Integer>{Integer(4), Integer(1)}), 1, "x+4"});
        for (std::int64_t k : divisors(n))
            if (k > 2) add_psi(k, 2, 2);
    } else if (b == Rational(-1)) {
        if (n % 2 == 1) out.factors.push_back({monomial(Integer(1), 1), 1, "x"});
        for (std::int64_t k : divisors(n))
            if (k > 1 && (n / k) % 2 == 1) add_psi(2 * k, -2, 2);
    } else if (b == Rational(1, 2)) {
        for (std::int64_t k : divisors(n))
            if (std::gcd(n / k, std::int64_t{6}) == 1) add_psi(6 * k, 1, 1);
    } else if (b == Rational(-1, 2)) {
        for (std::int64_t k : divisors(n))
            if (std::gcd(n / k, std::int64_t{3}) == 1) add_psi(3 * k, -1, 1);
    } else {
        throw std::invalid_argument("factor_cheb_chain: b must be one of 0, +-1, +-1/2");
    }
    detail::certify(out, chain_member(ChainSpec(ChainType::Chebyshev, Rational(1, 2), b), n),
                    "factor_cheb_chain");
    return out;
}

// shifted cyclotomic products for the monomial-type monic chain
// f_n = (x+b)^n - b with b = 1 or -1; no such factorization exists otherwise
inline Factorization factor_mono_chain(std::int64_t b, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factor_mono_chain: n must be positive");
    if (b != 1 && b != -1)
        throw std::invalid_argument("factor_mono_chain: b must be 1 or -1");
    Factorization out;
    out.unit = Rational(1);
    auto add_phi = [&](std::int64_t k, long long shift) {
        Poly<Integer> p = compose(cyclotomic(k),
                                  Poly<Integer>(std::vector<Integer>{Integer(shift), Integer(1)}));
        out.factors.push_back({p, 1, "Phi_" + std::to_string(k) + detail::shift_suffix(shift)});
    };
    if (b == 1) {
        for (std::int64_t k : divisors(n)) add_phi(k, 1);
    } else {
        for (std::int64_t k : divisors(2 * n))
            if ((2 * n / k) % 2 == 1) add_phi(k, -1);
    }
    detail::certify(out, chain_member(ChainSpec(ChainType::Monomial, Rational(1), Rational(b)), n),
                    "factor_mono_chain");
    return out;
}

// Cor 2.13 / Cor 3.4 closed-form gcd: evaluates the case table on
// (b, m_1, n_1) and returns f_d, or nullopt for the coprime verdict; never
// runs the Euclidean algorithm. Chebyshev scope is b in (1/2)Z, monomial
// scope is nonzero integer b.
inline std::optional<Poly<Rational>> gcd_closed(ChainType type, const Rational& b, long long m,
                                                long long n) {
    if (m < 1 || n <= m) throw std::invalid_argument("gcd_closed: need 1 <= m < n");
    long long d = std::gcd(m, n), m1 = m / d, n1 = n / d;
    if (type == ChainType::Chebyshev) {
        if (!b.is_half_integer())
            throw std::invalid_argument("gcd_closed: Chebyshev case needs b in (1/2)Z");
        bool hit = false;
        if (b == Rational(1)) hit = true;
        else if (b == Rational(0) || b == Rational(-1)) hit = m1 % 2 == 1 && n1 % 2 == 1;
        else if (b == Rational(1, 2)) hit = std::gcd(m1, 6LL) == 1 && std::gcd(n1, 6LL) == 1;
        else if (b == Rational(-1, 2)) hit = std::gcd(m1, 3LL) == 1 && std::gcd(n1, 3LL) == 1;
        if (!hit) return std::nullopt;
        return chain_member(ChainSpec(ChainType::Chebyshev, Rational(1, 2), b), d);
    }
    if (!b.is_integer() || b.is_zero())
        throw std::invalid_argument("gcd_closed: monomial case needs nonzero integer b");
    bool hit = false;
    if (b == Rational(1)) hit = true;
    else if (b == Rational(-1)) hit = m1 % 2 == 1 && n1 % 2 == 1;
    if (!hit) return std::nullopt;
    return chain_member(ChainSpec(ChainType::Monomial, Rational(1), b), d);
}

// root descriptor for T_n(x/2) - b, b in (1/2)Z
struct ChebRoot {
    std::string form;
    std::complex<double> value;
    bool multiple = false;
};

inline std::vector<ChebRoot> shifted_cheb_roots(const Rational& b, std::int64_t n) {
    if (!b.is_half_integer()) throw std::invalid_argument("shifted_cheb_roots: b must lie in (1/2)Z");
    if (n < 1) throw std::invalid_argument("shifted_cheb_roots: n must be positive");
    const double pi = 3.14159265358979323846;
    double bd = b.to_double();
    std::vector<ChebRoot> roots;
    roots.reserve(static_cast<std::size_t>(n));
    if (b >= Rational(-1) && b <= Rational(1)) {
        double theta = std::acos(bd);
        for (std::int64_t i = 0; i < n; ++i) {
            ChebRoot r;
            r.value = 2.0 * std::cos((theta + 2.0 * pi * static_cast<double>(i)) / static_cast<double>(n));
            r.form = "2cos((Arccos(" + b.to_string() + ")+2*pi*" + std::to_string(i) + ")/" +
                     std::to_string(n) + ")";
            // for b = +-1 the roots other than +-2 are multiple (Prop root case)
            if (b == Rational(1)) r.multiple = !(i == 0 || (n % 2 == 0 && i == n / 2));
            if (b == Rational(-1)) r.multiple = !(n % 2 == 1 && i == (n - 1) / 2);
            roots.push_back(std::move(r));
        }
        return roots;
    }
    double s = std::sqrt(bd * bd - 1.0);
    if (b > Rational(1)) {
        double u = std::pow(bd + s, 1.0 / static_cast<double>(n));
        double v = std::pow(bd - s, 1.0 / static_cast<double>(n));
        for (std::int64_t i = 0; i < n; ++i) {
            double ang = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n);
            ChebRoot r;
            r.value = u * std::polar(1.0, ang) + v * std::polar(1.0, -ang);
            r.form = "(b+sqrt(b^2-1))^(1/" + std::to_string(n) + ")*zeta_" + std::to_string(n) +
                     "^" + std::to_string(i) + "+(b-sqrt(b^2-1))^(1/" + std::to_string(n) +
                     ")*zeta_" + std::to_string(n) + "^-" + std::to_string(i);
            roots.push_back(std::move(r));
        }
        return roots;
    }
    double u = std::pow(-bd - s, 1.0 / static_cast<double>(n));
    double v = std::pow(-bd + s, 1.0 / static_cast<double>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        double ang = pi * static_cast<double>(2 * i + 1) / static_cast<double>(n);
        ChebRoot r;
        r.value = u * std::polar(1.0, ang) + v * std::polar(1.0, -ang);
        r.form = "|b+sqrt(b^2-1)|^(1/" + std::to_string(n) + ")*zeta_" + std::to_string(2 * n) +
                 "^" + std::to_string(2 * i + 1) + "+|b-sqrt(b^2-1)|^(1/" + std::to_string(n) +
                 ")*zeta_" + std::to_string(2 * n) + "^-" + std::to_string(2 * i + 1);
        roots.push_back(std::move(r));
    }
    return roots;
}

}  // namespace commpoly

#endif
