#ifndef COMMPOLY_DIVISION_HPP
#define COMMPOLY_DIVISION_HPP

#include <numeric>
#include <stdexcept>

#include "commpoly/chains.hpp"
#include "commpoly/chebyshev.hpp"
#include "commpoly/poly.hpp"

namespace commpoly {

enum class DivSource { ClosedForm, Oracle };

struct DivRemResult {
    Poly<Rational> quot, rem;
    DivSource source = DivSource::ClosedForm;
};

// Euclidean division T_n / T_m assembled from Chebyshev index shifts, never
// from polynomial long division. The quotient sign exponent must be (i-1),
// not i: the division invariant forces it (T_4 = (2 T_2) T_2 - 1). The
// branch split is on l with |n - 2lm| < m, the integer nearest n/2m; odd
// multiples n = (2l-1)m take the exact-division branch.
inline DivRemResult divrem_cheb_raw(long long m, long long n) {
    if (m < 1 || n < m) throw std::invalid_argument("divrem_cheb_raw: need 1 <= m <= n");
    auto t = [](long long k) { return cheb(ChebKind::First, static_cast<std::size_t>(k)); };
    DivRemResult out;
    if (n % m == 0 && (n / m) % 2 == 1) {
        // n = (2l-1)m: remainder vanishes, constant tail (-1)^(l-1)
        long long l = (n / m + 1) / 2;
        Poly<Rational> q = constant_poly(Rational(l % 2 == 1 ? 1 : -1));
        for (long long i = 1; i <= l - 1; ++i) {
            Rational sign(i % 2 == 1 ? 2 : -2);
            q = add(q, scale(t(n - (2 * i - 1) * m), sign));
        }
        out.quot = q;
        out.rem = Poly<Rational>{};
        return out;
    }
    long long l = (n + m) / (2 * m);  // unique l with |n - 2lm| < m
    Poly<Rational> q;
    for (long long i = 1; i <= l; ++i) {
        Rational sign(i % 2 == 1 ? 2 : -2);
        q = add(q, scale(t(n - (2 * i - 1) * m), sign));
    }
    out.quot = q;
    long long rest = n - 2 * l * m;
    out.rem = scale(t(rest < 0 ? -rest : rest), Rational(l % 2 == 0 ? 1 : -1));
    return out;
}

namespace detail {

// f_0 as the closed forms use it: (T_0(ax+b) - b)/a = (1-b)/a, same for the
// monomial type
inline Poly<Rational> chain_f0(const Rational& a, const Rational& b) {
    return constant_poly((Rational(1) - b) / a);
}

inline Poly<Rational> chain_f(const ChainSpec& spec, long long idx) {
    return idx == 0 ? chain_f0(spec.a, spec.b) : chain_member(spec, idx);
}

}  // namespace detail

// Quotient/remainder of f_n / f_m for the Chebyshev-type chain with
// parameters (a, b): q = 2a sum c_i f_{n-im} + d, the remainder per the
// n = km vs m-nmid-n case split, c_i = U_{i-1}(b).
inline DivRemResult divrem_cheb_chain(const Rational& a, const Rational& b, long long m,
                                      long long n) {
    if (a.is_zero()) throw std::invalid_argument("divrem_cheb_chain: a must be nonzero");
    if (m < 1 || n <= m) throw std::invalid_argument("divrem_cheb_chain: need 1 <= m < n");
    ChainSpec spec(ChainType::Chebyshev, a, b);
    long long k = n / m;
    auto c = [&](long long i) { return eval(cheb(ChebKind::Second, static_cast<std::size_t>(i - 1)), b); };
    Rational c_sum(0);
    Poly<Rational> q;
    for (long long i = 1; i <= k; ++i) {
        Rational ci = c(i);
        c_sum += ci;
        if (!ci.is_zero()) q = add(q, scale(detail::chain_f(spec, n - i * m), Rational(2) * a * ci));
    }
    DivRemResult out;
    if (n % m == 0) {
        Rational d = Rational(2) * b * c_sum - c(k);
        out.quot = add(q, constant_poly(d));
        out.rem = constant_poly((b * c(k) - b - c(k - 1)) / a);
    } else {
        Rational d = Rational(2) * b * c_sum;
        out.quot = add(q, constant_poly(d));
        Poly<Rational> r = scale(detail::chain_f(spec, n - k * m), c(k + 1));
        r = sub(r, scale(detail::chain_f(spec, (k + 1) * m - n), c(k)));
        r = add(r, constant_poly(b / a * (c(k + 1) - c(k) - Rational(1))));
        out.rem = r;
    }
    return out;
}

// Quotient/remainder of f_n / f_m for the monomial-type chain:
// q = a sum b^(i-1) f_{n-im} + sum b^i, r = b^k f_{n-km} + (b^(k+1)-b)/a.
// b^k is evaluated first; when it vanishes the chain member is never built.
inline DivRemResult divrem_mono_chain(const Rational& a, const Rational& b, long long m,
                                      long long n) {
    if (a.is_zero()) throw std::invalid_argument("divrem_mono_chain: a must be nonzero");
    if (m < 1 || n < m) throw std::invalid_argument("divrem_mono_chain: need 1 <= m <= n");
    ChainSpec spec(ChainType::Monomial, a, b);
    long long k = n / m;
    Poly<Rational> q;
    Rational b_pow(1);  // b^(i-1)
    Rational geom(0);
    for (long long i = 1; i <= k; ++i) {
        if (!b_pow.is_zero()) q = add(q, scale(detail::chain_f(spec, n - i * m), a * b_pow));
        b_pow *= b;
        geom += b_pow;
    }
    DivRemResult out;
    out.quot = add(q, constant_poly(geom));
    Rational bk = pow(b, k);
    Poly<Rational> r = bk.is_zero() ? Poly<Rational>{} : scale(detail::chain_f(spec, n - k * m), bk);
    out.rem = add(r, constant_poly((bk * b - b) / a));
    return out;
}

// Cor 2.8 / Cor 3.3 divisibility predicate: a pure table lookup on b, no
// polynomial arithmetic. Total in rational b (outside the special sets the
// answer is "never divides").
inline bool divides_closed(const ChainSpec& spec, long long m, long long n) {
    if (spec.type == ChainType::Chebyshev) {
        if (m < 1 || n <= m) throw std::invalid_argument("divides_closed: need 1 <= m < n");
    } else if (m < 1 || n < m) {
        throw std::invalid_argument("divides_closed: need 1 <= m <= n");
    }
    const Rational& b = spec.b;
    if (spec.type == ChainType::Monomial) {
        if (m == n) return true;  // the never-divides clause only covers m < n
        if (b == Rational(0)) return true;  // m <= n suffices
        if (n % m != 0) return false;
        long long ratio = n / m;
        if (b == Rational(1)) return true;
        if (b == Rational(-1)) return ratio % 2 == 1;
        return false;
    }
    if (n % m != 0) return false;
    long long ratio = n / m;
    if (b == Rational(1)) return true;
    if (b == Rational(0) || b == Rational(-1)) return ratio % 2 == 1;
    if (b == Rational(1, 2)) return std::gcd(ratio, 6LL) == 1;
    if (b == Rational(-1, 2)) return std::gcd(ratio, 3LL) == 1;
    return false;
}

}  // namespace commpoly

#endif
