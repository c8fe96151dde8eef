#ifndef COMMPOLY_POLY_HPP
#define COMMPOLY_POLY_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "commpoly/fp.hpp"
#include "commpoly/integer.hpp"
#include "commpoly/rational.hpp"

namespace commpoly {

// ring-context helpers: Fp scalars carry their modulus, so "zero" and "one"
// are derived from an exemplar element rather than default-constructed
inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer one_like(const Integer&) { return Integer(1); }
inline Integer from_int(long long v, const Integer&) { return Integer(v); }
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int(long long v, const Rational&) { return Rational(v); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.p); }
inline Fp one_like(const Fp& x) { return Fp(1, x.p); }
inline Fp from_int(long long v, const Fp& x) { return Fp(v % x.p, x.p); }
inline Rational inverse(const Rational& x) { return x.reciprocal(); }

// Dense univariate polynomial over a coefficient ring R (Integer, Rational,
// Fp). Coefficients ascending; canonical form never stores trailing zeros;
// the zero polynomial is the empty list with degree() == -1 as the sentinel.
template <class R>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](std::size_t i) const { return c_[i]; }
    const R& leading() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    std::vector<R> c_;

    void trim() {
        while (!c_.empty() && commpoly::is_zero(c_.back())) c_.pop_back();
    }
};

template <class R>
Poly<R> constant_poly(const R& c) {
    return Poly<R>(std::vector<R>{c});
}

template <class R>
Poly<R> monomial(const R& c, std::size_t k) {
    if (is_zero(c)) return Poly<R>{};
    std::vector<R> v(k + 1, zero_like(c));
    v[k] = c;
    return Poly<R>(std::move(v));
}

template <class R>
Poly<R> add(const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const auto &ac = a.coeffs(), &bc = b.coeffs();
    std::vector<R> r;
    r.reserve(std::max(ac.size(), bc.size()));
    for (std::size_t i = 0; i < std::max(ac.size(), bc.size()); ++i) {
        if (i < ac.size() && i < bc.size())
            r.push_back(ac[i] + bc[i]);
        else
            r.push_back(i < ac.size() ? ac[i] : bc[i]);
    }
    return Poly<R>(std::move(r));
}

template <class R>
Poly<R> neg(const Poly<R>& a) {
    std::vector<R> r;
    r.reserve(a.coeffs().size());
    for (const R& c : a.coeffs()) r.push_back(-c);
    return Poly<R>(std::move(r));
}

template <class R>
Poly<R> sub(const Poly<R>& a, const Poly<R>& b) {
    return add(a, neg(b));
}

template <class R>
Poly<R> mul(const Poly<R>& a, const Poly<R>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<R>{};
    const auto &ac = a.coeffs(), &bc = b.coeffs();
    std::vector<R> r(ac.size() + bc.size() - 1, zero_like(ac[0]));
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (is_zero(ac[i])) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) r[i + j] += ac[i] * bc[j];
    }
    return Poly<R>(std::move(r));
}

template <class R>
Poly<R> scale(const Poly<R>& a, const R& s) {
    if (is_zero(s)) return Poly<R>{};
    std::vector<R> r;
    r.reserve(a.coeffs().size());
    for (const R& c : a.coeffs()) r.push_back(c * s);
    return Poly<R>(std::move(r));
}

template <class R>
Poly<R> operator+(const Poly<R>& a, const Poly<R>& b) { return add(a, b); }
template <class R>
Poly<R> operator-(const Poly<R>& a, const Poly<R>& b) { return sub(a, b); }
template <class R>
Poly<R> operator-(const Poly<R>& a) { return neg(a); }
template <class R>
Poly<R> operator*(const Poly<R>& a, const Poly<R>& b) { return mul(a, b); }
template <class R>
Poly<R> operator*(const Poly<R>& a, const R& s) { return scale(a, s); }
template <class R>
Poly<R> operator*(const R& s, const Poly<R>& a) { return scale(a, s); }

// p(q(x)) by Horner accumulation
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
    if (p.is_zero()) return Poly<R>{};
    const auto& pc = p.coeffs();
    Poly<R> acc = constant_poly(pc.back());
    for (std::size_t i = pc.size() - 1; i-- > 0;) {
        acc = mul(acc, q);
        acc = add(acc, constant_poly(pc[i]));
    }
    return acc;
}

// Rational composition clears denominators once and runs the Horner loop over
// Z, reconstructing rationals only at the end; avoids a gcd per intermediate
// coefficient, which dominates otherwise.
inline Poly<Rational> compose(const Poly<Rational>& p, const Poly<Rational>& q) {
    if (p.degree() < 1) return p;
    Integer dp(1), dq(1);
    for (const Rational& c : p.coeffs()) dp = lcm(dp, c.den());
    for (const Rational& c : q.coeffs()) dq = lcm(dq, c.den());
    std::size_t d = p.coeffs().size() - 1;
    std::vector<Integer> np;
    np.reserve(d + 1);
    for (const Rational& c : p.coeffs()) np.push_back(c.num() * (dp / c.den()));
    std::vector<Integer> qi;
    qi.reserve(q.coeffs().size());
    for (const Rational& c : q.coeffs()) qi.push_back(c.num() * (dq / c.den()));
    Poly<Integer> qz(std::move(qi));
    std::vector<Integer> dq_pow(d + 1);
    dq_pow[0] = Integer(1);
    for (std::size_t i = 1; i <= d; ++i) dq_pow[i] = dq_pow[i - 1] * dq;
    Poly<Integer> acc = constant_poly(np[d]);
    for (std::size_t i = d; i-- > 0;) {
        acc = mul(acc, qz);
        acc = add(acc, constant_poly(np[i] * dq_pow[d - i]));
    }
    Integer denom = dp * dq_pow[d];
    std::vector<Rational> out;
    out.reserve(acc.coeffs().size());
    for (const Integer& c : acc.coeffs()) out.emplace_back(c, denom);
    return Poly<Rational>(std::move(out));
}

// Euclidean division over a field (Rational or Fp): num = quot*den + rem,
// deg rem < deg den, unique.
template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& num, const Poly<F>& den) {
    if (den.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    if (num.degree() < den.degree()) return {Poly<F>{}, num};
    std::vector<F> rem = num.coeffs();
    const auto& dc = den.coeffs();
    F lead_inv = inverse(den.leading());
    std::size_t dn = dc.size() - 1;
    std::vector<F> quot(rem.size() - dn, zero_like(rem[0]));
    for (std::size_t k = quot.size(); k-- > 0;) {
        F c = rem[k + dn] * lead_inv;
        quot[k] = c;
        if (is_zero(c)) continue;
        for (std::size_t i = 0; i <= dn; ++i) rem[k + i] -= c * dc[i];
    }
    rem.resize(dn);
    return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> make_monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return scale(p, inverse(p.leading()));
}

// monic gcd via the Euclidean algorithm
template <class F>
Poly<F> gcd_monic(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd_monic: both inputs zero");
    while (!b.is_zero()) {
        Poly<F> r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <class R>
R eval(const Poly<R>& p, const R& x0) {
    R acc = zero_like(x0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x0 + p.coeffs()[i];
    return acc;
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
    if (p.degree() < 1) return Poly<R>{};
    std::vector<R> r;
    r.reserve(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        r.push_back(p.coeffs()[i] * from_int(static_cast<long long>(i), p.coeffs()[i]));
    return Poly<R>(std::move(r));
}

template <class R>
Poly<R> poly_pow(const Poly<R>& base, unsigned long long e) {
    if (base.is_zero()) {
        if (e == 0) throw std::domain_error("poly_pow: 0^0");
        return Poly<R>{};
    }
    Poly<R> r = constant_poly(one_like(base.leading()));
    Poly<R> b = base;
    while (e) {
        if (e & 1ULL) r = mul(r, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return r;
}

inline Poly<Rational> rational_poly(const Poly<Integer>& p) {
    std::vector<Rational> r;
    r.reserve(p.coeffs().size());
    for (const Integer& c : p.coeffs()) r.emplace_back(c);
    return Poly<Rational>(std::move(r));
}

// asserts Z[x] membership; theorems that claim integrality divide over Q and
// then pass through here
inline Poly<Integer> integer_poly(const Poly<Rational>& p) {
    std::vector<Integer> r;
    r.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs()) {
        if (!c.is_integer())
            throw std::domain_error("integer_poly: non-integral coefficient " + c.to_string());
        r.push_back(c.num());
    }
    return Poly<Integer>(std::move(r));
}

inline std::int64_t mod_small(const Integer& v, std::int64_t p) {
    Integer m = v % Integer(p);
    std::int64_t r = *m.to_int64();
    return r < 0 ? r + p : r;
}

inline Poly<Fp> reduce_mod_p(const Poly<Integer>& f, std::int64_t p) {
    FpField gf(p);
    std::vector<Fp> r;
    r.reserve(f.coeffs().size());
    for (const Integer& c : f.coeffs()) r.push_back(gf(mod_small(c, p)));
    return Poly<Fp>(std::move(r));
}

// coefficientwise reduction; every denominator must be a unit mod p
inline Poly<Fp> reduce_mod_p(const Poly<Rational>& f, std::int64_t p) {
    FpField gf(p);
    std::vector<Fp> r;
    r.reserve(f.coeffs().size());
    for (const Rational& c : f.coeffs()) {
        std::int64_t den = mod_small(c.den(), p);
        if (den == 0)
            throw std::domain_error("reduce_mod_p: denominator divisible by " + std::to_string(p));
        r.push_back(gf(mod_small(c.num(), p)) * gf(den).inverse());
    }
    return Poly<Fp>(std::move(r));
}

inline std::complex<double> eval_numeric(const Poly<Rational>& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].to_double();
    return acc;
}

inline std::complex<double> eval_numeric(const Poly<Integer>& p, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].to_double();
    return acc;
}

using PolyQ = Poly<Rational>;
using PolyZ = Poly<Integer>;
using PolyFp = Poly<Fp>;

}  // namespace commpoly

#endif
