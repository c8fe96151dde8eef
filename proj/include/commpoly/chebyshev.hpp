#ifndef COMMPOLY_CHEBYSHEV_HPP
#define COMMPOLY_CHEBYSHEV_HPP

#include <mutex>
#include <stdexcept>
#include <vector>

#include "commpoly/poly.hpp"

namespace commpoly {

enum class ChebKind { First, Second };

namespace detail {

// shared memo tables for T_n / U_n, grown monotonically under a lock; the
// result is copied out while the lock is held (growth may reallocate)
inline Poly<Rational> cheb_cached(ChebKind kind, std::size_t n) {
    static std::mutex mtx;
    static std::vector<Poly<Rational>> first, second;
    std::lock_guard<std::mutex> lock(mtx);
    auto& table = kind == ChebKind::First ? first : second;
    if (table.empty()) {
        table.push_back(constant_poly(Rational(1)));
        table.push_back(monomial(Rational(kind == ChebKind::First ? 1 : 2), 1));
    }
    Poly<Rational> two_x = monomial(Rational(2), 1);
    while (table.size() <= n)
        table.push_back(sub(mul(two_x, table[table.size() - 1]), table[table.size() - 2]));
    return table[n];
}

}  // namespace detail

// T_n or U_n by the three-term recurrence
inline Poly<Rational> cheb(ChebKind kind, std::size_t n) { return detail::cheb_cached(kind, n); }

// Dickson polynomial: the unique D_n with D_n(t + 1/t) = t^n + t^-n;
// equals 2 T_n(x/2) with integer coefficients.
inline Poly<Integer> dickson(std::size_t n) {
    Poly<Integer> prev = constant_poly(Integer(2));
    if (n == 0) return prev;
    Poly<Integer> cur = monomial(Integer(1), 1);
    Poly<Integer> x = cur;
    for (std::size_t k = 2; k <= n; ++k) {
        Poly<Integer> next = sub(mul(x, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// U_{k-1}(b) for the five special b, by the closed case tables rather than
// polynomial evaluation
inline Rational u_special(const Rational& b, long long k) {
    if (k < 1) throw std::invalid_argument("u_special: k must be positive");
    if (b == Rational(1)) return Rational(k);
    if (b == Rational(-1)) return k % 2 == 1 ? Rational(k) : Rational(-k);
    if (b == Rational(0)) {
        if (k % 2 == 0) return Rational(0);
        return k % 4 == 1 ? Rational(1) : Rational(-1);
    }
    if (b == Rational(1, 2)) {
        if (k % 3 == 0) return Rational(0);
        long long r = k % 6;
        return (r == 1 || r == 2) ? Rational(1) : Rational(-1);
    }
    if (b == Rational(-1, 2)) {
        long long r = k % 3;
        if (r == 0) return Rational(0);
        return r == 1 ? Rational(1) : Rational(-1);
    }
    throw std::invalid_argument("u_special: b must be one of 0, +-1, +-1/2");
}

}  // namespace commpoly

#endif
