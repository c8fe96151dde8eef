#ifndef COMMPOLY_NUMTHEORY_HPP
#define COMMPOLY_NUMTHEORY_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace commpoly {

// Desk-scale elementary number theory on int64. All arguments are small
// (moduli < 10^4, divisor arguments a few hundred); trial division is plenty.

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::int64_t> lo, hi;
    for (std::int64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) result -= result / n;
    return result;
}

// smallest f >= 1 with p^f = 1 (mod n)
inline std::int64_t mult_order(std::int64_t p, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("mult_order: modulus must be >= 2");
    std::int64_t base = p % n;
    if (base < 0) base += n;
    if (std::gcd(base, n) != 1) throw std::invalid_argument("mult_order: gcd(p, n) != 1");
    std::int64_t acc = base % n, f = 1;
    while (acc != 1 % n) {
        acc = acc * base % n;
        ++f;
        if (f > n) throw std::logic_error("mult_order: no order found");  // unreachable
    }
    return f;
}

inline std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
    base %= m;
    if (base < 0) base += m;
    std::int64_t r = 1 % m;
    while (e > 0) {
        if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * base % m);
        base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % m);
        e >>= 1;
    }
    return r;
}

}  // namespace commpoly

#endif
