#ifndef COMMPOLY_FP_HPP
#define COMMPOLY_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "commpoly/numtheory.hpp"

namespace commpoly {

// Prime-field scalar: value in [0, p) plus its modulus. Elements of different
// moduli never mix; any binary op on mismatched moduli throws. Primality is
// checked once when a field is entered (FpField, reduce_mod_p), not per element.
struct Fp {
    std::int64_t v = 0;
    std::int64_t p = 0;

    Fp() = default;
    Fp(std::int64_t value, std::int64_t modulus) : v(value % modulus), p(modulus) {
        if (v < 0) v += p;
    }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    friend void check_same_field(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.p) +
                                                    " and " + std::to_string(b.p));
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp operator-() const { return Fp(p - v, p); }
    friend Fp operator+(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return Fp(a.v + b.v, a.p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return Fp(a.v - b.v, a.p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return Fp(static_cast<std::int64_t>(static_cast<__int128>(a.v) * b.v % a.p), a.p);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        std::int64_t a = v, m = p, x0 = 1, x1 = 0;
        while (m) {
            std::int64_t q = a / m;
            a -= q * m;
            std::swap(a, m);
            x0 -= q * x1;
            std::swap(x0, x1);
        }
        return Fp(x0, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return a * b.inverse();
    }
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Fp inverse(const Fp& x) { return x.inverse(); }

// Field handle; validates primality of the modulus on construction.
class FpField {
  public:
    explicit FpField(std::int64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("FpField: modulus " + std::to_string(p) +
                                                      " is not prime");
    }
    std::int64_t modulus() const { return p_; }
    Fp operator()(std::int64_t v) const { return Fp(v, p_); }
    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }

  private:
    std::int64_t p_;
};

}  // namespace commpoly

#endif
