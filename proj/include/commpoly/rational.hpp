#ifndef COMMPOLY_RATIONAL_HPP
#define COMMPOLY_RATIONAL_HPP

#include <stdexcept>
#include <type_traits>
#include <string>
#include <string_view>
#include <utility>

#include "commpoly/integer.hpp"

namespace commpoly {

// Reduced fraction num/den with den > 0; zero is 0/1. Always canonical, so
// operator== is structural equality.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    template <class T>
        requires(std::is_integral_v<T> && !std::is_same_v<T, bool>)
    Rational(T n) : num_(n), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // accepts "p" or "p/q"
    static Rational from_string(std::string_view s) {
        std::size_t slash = s.find('/');
        if (slash == std::string_view::npos) return Rational(Integer::from_string(s));
        return Rational(Integer::from_string(s.substr(0, slash)),
                        Integer::from_string(s.substr(slash + 1)));
    }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    // b in (1/2)Z, i.e. 2b integral
    bool is_half_integer() const { return den_.is_one() || den_ == Integer(2); }
    int signum() const { return num_.signum(); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // cross-reduce before multiplying to keep intermediates small
        Integer g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Rational r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        if (r.num_.is_zero()) r.den_ = Integer(1);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return a * b.reciprocal();
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        Rational r;
        if (num_.is_negative()) {
            r.num_ = -den_;
            r.den_ = -num_;
        } else {
            r.num_ = den_;
            r.den_ = num_;
        }
        return r;
    }

    friend Rational pow(const Rational& base, long long e) {
        if (e < 0) return pow(base.reciprocal(), -e);
        Rational r;
        r.num_ = pow(base.num_, static_cast<unsigned long long>(e));
        r.den_ = pow(base.den_, static_cast<unsigned long long>(e));
        return r;  // base reduced => powers reduced
    }

    friend Rational abs(const Rational& a) { return a.num_.is_negative() ? -a : a; }

    std::string to_string() const {
        std::string s = num_.to_string();
        if (!den_.is_one()) s += "/" + den_.to_string();
        return s;
    }

    double to_double() const { return num_.to_double() / den_.to_double(); }

  private:
    Integer num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = Integer(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline bool is_zero(const Rational& v) { return v.is_zero(); }

}  // namespace commpoly

#endif
