#ifndef COMMPOLY_INTEGER_HPP
#define COMMPOLY_INTEGER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace commpoly {

// Arbitrary-precision signed integer, sign + magnitude, base 2^32 limbs
// (little-endian, no high zero limbs). Zero is the empty magnitude with
// non-negative sign, so equality is structural.
class Integer {
  public:
    Integer() = default;

    template <class T>
        requires(std::is_integral_v<T> && !std::is_same_v<T, bool>)
    Integer(T value) {
        long long v = static_cast<long long>(value);
        if (v == 0) return;
        neg_ = v < 0;
        // avoid overflow on LLONG_MIN
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
    }

    static Integer from_string(std::string_view s) {
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("Integer: empty digit string");
        Integer r;
        // consume in 9-digit chunks: r = r*10^chunk + chunk_value
        while (i < s.size()) {
            std::uint32_t chunk = 0, scale = 1;
            int taken = 0;
            while (i < s.size() && taken < 9) {
                char c = s[i];
                if (c < '0' || c > '9') throw std::invalid_argument("Integer: bad digit in string");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                scale *= 10;
                ++i;
                ++taken;
            }
            r.mul_small_inplace(scale);
            r.add_small_inplace(chunk);
        }
        r.neg_ = neg && !r.mag_.empty();
        return r;
    }

    std::string to_string() const {
        if (mag_.empty()) return "0";
        std::vector<std::uint32_t> groups;  // base 10^9 digits, little-endian
        std::vector<std::uint32_t> m = mag_;
        while (!m.empty()) groups.push_back(divmod_small(m, 1000000000u));
        std::string out = neg_ ? "-" : "";
        out += std::to_string(groups.back());
        for (std::size_t i = groups.size() - 1; i-- > 0;) {
            std::string g = std::to_string(groups[i]);
            out += std::string(9 - g.size(), '0') + g;
        }
        return out;
    }

    bool is_zero() const { return mag_.empty(); }
    bool is_one() const { return !neg_ && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return neg_; }
    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }
    int signum() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }

    friend bool operator==(const Integer& a, const Integer& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) {
        if (a.neg_ != b.neg_) return a.neg_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.neg_ ? c > 0 : c < 0;
    }
    friend bool operator>(const Integer& a, const Integer& b) { return b < a; }
    friend bool operator<=(const Integer& a, const Integer& b) { return !(b < a); }
    friend bool operator>=(const Integer& a, const Integer& b) { return !(a < b); }

    Integer operator-() const {
        Integer r = *this;
        if (!r.mag_.empty()) r.neg_ = !r.neg_;
        return r;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        if (a.neg_ == b.neg_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.neg_ = a.neg_ && !r.mag_.empty();
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.neg_ = a.neg_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.neg_ = b.neg_;
            }
        }
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        if (a.mag_.empty() || b.mag_.empty()) return r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    Integer& operator+=(const Integer& o) { return *this = *this + o; }
    Integer& operator-=(const Integer& o) { return *this = *this - o; }
    Integer& operator*=(const Integer& o) { return *this = *this * o; }

    // truncated division: quotient rounds toward zero, remainder has the
    // dividend's sign, |rem| < |den|
    static void divmod(const Integer& num, const Integer& den, Integer& quot, Integer& rem) {
        if (den.mag_.empty()) throw std::domain_error("Integer: division by zero");
        std::vector<std::uint32_t> q, r;
        divmod_mag(num.mag_, den.mag_, q, r);
        quot.mag_ = std::move(q);
        rem.mag_ = std::move(r);
        quot.neg_ = (num.neg_ != den.neg_) && !quot.mag_.empty();
        rem.neg_ = num.neg_ && !rem.mag_.empty();
    }

    friend Integer operator/(const Integer& a, const Integer& b) {
        Integer q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        Integer q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend Integer abs(const Integer& a) {
        Integer r = a;
        r.neg_ = false;
        return r;
    }

    // gcd of magnitudes (always >= 0), binary algorithm
    friend Integer gcd(Integer a, Integer b) {
        a.neg_ = b.neg_ = false;
        if (a.mag_.empty()) return b;
        if (b.mag_.empty()) return a;
        std::size_t za = trailing_zero_bits(a.mag_), zb = trailing_zero_bits(b.mag_);
        std::size_t shift = std::min(za, zb);
        shr_bits(a.mag_, za);
        shr_bits(b.mag_, zb);
        for (;;) {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) break;
            if (c > 0) a.mag_.swap(b.mag_);
            b.mag_ = sub_mag(b.mag_, a.mag_);  // b > a, both odd -> even
            shr_bits(b.mag_, trailing_zero_bits(b.mag_));
        }
        shl_bits(a.mag_, shift);
        return a;
    }

    friend Integer pow(const Integer& base, unsigned long long e) {
        Integer r(1), b = base;
        while (e) {
            if (e & 1ULL) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    std::optional<long long> to_int64() const {
        if (mag_.size() > 2) return std::nullopt;
        unsigned long long m = 0;
        if (mag_.size() >= 1) m = mag_[0];
        if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
        if (!neg_ && m <= 0x7fffffffffffffffULL) return static_cast<long long>(m);
        if (neg_ && m <= 0x8000000000000000ULL) return -static_cast<long long>(m - 1) - 1;
        return std::nullopt;
    }

    double to_double() const {
        double v = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
        return neg_ ? -v : v;
    }

    std::size_t bit_length() const {
        if (mag_.empty()) return 0;
        std::uint32_t top = mag_.back();
        std::size_t b = (mag_.size() - 1) * 32;
        while (top) {
            ++b;
            top >>= 1;
        }
        return b;
    }

  private:
    bool neg_ = false;
    std::vector<std::uint32_t> mag_;

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto &lo = a.size() < b.size() ? a : b, &hi = a.size() < b.size() ? b : a;
        std::vector<std::uint32_t> r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    void mul_small_inplace(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        trim(mag_);
    }

    void add_small_inplace(std::uint32_t v) {
        std::uint64_t carry = v;
        for (auto& limb : mag_) {
            if (!carry) return;
            std::uint64_t cur = limb + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    // divides m by d in place, returns the remainder
    static std::uint32_t divmod_small(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    static std::size_t trailing_zero_bits(const std::vector<std::uint32_t>& m) {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) {
                std::size_t b = 0;
                std::uint32_t v = m[i];
                while (!(v & 1u)) {
                    ++b;
                    v >>= 1;
                }
                return i * 32 + b;
            }
        return 0;
    }

    static void shr_bits(std::vector<std::uint32_t>& m, std::size_t s) {
        if (s == 0 || m.empty()) return;
        std::size_t limbs = s / 32, bits = s % 32;
        if (limbs >= m.size()) {
            m.clear();
            return;
        }
        m.erase(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(limbs));
        if (bits) {
            for (std::size_t i = 0; i + 1 < m.size(); ++i)
                m[i] = (m[i] >> bits) | (m[i + 1] << (32 - bits));
            m.back() >>= bits;
        }
        trim(m);
    }

    static void shl_bits(std::vector<std::uint32_t>& m, std::size_t s) {
        if (s == 0 || m.empty()) return;
        std::size_t limbs = s / 32, bits = s % 32;
        if (bits) {
            m.push_back(0);
            for (std::size_t i = m.size(); i-- > 1;)
                m[i] = (m[i] << bits) | (m[i - 1] >> (32 - bits));
            m[0] <<= bits;
        }
        m.insert(m.begin(), limbs, 0);
        trim(m);
    }

    // Knuth algorithm D on magnitudes
    static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.clear();
        r.clear();
        if (cmp_mag(u, v) < 0) {
            r = u;
            return;
        }
        if (v.size() == 1) {
            q = u;
            std::uint32_t rem = divmod_small(q, v[0]);
            if (rem) r.push_back(rem);
            return;
        }
        const std::size_t n = v.size(), m = u.size() - n;
        std::size_t s = 0;
        for (std::uint32_t top = v.back(); !(top & 0x80000000u); top <<= 1) ++s;
        std::vector<std::uint32_t> vn = v;
        shl_bits(vn, s);
        std::vector<std::uint32_t> un = u;
        un.push_back(0);
        if (s) {
            for (std::size_t i = un.size(); i-- > 1;)
                un[i] = (un[i] << s) | (un[i - 1] >> (32 - s));
            un[0] <<= s;
        }
        q.assign(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            std::uint64_t qhat = num / vn[n - 1], rhat = num % vn[n - 1];
            while (qhat >= (1ULL << 32) ||
                   qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= (1ULL << 32)) break;
            }
            std::int64_t borrow = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i];
                std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                                 static_cast<std::int64_t>(p & 0xffffffffULL);
                un[i + j] = static_cast<std::uint32_t>(t);
                borrow = static_cast<std::int64_t>(p >> 32) - (t >> 32);
            }
            std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow;
            un[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
            if (t < 0) {
                --q[j];
                std::uint64_t carry = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t cur = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
                    un[i + j] = static_cast<std::uint32_t>(cur);
                    carry = cur >> 32;
                }
                un[j + n] += static_cast<std::uint32_t>(carry);
            }
        }
        trim(q);
        r.assign(un.begin(), un.begin() + static_cast<std::ptrdiff_t>(n));
        shr_bits(r, s);
    }
};

inline bool is_zero(const Integer& v) { return v.is_zero(); }

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(a / gcd(a, b) * b);
}

}  // namespace commpoly

#endif
