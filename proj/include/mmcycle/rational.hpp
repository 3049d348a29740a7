#pragma once

#include <algorithm>
#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "mmcycle/errors.hpp"

namespace mmc {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 x) { return x < 0 ? -x : x; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow64(int128 x, const char* where) {
    if (x > int128(INT64_MAX) || x < int128(INT64_MIN))
        throw overflow_error(std::string("64-bit overflow in ") + where);
    return static_cast<std::int64_t>(x);
}

} // namespace detail

/// Exact fraction with a 64-bit numerator and positive 64-bit denominator,
/// always reduced. Intermediate products are taken in 128 bits; a result
/// that does not fit back into 64 bits raises overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        *this = make(num, den);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using detail::int128;
        int128 n = int128(a.num_) * b.den_ + int128(b.num_) * a.den_;
        int128 d = int128(a.den_) * b.den_;
        return make128(n, d);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        using detail::int128;
        int128 n = int128(a.num_) * b.den_ - int128(b.num_) * a.den_;
        int128 d = int128(a.den_) * b.den_;
        return make128(n, d);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        using detail::int128;
        return make128(detail::int128(a.num_) * b.num_, int128(a.den_) * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        using detail::int128;
        return make128(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = detail::narrow64(-detail::int128(num_), "negation");
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        using detail::int128;
        int128 lhs = int128(a.num_) * b.den_;
        int128 rhs = int128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Decimal rendering with `places` digits, rounded half away from zero.
    std::string decimal(int places = 6) const {
        using detail::int128;
        int128 scale = 1;
        for (int i = 0; i < places; ++i) scale *= 10;
        int128 scaled2 = int128(num_) * scale * 2;
        int128 q = scaled2 / den_;
        // round half away from zero
        int128 r = (q >= 0 ? q + 1 : q - 1) / 2;
        if (scaled2 % den_ == 0) r = q / 2;
        bool neg = r < 0;
        int128 mag = neg ? -r : r;
        int128 whole = mag / scale;
        int128 frac = mag % scale;
        std::string fs;
        for (int i = 0; i < places; ++i) {
            fs.push_back(char('0' + int(frac % 10)));
            frac /= 10;
        }
        std::string ws;
        if (whole == 0) ws = "0";
        while (whole > 0) {
            ws.push_back(char('0' + int(whole % 10)));
            whole /= 10;
        }
        std::reverse(ws.begin(), ws.end());
        std::reverse(fs.begin(), fs.end());
        return (neg ? "-" : "") + ws + "." + fs;
    }

private:
    static Rational make(std::int64_t num, std::int64_t den) {
        return make128(detail::int128(num), detail::int128(den));
    }

    static Rational make128(detail::int128 num, detail::int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        detail::int128 g = detail::gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
        Rational r;
        r.num_ = detail::narrow64(num, "Rational numerator");
        r.den_ = detail::narrow64(den, "Rational denominator");
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace mmc
