#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

#include "qappell/errors.hpp"

namespace qappell {

// Arbitrary-precision rational, always canonical: gcd(|num|,den) = 1,
// den > 0, zero stored as 0/1. Serializes as "p/q" or "p".
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {} // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts an optional leading '-', digits, optionally "/digits" with a
    // positive denominator. No whitespace, no decimals.
    static Rational parse(std::string_view s) {
        if (!looks_like_rational(s))
            throw ParseError("not a rational literal: \"" + std::string(s) + "\"");
        mpq_class v;
        if (v.set_str(std::string(s), 10) != 0)
            throw ParseError("not a rational literal: \"" + std::string(s) + "\"");
        if (v.get_den() == 0) throw ParseError("rational with zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw Error("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw Error("zero raised to a negative power");
            return Rational(0);
        }
        unsigned long ae = e < 0 ? 0UL - static_cast<unsigned long>(e)
                                 : static_cast<unsigned long>(e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
        if (e < 0) std::swap(num, den);
        mpq_class r(num);
        r /= mpq_class(den);
        return Rational(std::move(r));
    }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_.get_str();
    }

private:
    static bool looks_like_rational(std::string_view s) {
        std::size_t i = 0;
        if (i < s.size() && s[i] == '-') ++i;
        std::size_t d0 = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == d0) return false;
        if (i == s.size()) return true;
        if (s[i] != '/') return false;
        ++i;
        std::size_t d1 = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        return i == s.size() && i > d1;
    }

    mpq_class v_;
};

// n(n-1)/2, valid for any integer n; satisfies
// binom2(n+k) = binom2(n) + binom2(k) + n*k.
inline long long binom2(long long n) { return n * (n - 1) / 2; }

} // namespace qappell
