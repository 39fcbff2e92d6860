/**
 * @file rational.hpp
 * @brief Exact rational scalar used throughout orbiqc.
 *
 * Thin value wrapper around GMP's mpq_class. Always canonical: lowest
 * terms, denominator > 0, zero stored as 0/1. No floating point anywhere.
 */
#ifndef ORBIQC_RATIONAL_HPP
#define ORBIQC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbiqc {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z) : q_(z) {}

    /// Parses the canonical text form "p/q" (or "p" when q = 1).
    static Rational parse(std::string_view s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Largest integer <= *this.
    Rational floor() const;
    /// Smallest integer >= *this.
    Rational ceil() const;
    /// Fractional part <x> = x - floor(x), always in [0,1).
    Rational frac() const;

    /// Exact integer value; throws std::domain_error unless integral and
    /// within the range of long.
    long to_long() const;

    /// this^e with integer exponent; negative e inverts (throws on 0^-e).
    Rational pow(long e) const;

    Rational abs() const;
    Rational inverse() const;

    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

/// n! as an exact integer-valued rational; n must be >= 0.
Rational factorial(long n);

} // namespace orbiqc

#endif
