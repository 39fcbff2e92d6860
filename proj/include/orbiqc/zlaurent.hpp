/**
 * @file zlaurent.hpp
 * @brief Finite Laurent polynomials in the formal variable z.
 *
 * Every expression in scope is exactly finite in z because the hyperplane
 * class is nilpotent in each sector ring, so no truncation parameter exists
 * here: a ZLaurent is a genuine finite sum of c * z^k with k possibly
 * negative.
 */
#ifndef ORBIQC_ZLAURENT_HPP
#define ORBIQC_ZLAURENT_HPP

#include <map>
#include <string>
#include <string_view>

#include "orbiqc/rational.hpp"

namespace orbiqc {

class ZLaurent {
public:
    ZLaurent() = default;
    ZLaurent(const Rational& c);       // constant
    ZLaurent(long c) : ZLaurent(Rational(c)) {}

    /// c * z^k
    static ZLaurent monomial(const Rational& c, long k);

    static ZLaurent parse(std::string_view s);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Coefficient of z^k (zero when absent).
    Rational coeff(long k) const;

    /// Multiply by z^k.
    ZLaurent shifted(long k) const;

    long min_power() const;  // throws on zero
    long max_power() const;

    const std::map<long, Rational>& terms() const { return terms_; }

    ZLaurent operator-() const;
    ZLaurent& operator+=(const ZLaurent& o);
    ZLaurent& operator-=(const ZLaurent& o);
    ZLaurent& operator*=(const ZLaurent& o);
    ZLaurent& operator*=(const Rational& c);

    friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
    friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }
    friend ZLaurent operator*(ZLaurent a, const ZLaurent& b) { return a *= b; }
    friend ZLaurent operator*(ZLaurent a, const Rational& c) { return a *= c; }
    friend ZLaurent operator*(const Rational& c, ZLaurent a) { return a *= c; }

    friend bool operator==(const ZLaurent& a, const ZLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ZLaurent& a, const ZLaurent& b) { return !(a == b); }

    std::string to_string() const;

private:
    void add_term(long k, const Rational& c);

    // z-power -> nonzero coefficient
    std::map<long, Rational> terms_;
};

} // namespace orbiqc

#endif
