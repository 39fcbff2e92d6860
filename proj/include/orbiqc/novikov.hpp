/**
 * @file novikov.hpp
 * @brief Elements of the Novikov ring: finite exact sums of c * Q^e.
 *
 * Exponents live on the lattice (1/L)*Z for an explicit positive integer L
 * and are stored as integers after scaling by L; the lattice is kept minimal
 * under canonicalization, so equality is structural. Exponents are
 * nonnegative unless the value was created in negatives-allowed mode
 * (inverted-Q intermediates); the mode propagates through arithmetic.
 */
#ifndef ORBIQC_NOVIKOV_HPP
#define ORBIQC_NOVIKOV_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "orbiqc/rational.hpp"

namespace orbiqc {

class NovikovScalar {
public:
    NovikovScalar() = default;
    NovikovScalar(const Rational& c);  // constant c * Q^0
    NovikovScalar(long c) : NovikovScalar(Rational(c)) {}

    /// c * Q^e
    static NovikovScalar monomial(const Rational& c, const Rational& e,
                                  bool allow_negative = false);
    /// Q^e
    static NovikovScalar q_power(const Rational& e, bool allow_negative = false);

    static NovikovScalar parse(std::string_view s, bool allow_negative = false);

    /// Same value with negative exponents permitted in later arithmetic.
    NovikovScalar with_negatives_allowed() const;
    bool negatives_allowed() const { return allow_negative_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool has_negative_exponent() const;

    /// Coefficient of Q^e (zero when absent).
    Rational coeff(const Rational& e) const;
    Rational constant_term() const { return coeff(Rational(0)); }

    /// The Q -> 0 specialization (keeps only the exponent-0 term).
    Rational at_q_zero() const { return constant_term(); }

    std::int64_t lattice() const { return lattice_; }
    size_t term_count() const { return terms_.size(); }

    /// Exponent/coefficient pairs in increasing exponent order.
    std::vector<std::pair<Rational, Rational>> terms() const;

    Rational min_exponent() const;  // throws on zero

    /// Drops terms with exponent > cap (used for mirror-map series work).
    NovikovScalar truncated(const Rational& cap) const;

    /// Multiplicative inverse modulo Q^{> cap}; requires a nonzero
    /// constant term and no negative exponents.
    NovikovScalar inverse_truncated(const Rational& cap) const;

    NovikovScalar operator-() const;
    NovikovScalar& operator+=(const NovikovScalar& o);
    NovikovScalar& operator-=(const NovikovScalar& o);
    NovikovScalar& operator*=(const NovikovScalar& o);
    NovikovScalar& operator*=(const Rational& c);

    friend NovikovScalar operator+(NovikovScalar a, const NovikovScalar& b) { return a += b; }
    friend NovikovScalar operator-(NovikovScalar a, const NovikovScalar& b) { return a -= b; }
    friend NovikovScalar operator*(NovikovScalar a, const NovikovScalar& b) { return a *= b; }
    friend NovikovScalar operator*(NovikovScalar a, const Rational& c) { return a *= c; }
    friend NovikovScalar operator*(const Rational& c, NovikovScalar a) { return a *= c; }

    /// Structural equality of terms; the negatives-allowed mode is a
    /// capability, not part of the value.
    friend bool operator==(const NovikovScalar& a, const NovikovScalar& b) {
        return a.lattice_ == b.lattice_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NovikovScalar& a, const NovikovScalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void add_scaled(std::int64_t key, const Rational& c);
    void canonicalize();
    void rescale_to(std::int64_t new_lattice);
    static std::int64_t scaled_key(const Rational& e, std::int64_t lattice);

    std::int64_t lattice_ = 1;                 // exponents are key / lattice_
    std::map<std::int64_t, Rational> terms_;   // scaled exponent -> nonzero coeff
    bool allow_negative_ = false;
};

} // namespace orbiqc

#endif
