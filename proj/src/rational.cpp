#include "orbiqc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace orbiqc {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::domain_error("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw std::domain_error("Rational::parse: bad literal '" + std::string(s) + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(r);
}

Rational Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return Rational(r);
}

Rational Rational::frac() const {
    return *this - floor();
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("Rational::to_long: not an integer: " + to_string());
    if (!q_.get_num().fits_slong_p())
        throw std::domain_error("Rational::to_long: out of range: " + to_string());
    return q_.get_num().get_si();
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), k);
    Rational r{mpq_class(num, den)};
    return invert ? r.inverse() : r;
}

Rational Rational::abs() const {
    return is_negative() ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational::inverse: division by zero");
    return Rational(mpq_class(q_.get_den(), q_.get_num()));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

} // namespace orbiqc
