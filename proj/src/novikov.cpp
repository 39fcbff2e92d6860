#include "orbiqc/novikov.hpp"

#include <numeric>
#include <stdexcept>

#include "term_format.hpp"

namespace orbiqc {

NovikovScalar::NovikovScalar(const Rational& c) {
    if (!c.is_zero()) terms_[0] = c;
}

std::int64_t NovikovScalar::scaled_key(const Rational& e, std::int64_t lattice) {
    Rational k = e * Rational(lattice);
    return k.to_long();
}

NovikovScalar NovikovScalar::monomial(const Rational& c, const Rational& e, bool allow_negative) {
    NovikovScalar r;
    r.allow_negative_ = allow_negative;
    if (e.is_negative() && !allow_negative)
        throw std::domain_error("NovikovScalar: negative exponent " + e.to_string() +
                                " outside negatives-allowed mode");
    if (!c.is_zero()) {
        if (!e.num().fits_slong_p() || !e.den().fits_slong_p())
            throw std::domain_error("NovikovScalar: exponent out of range: " + e.to_string());
        r.lattice_ = e.den().get_si();
        r.terms_[e.num().get_si()] = c;
    }
    return r;
}

NovikovScalar NovikovScalar::q_power(const Rational& e, bool allow_negative) {
    return monomial(Rational(1), e, allow_negative);
}

NovikovScalar NovikovScalar::with_negatives_allowed() const {
    NovikovScalar r = *this;
    r.allow_negative_ = true;
    return r;
}

bool NovikovScalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool NovikovScalar::has_negative_exponent() const {
    return !terms_.empty() && terms_.begin()->first < 0;
}

Rational NovikovScalar::coeff(const Rational& e) const {
    Rational k = e * Rational(lattice_);
    if (!k.is_integer()) return Rational(0);
    auto it = terms_.find(k.to_long());
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Rational, Rational>> NovikovScalar::terms() const {
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.emplace_back(Rational(k, lattice_), c);
    return out;
}

Rational NovikovScalar::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("NovikovScalar::min_exponent: zero value");
    return Rational(terms_.begin()->first, lattice_);
}

NovikovScalar NovikovScalar::truncated(const Rational& cap) const {
    NovikovScalar r;
    r.allow_negative_ = allow_negative_;
    r.lattice_ = lattice_;
    Rational bound = cap * Rational(lattice_);
    for (const auto& [k, c] : terms_)
        if (Rational(k) <= bound) r.terms_[k] = c;
    r.canonicalize();
    return r;
}

NovikovScalar NovikovScalar::inverse_truncated(const Rational& cap) const {
    Rational c0 = constant_term();
    if (c0.is_zero())
        throw std::domain_error("NovikovScalar::inverse_truncated: zero constant term");
    if (has_negative_exponent())
        throw std::domain_error("NovikovScalar::inverse_truncated: negative exponents");
    // X = c0 (1 - T) with ord(T) > 0, so X^-1 = c0^-1 sum T^k; the sum is
    // finite after truncation because ord(T^k) grows.
    NovikovScalar t = (NovikovScalar(c0) - *this) * c0.inverse();
    NovikovScalar acc(c0.inverse());
    NovikovScalar pw(c0.inverse());
    while (!t.is_zero()) {
        pw = (pw * t).truncated(cap);
        if (pw.is_zero()) break;
        acc += pw;
    }
    return acc.truncated(cap);
}

void NovikovScalar::add_scaled(std::int64_t key, const Rational& c) {
    if (c.is_zero()) return;
    if (key < 0 && !allow_negative_)
        throw std::domain_error("NovikovScalar: negative exponent outside negatives-allowed mode");
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NovikovScalar::canonicalize() {
    if (terms_.empty()) {
        lattice_ = 1;
        return;
    }
    std::int64_t g = lattice_;
    for (const auto& [k, c] : terms_) {
        g = std::gcd(g, k < 0 ? -k : k);
        if (g == 1) return;
    }
    if (g <= 1) return;
    std::map<std::int64_t, Rational> t;
    for (const auto& [k, c] : terms_) t.emplace(k / g, c);
    terms_ = std::move(t);
    lattice_ /= g;
}

void NovikovScalar::rescale_to(std::int64_t new_lattice) {
    if (new_lattice == lattice_) return;
    if (new_lattice % lattice_ != 0)
        throw std::logic_error("NovikovScalar::rescale_to: incompatible lattice");
    std::int64_t m = new_lattice / lattice_;
    std::map<std::int64_t, Rational> t;
    for (const auto& [k, c] : terms_) t.emplace(k * m, c);
    terms_ = std::move(t);
    lattice_ = new_lattice;
}

NovikovScalar NovikovScalar::operator-() const {
    NovikovScalar r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& o) {
    allow_negative_ = allow_negative_ || o.allow_negative_;
    std::int64_t common = std::lcm(lattice_, o.lattice_);
    rescale_to(common);
    std::int64_t m = common / o.lattice_;
    for (const auto& [k, c] : o.terms_) add_scaled(k * m, c);
    canonicalize();
    return *this;
}

NovikovScalar& NovikovScalar::operator-=(const NovikovScalar& o) {
    return *this += -o;
}

NovikovScalar& NovikovScalar::operator*=(const NovikovScalar& o) {
    bool neg = allow_negative_ || o.allow_negative_;
    std::int64_t common = std::lcm(lattice_, o.lattice_);
    std::int64_t ma = common / lattice_;
    std::int64_t mb = common / o.lattice_;
    NovikovScalar r;
    r.allow_negative_ = neg;
    r.lattice_ = common;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add_scaled(ka * ma + kb * mb, ca * cb);
    r.canonicalize();
    return *this = r;
}

NovikovScalar& NovikovScalar::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        lattice_ = 1;
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string NovikovScalar::to_string() const {
    std::vector<std::pair<Rational, Rational>> ts = terms();
    return detail::format_sum(
        'Q', ts, [](char var, const Rational& e, const Rational& c) {
            return detail::format_term(var, e.to_string(), e.is_zero(), e.is_one(), c);
        });
}

NovikovScalar NovikovScalar::parse(std::string_view s, bool allow_negative) {
    NovikovScalar r;
    r.allow_negative_ = allow_negative;
    for (const auto& [sign, chunk] : detail::split_signed(s)) {
        auto [c, e] = detail::parse_term('Q', chunk);
        Rational exp = e.empty() ? Rational(0) : Rational::parse(e);
        r += NovikovScalar::monomial(sign < 0 ? -c : c, exp, allow_negative);
    }
    return r;
}

} // namespace orbiqc
