#include "orbiqc/zlaurent.hpp"

#include <stdexcept>

#include "term_format.hpp"

namespace orbiqc {

ZLaurent::ZLaurent(const Rational& c) {
    if (!c.is_zero()) terms_[0] = c;
}

ZLaurent ZLaurent::monomial(const Rational& c, long k) {
    ZLaurent r;
    if (!c.is_zero()) r.terms_[k] = c;
    return r;
}

bool ZLaurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational ZLaurent::coeff(long k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

ZLaurent ZLaurent::shifted(long k) const {
    ZLaurent r;
    for (const auto& [p, c] : terms_) r.terms_[p + k] = c;
    return r;
}

long ZLaurent::min_power() const {
    if (terms_.empty()) throw std::domain_error("ZLaurent::min_power: zero polynomial");
    return terms_.begin()->first;
}

long ZLaurent::max_power() const {
    if (terms_.empty()) throw std::domain_error("ZLaurent::max_power: zero polynomial");
    return terms_.rbegin()->first;
}

void ZLaurent::add_term(long k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ZLaurent ZLaurent::operator-() const {
    ZLaurent r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

ZLaurent& ZLaurent::operator+=(const ZLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

ZLaurent& ZLaurent::operator-=(const ZLaurent& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

ZLaurent& ZLaurent::operator*=(const ZLaurent& o) {
    ZLaurent r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add_term(ka + kb, ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

ZLaurent& ZLaurent::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string ZLaurent::to_string() const {
    // leading z-power first
    std::vector<std::pair<long, Rational>> ts(terms_.rbegin(), terms_.rend());
    return detail::format_sum(
        'z', ts, [](char var, long k, const Rational& c) {
            return detail::format_term(var, std::to_string(k), k == 0, k == 1, c);
        });
}

ZLaurent ZLaurent::parse(std::string_view s) {
    ZLaurent r;
    for (const auto& [sign, chunk] : detail::split_signed(s)) {
        auto [c, e] = detail::parse_term('z', chunk);
        long k = e.empty() ? 0 : Rational::parse(e).to_long();
        r.add_term(k, sign < 0 ? -c : c);
    }
    return r;
}

} // namespace orbiqc
