#include "orbiqc/sector_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbiqc {

Weights::Weights(std::vector<long> w) : w_(std::move(w)) {
    if (w_.empty()) throw std::invalid_argument("weights must be nonempty");
    for (long v : w_) {
        if (v < 1) throw std::invalid_argument("weights must be positive");
        lcm_ = std::lcm(lcm_, v);
        sum_ += v;
    }
}

std::vector<Sector> sector_set(const Weights& w) {
    std::set<Rational> fractions;
    for (long wi : w.values())
        for (long k = 0; k < wi; ++k) fractions.insert(Rational(k, wi));

    std::vector<Sector> out;
    out.reserve(fractions.size());
    for (const Rational& f : fractions) {
        Sector s;
        s.f = f;
        s.age = Rational(0);
        for (long wi : w.values()) {
            Rational wf = f * Rational(wi);
            if (wf.is_integer())
                s.subweights.push_back(wi);
            else
                s.age += (-wf).frac();
        }
        s.dim = static_cast<long>(s.subweights.size()) - 1;
        out.push_back(std::move(s));
    }
    return out;
}

SectorSet::SectorSet(Weights w) : w_(std::move(w)), sectors_(sector_set(w_)) {
    offsets_.reserve(sectors_.size());
    size_t pos = 0;
    for (size_t i = 0; i < sectors_.size(); ++i) {
        offsets_.push_back(pos);
        for (long p = 0; p <= sectors_[i].dim; ++p) {
            basis_.push_back(BasisElement{i, p, pos});
            ++pos;
        }
    }
    if (pos != static_cast<size_t>(w_.sum()))
        throw std::logic_error("SectorSet: basis count does not match weight sum");
}

bool SectorSet::contains_fraction(const Rational& f) const {
    return find(f).has_value();
}

std::optional<size_t> SectorSet::find(const Rational& f) const {
    auto it = std::lower_bound(sectors_.begin(), sectors_.end(), f,
                               [](const Sector& s, const Rational& v) { return s.f < v; });
    if (it != sectors_.end() && it->f == f)
        return static_cast<size_t>(it - sectors_.begin());
    return std::nullopt;
}

size_t SectorSet::index_of(const Rational& f) const {
    auto i = find(f);
    if (!i) throw std::invalid_argument("sector index " + f.to_string() + " not in F");
    return *i;
}

size_t SectorSet::involution(size_t i) const {
    if (i >= sectors_.size()) throw std::invalid_argument("involution: sector out of range");
    return index_of((-sectors_[i].f).frac());
}

size_t SectorSet::position(size_t sector, long p) const {
    const Sector& s = sectors_.at(sector);
    if (p < 0 || p > s.dim) throw std::invalid_argument("position: P-power out of range");
    return offsets_[sector] + static_cast<size_t>(p);
}

Rational orbifold_degree(const SectorSet& s, const BasisElement& e) {
    return Rational(2 * e.p) + Rational(2) * s[e.sector].age;
}

Rational pairing(const SectorSet& s, const BasisElement& a, const BasisElement& b) {
    if (s.involution(a.sector) != b.sector) return Rational(0);
    const Sector& sa = s[a.sector];
    if (a.p + b.p != sa.dim) return Rational(0);
    Rational prod(1);
    for (long u : sa.subweights) prod *= Rational(u);
    return prod.inverse();
}

bool is_sector_fraction(const Weights& w, const Rational& f) {
    Rational frac = f.frac();
    for (long wi : w.values())
        if ((frac * Rational(wi)).is_integer()) return true;
    return false;
}

Rational virtual_dim(const Weights& w, long genus, long n_marks, const Rational& d,
                     const std::vector<Rational>& sector_ages) {
    if (genus < 0 || n_marks < 0) throw std::invalid_argument("virtual_dim: negative input");
    if (d.is_negative()) throw std::invalid_argument("virtual_dim: negative degree");
    if (n_marks == 1 && !is_sector_fraction(w, d))
        throw std::invalid_argument(
            "virtual_dim: one-pointed moduli are empty unless the degree's fractional part "
            "indexes a sector");
    // -K(d) = N d for the anticanonical degree of weighted projective space.
    Rational dim = Rational(2 * n_marks) + Rational(2 - 2 * genus) * Rational(w.n() - 3) +
                   Rational(2) * Rational(w.sum()) * d;
    for (const Rational& a : sector_ages) dim -= Rational(2) * a;
    return dim;
}

long graph_space_dim(const Weights& w, const Rational& d) {
    if (!(d > Rational(0))) throw std::invalid_argument("graph_space_dim: degree must be positive");
    if (!is_sector_fraction(w, d))
        throw std::invalid_argument("graph_space_dim: fractional part of degree not in F");
    long total = w.n();
    for (long wi : w.values()) total += (d * Rational(wi)).floor().to_long();
    return total;
}

OrbClass OrbClass::basis_monomial(const SectorSet& s, size_t sector, long p,
                                  const NovikovScalar& c) {
    OrbClass r;
    if (!c.is_zero())
        r.components_.emplace(sector,
                              SectorPoly<NovikovScalar>::monomial(s[sector].dim, p, c));
    return r;
}

SectorPoly<NovikovScalar> OrbClass::component(const SectorSet& s, size_t sector) const {
    auto it = components_.find(sector);
    if (it != components_.end()) return it->second;
    return SectorPoly<NovikovScalar>(s[sector].dim);
}

void OrbClass::add_component(size_t sector, const SectorPoly<NovikovScalar>& poly) {
    auto [it, inserted] = components_.emplace(sector, poly);
    if (!inserted) it->second += poly;
    prune();
}

void OrbClass::prune() {
    for (auto it = components_.begin(); it != components_.end();) {
        if (it->second.is_zero())
            it = components_.erase(it);
        else
            ++it;
    }
}

OrbClass OrbClass::operator-() const {
    OrbClass r;
    for (const auto& [i, p] : components_) r.components_.emplace(i, -p);
    return r;
}

OrbClass& OrbClass::operator+=(const OrbClass& o) {
    for (const auto& [i, p] : o.components_) {
        auto [it, inserted] = components_.emplace(i, p);
        if (!inserted) it->second += p;
    }
    prune();
    return *this;
}

OrbClass& OrbClass::operator-=(const OrbClass& o) {
    return *this += -o;
}

OrbClass& OrbClass::operator*=(const NovikovScalar& c) {
    for (auto& [i, p] : components_) p *= c;
    prune();
    return *this;
}

OrbClass& OrbClass::operator*=(const Rational& c) {
    return *this *= NovikovScalar(c);
}

bool OrbClass::effective() const {
    for (const auto& [i, poly] : components_)
        for (long p = 0; p <= poly.cap(); ++p)
            if (poly.coeff(p).has_negative_exponent()) return false;
    return true;
}

} // namespace orbiqc
