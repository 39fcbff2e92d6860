#include "orbiqc/j_function.hpp"

#include <stdexcept>

namespace orbiqc {

namespace {

/// Converts an exact z-coefficient slice into a class with constant Novikov
/// coefficients scaled by Q^e.
OrbClass promote_slice(const SectorSet& s, size_t sector, const SectorPoly<Rational>& slice,
                       const Rational& q_exp) {
    OrbClass out;
    if (slice.is_zero()) return out;
    if (q_exp.is_negative())
        throw std::logic_error("j_function: nonzero contribution with negative Novikov exponent");
    SectorPoly<NovikovScalar> poly(slice.cap());
    for (long p = 0; p <= slice.cap(); ++p)
        poly.set_coeff(p, NovikovScalar::monomial(slice.coeff(p), q_exp));
    out.add_component(sector, poly);
    return out;
}

SectorPoly<Rational> z_slice(const SectorPoly<ZLaurent>& poly, long z_power) {
    return poly.map_coeffs([z_power](const ZLaurent& c) { return c.coeff(z_power); });
}

} // namespace

std::vector<DenominatorFactor> denominator_factors(const Weights& w, const Rational& d) {
    if (d.is_negative()) throw std::invalid_argument("denominator_factors: negative degree");
    if (!is_sector_fraction(w, d))
        throw std::invalid_argument("denominator_factors: fractional part of " + d.to_string() +
                                    " not in F");
    std::vector<DenominatorFactor> out;
    for (long wi : w.values()) {
        // all b with <b> = <d w_i>, 0 < b <= d w_i, ascending
        Rational dwi = d * Rational(wi);
        Rational start = dwi.frac().is_zero() ? Rational(1) : dwi.frac();
        for (Rational b = start; b <= dwi; b += Rational(1)) out.push_back({wi, b});
    }
    return out;
}

std::vector<Rational> admissible_degrees(const SectorSet& s, const Rational& cap) {
    std::vector<Rational> out;
    for (Rational k(0); k <= cap; k += Rational(1))
        for (const Sector& sec : s.sectors()) {
            Rational d = k + sec.f;
            if (d <= cap) out.push_back(d);
        }
    return out;
}

JSeries j_series(const SectorSet& s, const Rational& degree_cap) {
    if (degree_cap.is_negative()) throw std::invalid_argument("j_series: negative degree cap");
    JSeries series;
    series.degree_cap = degree_cap;
    for (const Rational& d : admissible_degrees(s, degree_cap)) {
        size_t sector = s.index_of(d.frac());
        long cap = s[sector].dim;
        SectorPoly<ZLaurent> term = SectorPoly<ZLaurent>::one(cap);
        for (const DenominatorFactor& f : denominator_factors(s.weights(), d))
            term *= expand_reciprocal_factor(f.weight, f.b, cap);
        // the overall prefactor z of the J-function
        term = term.map_coeffs([](const ZLaurent& c) { return c.shifted(1); });
        series.terms.emplace(d, SeriesTerm{sector, std::move(term)});
    }
    return series;
}

PFReport pf_check(const SectorSet& s, const JSeries& series) {
    PFReport report;
    report.pass = true;
    for (const auto& [d, term] : series.terms) {
        long cap = s[term.sector].dim;
        // prod_i prod_{k=0}^{w_i - 1} (w_i P + (d w_i - k) z) acting on T_d
        SectorPoly<ZLaurent> lhs = term.poly;
        for (long wi : s.weights().values())
            for (long k = 0; k < wi; ++k)
                lhs *= linear_factor(cap, Rational(wi), d * Rational(wi) - Rational(k));
        SectorPoly<ZLaurent> rhs(cap);
        if (d >= Rational(1)) rhs = series.terms.at(d - Rational(1)).poly;
        bool ok = (lhs == rhs);
        report.entries.push_back({d, ok});
        report.pass = report.pass && ok;
    }
    return report;
}

DjSeries apply_Dj(const SectorSet& s, size_t j, const JSeries& series) {
    CSequence cs{s};
    if (j < 1 || j > cs.size()) throw std::invalid_argument("apply_Dj: index out of range");
    DjSeries out;
    out.j = j;
    out.q_shift = cs.value(j);
    for (const auto& [d, term] : series.terms) {
        long cap = s[term.sector].dim;
        SectorPoly<ZLaurent> acted = term.poly;
        for (size_t m = 1; m < j; ++m)
            acted *= linear_factor(cap, Rational(1), d - cs.value(m));
        out.terms.emplace(d, SeriesTerm{term.sector, std::move(acted)});
    }
    return out;
}

OrbClass extract_v(const SectorSet& s, size_t j, const JSeries& series) {
    CSequence cs{s};
    if (j < 1 || j > cs.size()) throw std::invalid_argument("extract_v: index out of range");
    if (!series.covers(cs.value(j)))
        throw std::invalid_argument("extract_v: series does not cover degree c_j");
    DjSeries dj = apply_Dj(s, j, series);
    OrbClass v;
    for (const auto& [d, term] : dj.terms) {
        SectorPoly<Rational> slice = z_slice(term.poly, 1);
        if (d == cs.value(j)) {
            v = promote_slice(s, term.sector, slice, Rational(0));
        } else if (!slice.is_zero()) {
            throw std::logic_error("extract_v: degree " + d.to_string() +
                                   " contributes to v_" + std::to_string(j));
        }
    }
    return v;
}

OrbClass p_quantum_v(const SectorSet& s, size_t j, const JSeries& series) {
    CSequence cs{s};
    if (j < 1 || j > cs.size()) throw std::invalid_argument("p_quantum_v: index out of range");
    if (!series.covers(Rational(1)))
        throw std::invalid_argument("p_quantum_v: series must cover degree 1");
    OrbClass out;
    for (const auto& [d, term] : series.terms) {
        long cap = s[term.sector].dim;
        // d/dt acts on the degree-d part of D_j J as z^{-1} (P + (d - c_j) z)
        SectorPoly<ZLaurent> acted = term.poly;
        for (size_t m = 1; m < j; ++m)
            acted *= linear_factor(cap, Rational(1), d - cs.value(m));
        acted *= linear_factor(cap, Rational(1), d - cs.value(j));
        SectorPoly<Rational> slice = z_slice(acted, 1);
        out += promote_slice(s, term.sector, slice, d - cs.value(j));
    }
    return out;
}

QuantumMatrix matrix_from_j(const SectorSet& s, const JSeries& series) {
    if (!series.covers(Rational(1)))
        throw std::invalid_argument("matrix_from_j: series must cover degree 1");
    CSequence cs{s};
    const size_t n = s.rank();

    // sigma_j as read off the series: the single surviving coefficient of
    // the extracted v_j = sigma_j P^{r_j} 1_{c_j}.
    std::vector<Rational> sigma_hat(n);
    for (size_t j = 1; j <= n; ++j) {
        OrbClass v = extract_v(s, j, series);
        size_t sector = cs.sector(j);
        long r = cs.repeat(j);
        SectorPoly<NovikovScalar> comp = v.component(s, sector);
        Rational coeff = comp.coeff(r).at_q_zero();
        if (coeff.is_zero())
            throw std::logic_error("matrix_from_j: extracted v has zero leading coefficient");
        // everything else must vanish
        OrbClass expected = OrbClass::basis_monomial(s, sector, r, NovikovScalar(coeff));
        if (v != expected)
            throw std::logic_error("matrix_from_j: extracted v_" + std::to_string(j) +
                                   " is not a basis monomial");
        sigma_hat[j - 1] = coeff;
    }

    QuantumMatrix m = QuantumMatrix::zero(n);
    for (size_t j = 1; j <= n; ++j) {
        OrbClass pv = p_quantum_v(s, j, series);
        // column j-1 of P-multiplication in the sector basis
        for (const auto& [sector, poly] : pv.components()) {
            for (long p = 0; p <= poly.cap(); ++p) {
                if (poly.coeff(p).is_zero()) continue;
                size_t row = s.position(sector, p);
                m.entries[row][j - 1] = poly.coeff(p) * sigma_hat[j - 1].inverse();
            }
        }
    }

    if (m != p_matrix(s))
        throw std::logic_error("matrix_from_j: series-derived matrix differs from closed form");
    return m;
}

} // namespace orbiqc
