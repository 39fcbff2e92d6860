#include "orbiqc/complete_intersection.hpp"

#include <numeric>
#include <stdexcept>

namespace orbiqc {

namespace {

long count_integral(const std::vector<long>& values, const Rational& f) {
    long c = 0;
    for (long v : values)
        if ((f * Rational(v)).is_integer()) ++c;
    return c;
}

Rational frac_sum(const std::vector<long>& values, const Rational& f) {
    Rational s(0);
    for (long v : values) s += (f * Rational(v)).frac();
    return s;
}

Rational ceil_sum(const std::vector<long>& values, const Rational& f) {
    Rational s(0);
    for (long v : values) s += (f * Rational(v)).ceil();
    return s;
}

} // namespace

CIData::CIData(Weights w, std::vector<long> d, bool quasismooth)
    : weights(std::move(w)), degrees(std::move(d)), quasismooth_assumed(quasismooth) {
    if (degrees.empty()) throw std::invalid_argument("complete intersection needs a degree");
    for (long dj : degrees)
        if (dj < 1) throw std::invalid_argument("degrees must be positive");
}

long CIData::k_x() const {
    long k = -weights.sum();
    for (long dj : degrees) k += dj;
    return k;
}

KInvariants k_invariants(const CIData& ci) {
    SectorSet s{ci.weights};
    KInvariants out;
    out.k_x = ci.k_x();
    for (const Sector& sec : s.sectors()) {
        Rational form1 = ceil_sum(ci.degrees, sec.f) - ceil_sum(ci.weights.values(), sec.f);
        Rational form2 = Rational(out.k_x) * sec.f;
        for (long dj : ci.degrees) form2 += (-(sec.f * Rational(dj))).frac();
        for (long wi : ci.weights.values()) form2 -= (-(sec.f * Rational(wi))).frac();
        if (form1 != form2)
            throw std::logic_error("k_invariants: the two forms of k_f disagree at f = " +
                                   sec.f.to_string());
        out.k_f.emplace(sec.f, form1);
    }
    return out;
}

SeriesHypothesisReport series_hypothesis(const CIData& ci) {
    KInvariants ks = k_invariants(ci);
    SectorSet s{ci.weights};
    SeriesHypothesisReport report;
    report.verdict = true;
    for (const Sector& sec : s.sectors()) {
        if (sec.f.is_zero()) continue;
        SeriesHypothesisReport::Entry e;
        e.f = sec.f;
        e.k_f = ks.k_f.at(sec.f);
        e.k_clause = e.k_f < Rational(-1);
        e.count_clause =
            count_integral(ci.degrees, sec.f) >= count_integral(ci.weights.values(), sec.f);
        report.entries.push_back(e);
        report.verdict = report.verdict && (e.k_clause || e.count_clause);
    }
    return report;
}

JSeries i_series(const CIData& ci, const Rational& degree_cap) {
    if (degree_cap.is_negative()) throw std::invalid_argument("i_series: negative degree cap");
    SectorSet s{ci.weights};
    JSeries series;
    series.degree_cap = degree_cap;
    for (const Rational& d : admissible_degrees(s, degree_cap)) {
        size_t sector = s.index_of(d.frac());
        long cap = s[sector].dim;
        SectorPoly<ZLaurent> term = SectorPoly<ZLaurent>::one(cap);
        // numerator: all b with <b> = <d d_j>, 0 <= b <= d d_j
        for (long dj : ci.degrees) {
            Rational ddj = d * Rational(dj);
            Rational start = ddj.frac().is_zero() ? Rational(0) : ddj.frac();
            for (Rational b = start; b <= ddj; b += Rational(1))
                term *= linear_factor(cap, Rational(dj), b);
        }
        for (const DenominatorFactor& f : denominator_factors(ci.weights, d))
            term *= expand_reciprocal_factor(f.weight, f.b, cap);
        term = term.map_coeffs([](const ZLaurent& c) { return c.shifted(1); });
        series.terms.emplace(d, SeriesTerm{sector, std::move(term)});
    }
    return series;
}

MirrorData mirror_data(const CIData& ci, const JSeries& series) {
    if (ci.k_x() > 0)
        throw std::invalid_argument("mirror_data: requires k_X <= 0");
    if (!series_hypothesis(ci).verdict)
        throw std::invalid_argument("mirror_data: series hypothesis fails for these data");

    SectorSet s{ci.weights};
    const long n = ci.weights.n();
    const long m1 = static_cast<long>(ci.degrees.size());  // m + 1 defining equations
    if (m1 > n)
        throw std::invalid_argument(
            "mirror_data: truncation cap makes division by the pushforward class ambiguous");

    MirrorData out;
    long kx = ci.k_x();
    out.kind = kx < -1 ? MirrorData::Case::k_below_minus_one
                       : (kx == -1 ? MirrorData::Case::k_minus_one : MirrorData::Case::k_zero);

    Rational deg_prod(1);
    for (long dj : ci.degrees) deg_prod *= Rational(dj);

    // Assemble the z^1 and z^0 coefficients of the series per sector as
    // Novikov-coefficient P-polynomials.
    std::map<size_t, SectorPoly<NovikovScalar>> z1, z0;
    for (size_t i = 0; i < s.size(); ++i) {
        z1.emplace(i, SectorPoly<NovikovScalar>(s[i].dim));
        z0.emplace(i, SectorPoly<NovikovScalar>(s[i].dim));
    }
    for (const auto& [d, term] : series.terms) {
        for (long p = 0; p <= term.poly.cap(); ++p) {
            Rational c1 = term.poly.coeff(p).coeff(1);
            Rational c0 = term.poly.coeff(p).coeff(0);
            if (!c1.is_zero()) {
                auto& poly = z1.at(term.sector);
                poly.set_coeff(p, poly.coeff(p) + NovikovScalar::monomial(c1, d));
            }
            if (!c0.is_zero()) {
                auto& poly = z0.at(term.sector);
                poly.set_coeff(p, poly.coeff(p) + NovikovScalar::monomial(c0, d));
            }
        }
    }

    // Twisted-sector z^1/z^0 coefficients must vanish in every case: the
    // displayed shapes are pushforwards of ambient degree <= 2 classes.
    for (size_t i = 1; i < s.size(); ++i) {
        if (!z1.at(i).is_zero())
            out.shape_failures.push_back("nonzero z^1 coefficient on sector " + s[i].f.to_string());
        if (!z0.at(i).is_zero())
            out.shape_failures.push_back("nonzero z^0 coefficient on sector " + s[i].f.to_string());
    }

    // Exact division of the untwisted slices by iota_* 1 = deg_prod * P^(m+1).
    const auto& u1 = z1.at(0);
    const auto& u0 = z0.at(0);
    for (long p = 0; p < m1; ++p) {
        if (!u1.coeff(p).is_zero())
            out.shape_failures.push_back("z^1 coefficient not divisible by the pushforward class");
        if (!u0.coeff(p).is_zero())
            out.shape_failures.push_back("z^0 coefficient not divisible by the pushforward class");
    }

    out.F = u1.coeff(m1) * deg_prod.inverse();
    for (long p = m1 + 1; p <= n; ++p)
        if (!u1.coeff(p).is_zero())
            out.shape_failures.push_back("z^1 part has P-degree above the pushforward of F z");

    switch (out.kind) {
    case MirrorData::Case::k_below_minus_one:
        if (out.F != NovikovScalar(1))
            out.shape_failures.push_back("z-leading coefficient differs from 1");
        if (!u0.is_zero()) out.shape_failures.push_back("z^0 part nonzero at t = 0");
        break;
    case MirrorData::Case::k_minus_one: {
        if (out.F != NovikovScalar(1))
            out.shape_failures.push_back("z-leading coefficient differs from 1");
        out.s = u0.coeff(m1) * deg_prod.inverse();
        for (long p = m1 + 1; p <= n; ++p)
            if (!u0.coeff(p).is_zero())
                out.shape_failures.push_back("z^0 part not a multiple of the pushforward of 1");
        break;
    }
    case MirrorData::Case::k_zero: {
        if (out.F.constant_term() != Rational(1))
            out.shape_failures.push_back("F does not have constant term 1");
        if (m1 + 1 > n) {
            out.shape_failures.push_back(
                "truncation cap too small to extract g (needs P^(m+2) in the ambient ring)");
            break;
        }
        if (!u0.coeff(m1).is_zero())
            out.shape_failures.push_back("z^0 part not a multiple of the pushforward of P");
        out.g = u0.coeff(m1 + 1) * deg_prod.inverse();
        for (long p = m1 + 2; p <= n; ++p)
            if (!u0.coeff(p).is_zero())
                out.shape_failures.push_back("z^0 part has P-degree above the pushforward of g P");
        if (out.shape_failures.empty())
            out.tau = (out.g * out.F.inverse_truncated(series.degree_cap))
                          .truncated(series.degree_cap);
        break;
    }
    }
    return out;
}

TerminalReport terminal_check(const CIData& ci) {
    if (!ci.quasismooth_assumed)
        throw std::invalid_argument("terminal_check: requires the quasismoothness assumption");
    SectorSet s{ci.weights};
    TerminalReport report;
    report.terminal = true;
    for (const Sector& sec : s.sectors()) {
        if (sec.f.is_zero()) continue;
        TerminalReport::Entry e;
        e.f = sec.f;
        e.count_clause =
            count_integral(ci.degrees, sec.f) >= count_integral(ci.weights.values(), sec.f);
        e.reid_tai_clause = frac_sum(ci.weights.values(), sec.f) >
                            Rational(1) + frac_sum(ci.degrees, sec.f);
        report.entries.push_back(e);
        report.terminal = report.terminal && (e.count_clause || e.reid_tai_clause);
    }
    return report;
}

ReidTaiReport reid_tai(long r, const std::vector<long>& a) {
    if (r < 2) throw std::invalid_argument("reid_tai: order must be at least 2");
    if (a.empty()) throw std::invalid_argument("reid_tai: empty weight list");
    ReidTaiReport report;
    report.well_formed = true;
    for (size_t omit = 0; omit < a.size(); ++omit) {
        long g = r;
        for (size_t i = 0; i < a.size(); ++i)
            if (i != omit) g = std::gcd(g, a[i]);
        if (g != 1) {
            report.well_formed = false;
            break;
        }
    }
    report.terminal = report.well_formed;
    for (long k = 1; k < r && report.terminal; ++k) {
        Rational sum(0);
        for (long ai : a) sum += (Rational(k * ai, r)).frac();
        if (!(sum > Rational(1))) {
            report.terminal = false;
            report.failing_k = k;
        }
    }
    return report;
}

ReidTaiReport sector_singularity_reid_tai(const CIData& ci, const Rational& f,
                                          const std::vector<long>& unmatched_weights) {
    SectorSet s{ci.weights};
    if (!s.contains_fraction(f))
        throw std::invalid_argument("sector_singularity_reid_tai: f not in F");
    if (f.is_zero() || !f.den().fits_slong_p())
        throw std::invalid_argument("sector_singularity_reid_tai: needs a twisted sector");
    long r = f.den().get_si();
    return reid_tai(r, unmatched_weights);
}

KBoundsReport k_bounds_check(const CIData& ci) {
    if (!ci.quasismooth_assumed)
        throw std::invalid_argument("k_bounds_check: requires the quasismoothness assumption");
    if (ci.k_x() > 0) throw std::invalid_argument("k_bounds_check: requires k_X <= 0");
    KInvariants ks = k_invariants(ci);
    KBoundsReport report;
    report.pass = true;
    for (const auto& [f, kf] : ks.k_f) {
        KBoundsReport::Entry e;
        e.f = f;
        e.lhs = kf;
        e.bound = f * Rational(ks.k_x);
        e.ok = kf <= e.bound;
        if (ks.k_x == 0 && !f.is_zero()) e.strict_ok = kf < Rational(0);
        report.pass = report.pass && e.ok && e.strict_ok;
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace orbiqc
