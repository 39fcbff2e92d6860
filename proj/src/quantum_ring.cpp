#include "orbiqc/quantum_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbiqc {

namespace {

/// prod_i w_i^(-w_i), the corner constant of the top relation.
Rational corner_constant(const Weights& w) {
    Rational r(1);
    for (long wi : w.values()) r *= Rational(wi).pow(-wi);
    return r;
}

/// The b-values of the degree-d Euler factors for one weight:
/// all b with <b> = <d w_i>, 0 < b <= d w_i.
std::vector<Rational> euler_b_values(long wi, const Rational& d) {
    std::vector<Rational> out;
    Rational dwi = d * Rational(wi);
    for (Rational b = dwi; b > Rational(0); b -= Rational(1)) out.push_back(b);
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

CSequence::CSequence(const SectorSet& s) {
    // All fractions k/w_i with multiplicity, arranged in increasing order.
    std::vector<Rational> vals;
    for (long wi : s.weights().values())
        for (long k = 0; k < wi; ++k) vals.push_back(Rational(k, wi));
    std::sort(vals.begin(), vals.end());
    values_ = std::move(vals);

    repeats_.reserve(values_.size());
    sectors_.reserve(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) {
        long r = 0;
        while (r < static_cast<long>(i) && values_[i - r - 1] == values_[i]) ++r;
        repeats_.push_back(r);
        sectors_.push_back(s.index_of(values_[i]));
    }
}

Rational s_closed(const Weights& w, const Rational& f) {
    if (f.is_zero()) return Rational(1);
    if (f.is_negative() || f > Rational(1))
        throw std::invalid_argument("s_closed: f must lie in [0,1]");
    Rational r(1);
    for (long wi : w.values()) r *= Rational(wi).pow(-(f * Rational(wi)).ceil().to_long());
    return r;
}

Rational sigma(const CSequence& cs, const Weights& w, size_t j) {
    if (j < 1 || j > cs.size()) throw std::invalid_argument("sigma: index out of range");
    const Rational& cj = cs.value(j);
    Rational num(1);
    for (size_t m = 1; m <= cs.size(); ++m)
        if (cs.value(m) < cj) num *= cj - cs.value(m);
    Rational den(1);
    for (long wi : w.values())
        for (const Rational& b : euler_b_values(wi, cj)) den *= b;
    return num / den;
}

Rational sigma(const Weights& w, size_t j) {
    SectorSet s{w};
    return sigma(CSequence(s), w, j);
}

QuantumMatrix QuantumMatrix::zero(size_t n) {
    QuantumMatrix m;
    m.entries.assign(n, std::vector<NovikovScalar>(n));
    return m;
}

QuantumMatrix p_matrix(const SectorSet& s) {
    const size_t n = s.rank();
    QuantumMatrix m = QuantumMatrix::zero(n);
    // r_i = 1 off block boundaries; at the boundary closing the block of
    // f_j, r_i = Q^(f_{j+1} - f_j) s_{j+1} / s_j, with f_{k+1} = 1 feeding
    // back into the untwisted sector.
    std::vector<NovikovScalar> r(n);
    for (size_t i = 1; i <= n; ++i) {
        const BasisElement& e = s.basis()[i - 1];
        const Sector& sec = s[e.sector];
        if (e.p < sec.dim) {
            r[i - 1] = NovikovScalar(1);
        } else {
            Rational f_next =
                (e.sector + 1 < s.size()) ? s[e.sector + 1].f : Rational(1);
            Rational ratio = s_closed(s.weights(), f_next) / s_closed(s.weights(), sec.f);
            r[i - 1] = NovikovScalar::monomial(ratio, f_next - sec.f);
        }
    }
    for (size_t i = 0; i + 1 < n; ++i) m.entries[i + 1][i] = r[i];
    m.entries[0][n - 1] = r[n - 1];
    return m;
}

QuantumMatrix companion_matrix(const SectorSet& s) {
    const size_t n = s.rank();
    QuantumMatrix m = QuantumMatrix::zero(n);
    for (size_t i = 0; i + 1 < n; ++i) m.entries[i + 1][i] = NovikovScalar(1);
    m.entries[0][n - 1] = NovikovScalar::monomial(corner_constant(s.weights()), Rational(1));
    return m;
}

RingPresentation presentation(const SectorSet& s) {
    RingPresentation pr;
    for (size_t j = 0; j < s.size(); ++j) {
        Relation rel;
        rel.lhs_sector = j;
        rel.lhs_power = s[j].dim + 1;
        rel.rhs_sector = (j + 1 < s.size()) ? j + 1 : 0;
        Rational f_next = (j + 1 < s.size()) ? s[j + 1].f : Rational(1);
        Rational ratio = s_closed(s.weights(), f_next) / s_closed(s.weights(), s[j].f);
        rel.coeff = NovikovScalar::monomial(ratio, f_next - s[j].f);
        pr.relations.push_back(std::move(rel));
    }
    pr.top_power = static_cast<long>(s.rank());
    pr.top_coeff = NovikovScalar::monomial(corner_constant(s.weights()), Rational(1));
    return pr;
}

PPowerReduction reduce_p_power(const SectorSet& s, long m) {
    if (m < 0) throw std::invalid_argument("reduce_p_power: negative power");
    const long n = static_cast<long>(s.rank());
    PPowerReduction red;
    red.q = m / n;
    long rem = m % n;
    // rem = offset(sector) + p with 0 <= p <= dim; offsets increase
    // strictly, so the sector is determined.
    size_t sector = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (static_cast<long>(s.offset(i)) <= rem) sector = i;
    }
    red.sector = sector;
    red.p = rem - static_cast<long>(s.offset(sector));
    Rational w_pow = corner_constant(s.weights()).pow(red.q);
    Rational coeff = w_pow * s_closed(s.weights(), s[sector].f);
    red.scalar = NovikovScalar::monomial(coeff, Rational(red.q) + s[sector].f);
    return red;
}

MultiplicationTable multiplication_table(const SectorSet& s) {
    const size_t n = s.rank();
    std::vector<std::vector<OrbClass>> products(n, std::vector<OrbClass>(n));
    for (size_t a = 0; a < n; ++a) {
        const BasisElement& ea = s.basis()[a];
        const Sector& sa = s[ea.sector];
        for (size_t b = a; b < n; ++b) {
            const BasisElement& eb = s.basis()[b];
            const Sector& sb = s[eb.sector];
            // 1_f = Q^-f s_f^-1 P^offset(f) 1_0 after inverting Q, so the
            // product reduces to a single P-power applied to 1_0.
            long m = static_cast<long>(s.offset(ea.sector)) + ea.p +
                     static_cast<long>(s.offset(eb.sector)) + eb.p;
            PPowerReduction red = reduce_p_power(s, m);
            Rational sc = s_closed(s.weights(), s[red.sector].f) /
                          (s_closed(s.weights(), sa.f) * s_closed(s.weights(), sb.f));
            sc *= corner_constant(s.weights()).pow(red.q);
            Rational q_exp = Rational(red.q) + s[red.sector].f - sa.f - sb.f;
            if (q_exp.is_negative())
                throw std::logic_error(
                    "multiplication_table: negative Novikov exponent (effectivity violated)");
            OrbClass prod = OrbClass::basis_monomial(s, red.sector, red.p,
                                                     NovikovScalar::monomial(sc, q_exp));
            products[a][b] = prod;
            products[b][a] = std::move(prod);
        }
    }
    return MultiplicationTable(std::move(products));
}

OrbClass q_zero_limit(const OrbClass& x) {
    OrbClass r;
    for (const auto& [sector, poly] : x.components()) {
        SectorPoly<NovikovScalar> limited(poly.cap());
        for (long p = 0; p <= poly.cap(); ++p)
            limited.set_coeff(p, NovikovScalar(poly.coeff(p).at_q_zero()));
        if (!limited.is_zero()) r.add_component(sector, limited);
    }
    return r;
}

MultiplicationTable chen_ruan_table(const SectorSet& s) {
    MultiplicationTable quantum = multiplication_table(s);
    const size_t n = s.rank();
    std::vector<std::vector<OrbClass>> products(n, std::vector<OrbClass>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) products[a][b] = q_zero_limit(quantum.product(a, b));
    return MultiplicationTable(std::move(products));
}

OrbClass MultiplicationTable::multiply(const SectorSet& s, const OrbClass& x,
                                       const OrbClass& y) const {
    OrbClass out;
    for (const auto& [si, px] : x.components()) {
        for (long p = 0; p <= px.cap(); ++p) {
            if (px.coeff(p).is_zero()) continue;
            size_t a = s.position(si, p);
            for (const auto& [sj, py] : y.components()) {
                for (long q = 0; q <= py.cap(); ++q) {
                    if (py.coeff(q).is_zero()) continue;
                    size_t b = s.position(sj, q);
                    OrbClass term = product(a, b);
                    term *= px.coeff(p) * py.coeff(q);
                    out += term;
                }
            }
        }
    }
    return out;
}

} // namespace orbiqc
