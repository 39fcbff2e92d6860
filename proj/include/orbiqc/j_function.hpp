/**
 * @file j_function.hpp
 * @brief The small J-function of weighted projective space as an exact
 *        series, its Picard-Fuchs verification, and the re-derivation of the
 *        quantum ring from the series through the degree-lowering operators
 *        D_j (the independent second route to the P-multiplication matrix).
 *
 * Conventions: everything is evaluated at t = 0, so the prefactor e^{Pt/z}
 * is 1 and z d/dt acts on the degree-d term as multiplication by (P + d z).
 * The term stored at degree d is T_d = z * prod 1/(w_i P + b z) in the
 * sector ring of <d>; the factor Q^d is implicit in the degree key.
 */
#ifndef ORBIQC_J_FUNCTION_HPP
#define ORBIQC_J_FUNCTION_HPP

#include <map>
#include <vector>

#include "orbiqc/quantum_ring.hpp"
#include "orbiqc/sector_geometry.hpp"

namespace orbiqc {

/// One factor (w_i P + b z) of the degree-d Euler class.
struct DenominatorFactor {
    long weight = 0;
    Rational b;

    friend bool operator==(const DenominatorFactor& x, const DenominatorFactor& y) {
        return x.weight == y.weight && x.b == y.b;
    }
};

/// The factors of e(N_d) = prod_i prod_{<b> = <d w_i>, 0 < b <= d w_i}
/// (w_i P + b z); the count is sum_i ceil(d w_i). Requires <d> in F.
std::vector<DenominatorFactor> denominator_factors(const Weights& w, const Rational& d);

struct SeriesTerm {
    size_t sector = 0;               // sector of <d>
    SectorPoly<ZLaurent> poly;       // cap = dim of that sector

    friend bool operator==(const SeriesTerm& a, const SeriesTerm& b) {
        return a.sector == b.sector && a.poly == b.poly;
    }
};

/// Degree-indexed exact series: terms for every d = k + f <= degree_cap
/// with k a nonnegative integer and f in F.
struct JSeries {
    Rational degree_cap;
    std::map<Rational, SeriesTerm> terms;

    bool covers(const Rational& d) const { return d <= degree_cap; }

    friend bool operator==(const JSeries& a, const JSeries& b) {
        return a.degree_cap == b.degree_cap && a.terms == b.terms;
    }
};

/// All admissible degrees d = k + f <= cap, increasing.
std::vector<Rational> admissible_degrees(const SectorSet& s, const Rational& cap);

/// The small J-function at t = 0 through degree D.
JSeries j_series(const SectorSet& s, const Rational& degree_cap);

/// Per-degree outcome of the Picard-Fuchs verification: the operator
/// prod_{i,k} (w_i P + (d w_i - k) z) applied to T_d must reproduce
/// T_{d-1} (or 0 when d < 1).
struct PFReport {
    struct Entry {
        Rational degree;
        bool ok = false;
    };
    std::vector<Entry> entries;
    bool pass = false;
};

PFReport pf_check(const SectorSet& s, const JSeries& j);

/// Result of applying D_j = Q^{-c_j} prod_{m<j} (z d/dt - z c_m) to the
/// series: the stored term at degree d is prod_{m<j} (P + (d - c_m) z) T_d
/// and carries the shifted Novikov power d - q_shift.
struct DjSeries {
    size_t j = 0;
    Rational q_shift;   // c_j
    std::map<Rational, SeriesTerm> terms;
};

DjSeries apply_Dj(const SectorSet& s, size_t j, const JSeries& series);

/// The class v_j = sigma_j P^{r_j} 1_{c_j}, read off the series as the
/// z-coefficient of z^{-1} D_j J. Degrees other than c_j must contribute
/// exactly zero; a nonzero contribution is an internal error.
OrbClass extract_v(const SectorSet& s, size_t j, const JSeries& series);

/// P * v_j read off the series as the z^0-coefficient of d/dt D_j J.
OrbClass p_quantum_v(const SectorSet& s, size_t j, const JSeries& series);

/// Reconstructs the matrix of quantum P-multiplication in the standard
/// sector basis from the series alone, and cross-checks it against the
/// closed form; a mismatch throws. Requires degree_cap >= 1.
QuantumMatrix matrix_from_j(const SectorSet& s, const JSeries& series);

} // namespace orbiqc

#endif
