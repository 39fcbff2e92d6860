/**
 * @file quantum_ring.hpp
 * @brief The small quantum orbifold cohomology ring of P(w_0,...,w_n) at
 *        parameter t = 0: the c-sequence, the constants s_j and sigma_j (two
 *        independent routes), the cyclic P-multiplication matrix, the ring
 *        presentation, the full multiplication table, and its Q -> 0
 *        Chen-Ruan specialization.
 *
 * All t-dependence of the underlying family enters through factors e^{ft}
 * and Q^d e^{dt}; everything here is evaluated at t = 0 and the CLI layer
 * may annotate Q as "Qe^t" for display.
 */
#ifndef ORBIQC_QUANTUM_RING_HPP
#define ORBIQC_QUANTUM_RING_HPP

#include <vector>

#include "orbiqc/sector_geometry.hpp"

namespace orbiqc {

/// The N fractions k/w_i (0 <= k < w_i, with multiplicity) in increasing
/// order, plus the block bookkeeping they induce: entry j lies in the block
/// of its sector and repeat(j) counts earlier equal values.
class CSequence {
public:
    explicit CSequence(const SectorSet& s);

    size_t size() const { return values_.size(); }
    /// c_j, 1-based as in the source formulas.
    const Rational& value(size_t j) const { return values_.at(j - 1); }
    /// r_j = #{i < j : c_i = c_j}, 1-based.
    long repeat(size_t j) const { return repeats_.at(j - 1); }
    /// Sector index of c_j in the sector set.
    size_t sector(size_t j) const { return sectors_.at(j - 1); }

    const std::vector<Rational>& values() const { return values_; }

private:
    std::vector<Rational> values_;
    std::vector<long> repeats_;
    std::vector<size_t> sectors_;
};

/// s_j in closed form: 1 at f = 0, otherwise prod_i w_i^(-ceil(f w_i)).
/// Accepts any f in F together with the virtual marker f = 1, for which the
/// value is prod_i w_i^(-w_i).
Rational s_closed(const Weights& w, const Rational& f);

/// sigma_j = prod_{m : c_m < c_j} (c_j - c_m) / prod of the b appearing in
/// the degree-c_j Euler factors. Equals s_closed(w, c_j) identically; the
/// two routes are kept separate so tests can compare them.
Rational sigma(const Weights& w, size_t j);
Rational sigma(const CSequence& cs, const Weights& w, size_t j);

/// N x N matrix over the Novikov ring, acting on coordinate columns; the
/// basis is implied by context (the standard sector basis, or the rescaled
/// v-basis for the companion form).
struct QuantumMatrix {
    std::vector<std::vector<NovikovScalar>> entries;

    size_t size() const { return entries.size(); }
    static QuantumMatrix zero(size_t n);

    friend bool operator==(const QuantumMatrix& a, const QuantumMatrix& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const QuantumMatrix& a, const QuantumMatrix& b) { return !(a == b); }
};

/// Matrix of quantum multiplication by P in the standard sector basis:
/// sub-diagonal entries r_1..r_{N-1} and corner r_N, zeros elsewhere.
QuantumMatrix p_matrix(const SectorSet& s);

/// The same operator in the rescaled v-basis: all sub-diagonal entries 1,
/// corner Q * prod w_i^(-w_i).
QuantumMatrix companion_matrix(const SectorSet& s);

/// One relation P^(dim_f + 1) 1_f = coeff * 1_g of the presentation.
struct Relation {
    size_t lhs_sector = 0;
    long lhs_power = 0;        // dim of lhs sector + 1
    size_t rhs_sector = 0;
    NovikovScalar coeff;

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.lhs_sector == b.lhs_sector && a.lhs_power == b.lhs_power &&
               a.rhs_sector == b.rhs_sector && a.coeff == b.coeff;
    }
};

struct RingPresentation {
    std::vector<Relation> relations;
    long top_power = 0;        // N
    NovikovScalar top_coeff;   // P^N = top_coeff * 1_0

    friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
        return a.relations == b.relations && a.top_power == b.top_power &&
               a.top_coeff == b.top_coeff;
    }
};

/// The relations of the ring at t = 0; chaining all of them yields the top
/// relation P^N = Q prod w_i^(-w_i) * 1_0.
RingPresentation presentation(const SectorSet& s);

/// P^m 1_0 reduced to scalar * P^p 1_f via the unique decomposition
/// m = q N + offset(f) + p with 0 <= p <= dim_f.
struct PPowerReduction {
    long q = 0;
    size_t sector = 0;
    long p = 0;
    NovikovScalar scalar;  // (Q prod w^-w)^q * Q^f * s_f
};
PPowerReduction reduce_p_power(const SectorSet& s, long m);

/// Full multiplication table of the small quantum product on the basis,
/// with every structure constant an effective (nonnegative-exponent) class.
class MultiplicationTable {
public:
    MultiplicationTable() = default;
    explicit MultiplicationTable(std::vector<std::vector<OrbClass>> products)
        : products_(std::move(products)) {}

    size_t size() const { return products_.size(); }
    const OrbClass& product(size_t a, size_t b) const { return products_.at(a).at(b); }

    /// Bilinear extension of the table to arbitrary classes.
    OrbClass multiply(const SectorSet& s, const OrbClass& x, const OrbClass& y) const;

    friend bool operator==(const MultiplicationTable& a, const MultiplicationTable& b) {
        return a.products_ == b.products_;
    }

private:
    std::vector<std::vector<OrbClass>> products_;
};

/// Structure constants of the small quantum product at t = 0, obtained by
/// expressing every 1_f through P-powers of 1_0 (Q inverted internally) and
/// reducing; the result is always effective.
MultiplicationTable multiplication_table(const SectorSet& s);

/// Q -> 0 limit of the quantum table: the Chen-Ruan orbifold cup product.
MultiplicationTable chen_ruan_table(const SectorSet& s);

/// Q -> 0 limit of a class (drops all positive-exponent Novikov terms).
OrbClass q_zero_limit(const OrbClass& x);

} // namespace orbiqc

#endif
