/**
 * @file sector_geometry.hpp
 * @brief Weighted projective space combinatorics: the inertia sectors of
 *        P(w_0,...,w_n), their dimensions/ages/subweights, the ordered
 *        cohomology basis, the age-shifted grading and the Poincare pairing.
 */
#ifndef ORBIQC_SECTOR_GEOMETRY_HPP
#define ORBIQC_SECTOR_GEOMETRY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "orbiqc/novikov.hpp"
#include "orbiqc/rational.hpp"
#include "orbiqc/sector_poly.hpp"

namespace orbiqc {

/// The universal input w_0,...,w_n (all >= 1). Validates on construction.
class Weights {
public:
    explicit Weights(std::vector<long> w);

    const std::vector<long>& values() const { return w_; }
    size_t count() const { return w_.size(); }
    /// Complex dimension of the ambient space: one less than the number of
    /// weights.
    long n() const { return static_cast<long>(w_.size()) - 1; }
    long lcm() const { return lcm_; }
    /// N = w_0 + ... + w_n, the rank of the orbifold cohomology.
    long sum() const { return sum_; }
    /// True for the degenerate single-weight input (accepted, but flagged).
    bool single_weight() const { return w_.size() == 1; }

    friend bool operator==(const Weights& a, const Weights& b) { return a.w_ == b.w_; }

private:
    std::vector<long> w_;
    long lcm_ = 1;
    long sum_ = 0;
};

/// One component of the inertia stack.
struct Sector {
    Rational f;                     // index in [0,1), some w_i f integral
    long dim = 0;                   // #{j : w_j f in Z} - 1
    Rational age;                   // sum of <-w_i f>
    std::vector<long> subweights;   // the w_i with w_i f integral

    friend bool operator==(const Sector& a, const Sector& b) {
        return a.f == b.f && a.dim == b.dim && a.age == b.age && a.subweights == b.subweights;
    }
};

struct BasisElement {
    size_t sector = 0;   // index into the sector set
    long p = 0;          // P-power, 0 <= p <= dim of the sector
    size_t position = 0; // index in the global basis ordering
};

/// The full sector set F of a weight vector, kept sorted by increasing f
/// (so index 0 is always the untwisted sector), together with the basis
/// offsets it induces.
class SectorSet {
public:
    explicit SectorSet(Weights w);

    const Weights& weights() const { return w_; }
    size_t size() const { return sectors_.size(); }
    const Sector& operator[](size_t i) const { return sectors_.at(i); }
    const std::vector<Sector>& sectors() const { return sectors_; }

    bool contains_fraction(const Rational& f) const;
    /// Index of the sector with the given f; throws if f is not in F.
    size_t index_of(const Rational& f) const;
    std::optional<size_t> find(const Rational& f) const;

    /// The sector carrying <-f>; an involution fixing the untwisted sector.
    size_t involution(size_t i) const;

    /// Basis position of P^p 1_f for sector i; offset(i) is the position of
    /// P^0 1_{f_i}.
    size_t offset(size_t i) const { return offsets_.at(i); }
    size_t position(size_t sector, long p) const;

    /// The ordered basis (by increasing f, then increasing P-power);
    /// total count equals the weight sum N.
    const std::vector<BasisElement>& basis() const { return basis_; }
    size_t rank() const { return basis_.size(); }

private:
    Weights w_;
    std::vector<Sector> sectors_;
    std::vector<size_t> offsets_;
    std::vector<BasisElement> basis_;
};

/// All distinct fractions k/w_i in [0,1), sorted increasing, with
/// dimension, age and subweights filled in.
std::vector<Sector> sector_set(const Weights& w);

/// Whether the fractional part of f indexes a sector, i.e. w_i <f> is an
/// integer for some weight.
bool is_sector_fraction(const Weights& w, const Rational& f);

/// Age-shifted real cohomological degree 2p + 2 age(f) of P^p 1_f.
Rational orbifold_degree(const SectorSet& s, const BasisElement& e);

/// Orbifold Poincare pairing on basis elements:
/// (P^a 1_f, P^b 1_g) = 1/prod(subweights of f) when g = <-f> and
/// a + b = dim_f, and 0 otherwise.
Rational pairing(const SectorSet& s, const BasisElement& a, const BasisElement& b);

/// Real virtual dimension of the genus-g, n_marks-pointed, degree-d moduli
/// space with the given marked sector ages.
Rational virtual_dim(const Weights& w, long genus, long n_marks, const Rational& d,
                     const std::vector<Rational>& sector_ages);

/// Dimension n + sum floor(d w_i) of the degree-d graph space; requires
/// d > 0 with <d> in F.
long graph_space_dim(const Weights& w, const Rational& d);

/// An orbifold cohomology class with Novikov coefficients: one truncated
/// P-polynomial per sector, absent sectors meaning zero.
class OrbClass {
public:
    OrbClass() = default;

    static OrbClass zero() { return OrbClass(); }
    static OrbClass basis_monomial(const SectorSet& s, size_t sector, long p,
                                   const NovikovScalar& c);

    bool is_zero() const { return components_.empty(); }

    /// Component on a sector (zero-filled at the sector's cap if absent).
    SectorPoly<NovikovScalar> component(const SectorSet& s, size_t sector) const;
    const std::map<size_t, SectorPoly<NovikovScalar>>& components() const { return components_; }

    void add_component(size_t sector, const SectorPoly<NovikovScalar>& poly);

    OrbClass operator-() const;
    OrbClass& operator+=(const OrbClass& o);
    OrbClass& operator-=(const OrbClass& o);
    OrbClass& operator*=(const NovikovScalar& c);
    OrbClass& operator*=(const Rational& c);

    friend OrbClass operator+(OrbClass a, const OrbClass& b) { return a += b; }
    friend OrbClass operator-(OrbClass a, const OrbClass& b) { return a -= b; }
    friend OrbClass operator*(OrbClass a, const NovikovScalar& c) { return a *= c; }
    friend OrbClass operator*(const NovikovScalar& c, OrbClass a) { return a *= c; }

    friend bool operator==(const OrbClass& a, const OrbClass& b) {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const OrbClass& a, const OrbClass& b) { return !(a == b); }

    /// True if every Novikov coefficient has nonnegative exponents.
    bool effective() const;

private:
    void prune();

    std::map<size_t, SectorPoly<NovikovScalar>> components_;
};

} // namespace orbiqc

#endif
