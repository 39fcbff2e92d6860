/**
 * @file complete_intersection.hpp
 * @brief Weighted projective complete intersections X_{d_0,...,d_m} in
 *        P(w_0,...,w_n): the hypergeometric I-function, the k-invariants,
 *        the hypothesis checks and case analysis with mirror-map extraction,
 *        the terminal-singularity classifier, and the Reid-Tai utility.
 *
 * Quasismoothness is an input assumption, never verified here; classifier
 * verdicts are conditional on it and the reports say so.
 */
#ifndef ORBIQC_COMPLETE_INTERSECTION_HPP
#define ORBIQC_COMPLETE_INTERSECTION_HPP

#include <map>
#include <string>
#include <vector>

#include "orbiqc/j_function.hpp"
#include "orbiqc/sector_geometry.hpp"

namespace orbiqc {

struct CIData {
    Weights weights;
    std::vector<long> degrees;          // d_0,...,d_m, all >= 1
    bool quasismooth_assumed = true;

    CIData(Weights w, std::vector<long> d, bool quasismooth = true);

    long k_x() const;                   // sum d_j - sum w_i
};

/// Both expressions of the sector invariant k_f, asserted equal:
///   k_f = sum ceil(f d_j) - sum ceil(f w_i)
///       = k_X f + sum <-f d_j> - sum <-f w_i>.
struct KInvariants {
    long k_x = 0;
    std::map<Rational, Rational> k_f;   // per sector index f
};

KInvariants k_invariants(const CIData& ci);

/// Which clause of the series hypothesis each nonzero sector satisfies:
/// either k_f < -1, or #{j : d_j f integral} >= #{i : w_i f integral}.
struct SeriesHypothesisReport {
    struct Entry {
        Rational f;
        Rational k_f;
        bool k_clause = false;
        bool count_clause = false;
    };
    std::vector<Entry> entries;
    bool verdict = false;               // all nonzero sectors pass
};

SeriesHypothesisReport series_hypothesis(const CIData& ci);

/// I-series: same shape as the J-series, with numerator factors
/// prod_j prod_{<b> = <d d_j>, 0 <= b <= d d_j} (d_j P + b z). The b = 0
/// factors contribute d_j P exactly when d d_j is integral, which makes the
/// degree-0 term z * prod_j (d_j P) 1_0.
JSeries i_series(const CIData& ci, const Rational& degree_cap);

/// Case analysis of the z-expansion I = F z + (z^0 part) + O(z^-1) in the
/// image of the ambient inclusion, at t = 0.
struct MirrorData {
    enum class Case { k_below_minus_one, k_minus_one, k_zero };
    Case kind = Case::k_zero;
    NovikovScalar F;          // z-leading series; constant term 1
    NovikovScalar s;          // case k_X = -1: the exponential correction
    NovikovScalar g;          // case k_X = 0: z^0 coefficient over iota_* P
    NovikovScalar tau;        // case k_X = 0: g / F truncated to the cap
    std::vector<std::string> shape_failures;

    bool shape_ok() const { return shape_failures.empty(); }
};

/// Extracts the mirror data from a computed I-series. Requires the
/// hypothesis verdict and k_X <= 0; refuses when the truncation makes the
/// division by prod_j (d_j P) ambiguous.
MirrorData mirror_data(const CIData& ci, const JSeries& series);

/// Terminal-singularity classifier (condition (2) of the equivalence):
/// every nonzero f in F satisfies the count clause or the strict
/// fractional-part inequality sum <f w_i> > 1 + sum <f d_j>.
struct TerminalReport {
    struct Entry {
        Rational f;
        bool count_clause = false;
        bool reid_tai_clause = false;
    };
    std::vector<Entry> entries;
    bool terminal = false;
    bool conditional_on_quasismoothness = true;
};

TerminalReport terminal_check(const CIData& ci);

/// Reid-Tai criterion for the cyclic quotient 1/r(a_1,...,a_n): terminal
/// iff well-formed and sum <k a_i / r> > 1 for every k = 1,...,r-1.
struct ReidTaiReport {
    bool well_formed = false;
    bool terminal = false;
    long failing_k = 0;       // first k violating the inequality, 0 if none
};

ReidTaiReport reid_tai(long r, const std::vector<long>& a);

/// Local quotient singularity of X along the sector f, for user-supplied
/// matching data: the weights not matched to any defining equation give the
/// quotient 1/r(w_{m+c+1},...,w_n) whose Reid-Tai verdict is the sector's.
ReidTaiReport sector_singularity_reid_tai(const CIData& ci, const Rational& f,
                                          const std::vector<long>& unmatched_weights);

/// Verifies the combinatorial inequalities
///   sum ceil(f d_j) - sum ceil(f w_i) <= f k_X            (k_X <= 0)
///   sum ceil(f d_j) - sum ceil(f w_i) <  0, f != 0        (k_X = 0)
/// on every sector; a violation on a genuinely quasismooth input would
/// contradict the theory, so violations are reported, not thrown.
struct KBoundsReport {
    struct Entry {
        Rational f;
        Rational lhs;       // k_f
        Rational bound;     // f k_X
        bool ok = false;
        bool strict_ok = true;  // only meaningful for k_X = 0, f != 0
    };
    std::vector<Entry> entries;
    bool pass = false;
};

KBoundsReport k_bounds_check(const CIData& ci);

} // namespace orbiqc

#endif
