/**
 * @file verify.hpp
 * @brief The cross-check suite behind `orbiqc verify` and the acceptance
 *        tests: a built-in corpus of weight vectors and complete
 *        intersections, and per-item exact-identity checks covering both
 *        derivations of the ring, the Picard-Fuchs equation, the pairing,
 *        the grading and the classifier fixtures.
 */
#ifndef ORBIQC_VERIFY_HPP
#define ORBIQC_VERIFY_HPP

#include <string>
#include <vector>

#include "orbiqc/complete_intersection.hpp"
#include "orbiqc/quantum_ring.hpp"

namespace orbiqc {

struct CheckResult {
    std::string item;    // corpus item, e.g. "P(1,1,2)" or "X_7 in P(1,1,1,1,1,2)"
    std::string name;    // which identity
    bool pass = false;
    std::string detail;  // first counterexample when failing
};

/// Every weight vector with min_len <= length <= max_len and sum <= max_sum.
std::vector<std::vector<long>> weight_corpus(long min_len, long max_len, long max_sum);

/// The built-in complete-intersection fixtures: the four smoothable
/// Calabi-Yau threefold hypersurfaces, the fourfold X_7, and contrasting
/// non-terminal / negative-k examples.
struct CIFixture {
    std::vector<long> weights;
    std::vector<long> degrees;
    bool expect_terminal = false;
    bool expect_hypothesis = false;
};
std::vector<CIFixture> ci_fixtures();

/// Pairing of two classes extended bilinearly over the basis pairing.
NovikovScalar orb_pairing(const SectorSet& s, const OrbClass& x, const OrbClass& y);

/// Runs every ring/series identity on one weight vector; returns only the
/// failures.
std::vector<CheckResult> verify_weight_vector(const std::vector<long>& w,
                                              const Rational& degree_cap);

/// Runs the complete-intersection identities on one fixture.
std::vector<CheckResult> verify_ci_fixture(const CIFixture& fx);

struct VerifyOptions {
    Rational degree_cap{3};
    long max_len = 4;
    long max_sum = 10;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct VerifySummary {
    size_t items = 0;
    size_t checks = 0;
    std::vector<CheckResult> failures;
    bool pass() const { return failures.empty(); }
};

VerifySummary run_verify(const VerifyOptions& opts);

} // namespace orbiqc

#endif
