// Acceptance suite: every criterion is an exact identity (tolerance zero).
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orbiqc/complete_intersection.hpp"
#include "orbiqc/j_function.hpp"
#include "orbiqc/render.hpp"
#include "orbiqc/verify.hpp"

using namespace orbiqc;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool pass, const std::string& detail = "") {
    std::printf("criterion %d: %s  [%s]%s\n", number, pass ? "PASS" : "FAIL", what.c_str(),
                detail.empty() ? "" : ("  " + detail).c_str());
    if (!pass) ++failures;
}

bool checks_pass(const std::vector<CheckResult>& results, const std::set<std::string>& names,
                 std::string& detail) {
    for (const CheckResult& r : results) {
        if (!names.count(r.name)) continue;
        if (!r.pass) {
            detail = r.item + " / " + r.name + (r.detail.empty() ? "" : (": " + r.detail));
            return false;
        }
    }
    return true;
}

/// Test-side inversion oracle for criterion 4 (independent of the
/// reciprocal-factor expansion used by the implementation).
SectorPoly<ZLaurent> invert_poly(const SectorPoly<ZLaurent>& a) {
    const ZLaurent& c0 = a.coeff(0);
    long k0 = c0.terms().begin()->first;
    Rational v0 = c0.terms().begin()->second;
    auto div_c0 = [&](const ZLaurent& num) { return num * ZLaurent::monomial(v0.inverse(), -k0); };
    SectorPoly<ZLaurent> x(a.cap());
    x.set_coeff(0, div_c0(ZLaurent(1)));
    for (long p = 1; p <= a.cap(); ++p) {
        ZLaurent acc;
        for (long i = 1; i <= p; ++i) acc += a.coeff(i) * x.coeff(p - i);
        x.set_coeff(p, div_c0(-acc));
    }
    return x;
}

/// z-leading-ratio oracle for the quintic mirror coefficients: the ratio of
/// the numerator and denominator b-products at degree d.
Rational quintic_oracle(long d) {
    Rational num(1), den(1);
    for (long b = 1; b <= 5 * d; ++b) num *= Rational(b);
    for (long b = 1; b <= d; ++b) den *= Rational(b).pow(5);
    return num / den;
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;

    // ---- criteria 1, 2, 3, 6: one sweep over the weight corpus ----
    std::vector<std::vector<long>> corpus = weight_corpus(2, 4, 10);
    if (corpus.size() != 375) {
        std::printf("criterion 1: FAIL  [corpus enumeration: %zu items, expected 375]\n",
                    corpus.size());
        return 1;
    }
    auto start = clock::now();
    std::vector<CheckResult> all;
    for (const auto& wv : corpus) {
        std::vector<CheckResult> r = verify_weight_vector(wv, Rational(3));
        all.insert(all.end(), r.begin(), r.end());
    }
    double elapsed = std::chrono::duration<double>(clock::now() - start).count();

    std::string detail;
    bool pf = checks_pass(all, {"picard-fuchs", "degree-support", "denominator-count"}, detail);
    bool in_time = elapsed < 60.0;
    report(1, "Picard-Fuchs annihilation, 375 weight vectors, degrees <= 3", pf && in_time,
           (pf ? "" : detail) + (in_time ? "" : " (over 60 s)") + " [" +
               std::to_string(elapsed).substr(0, 5) + " s]");

    bool two = checks_pass(all, {"extract-v", "matrix-from-j"}, detail);
    report(2, "two-derivation agreement: series-derived matrix and v-classes", two, detail);

    bool closed = checks_pass(all,
                              {"sigma-equals-s", "r-product", "telescoping", "top-relation",
                               "presentation-chains", "companion-consistency"},
                              detail);
    report(3, "closed-form cross-checks: sigma = s, prod r_i, P^N identity", closed, detail);

    // ---- criterion 4: classical limit ----
    {
        bool ok = true;
        std::string d4;
        for (long n = 1; n <= 5 && ok; ++n) {
            std::vector<long> ones(n + 1, 1);
            SectorSet s{Weights{ones}};
            RingPresentation pres = presentation(s);
            ok = pres.relations.size() == 1 && pres.relations[0].lhs_power == n + 1 &&
                 pres.relations[0].coeff == NovikovScalar::q_power(Rational(1)) &&
                 pres.top_power == n + 1 &&
                 pres.top_coeff == NovikovScalar::q_power(Rational(1));
            if (!ok) {
                d4 = "presentation of P^" + std::to_string(n);
                break;
            }
            JSeries j = j_series(s, Rational(3));
            for (long d = 0; d <= 3 && ok; ++d) {
                SectorPoly<ZLaurent> denom = SectorPoly<ZLaurent>::one(n);
                for (long b = 1; b <= d; ++b)
                    for (long rep = 0; rep <= n; ++rep)
                        denom *= linear_factor(n, Rational(1), Rational(b));
                SectorPoly<ZLaurent> expected =
                    invert_poly(denom).map_coeffs([](const ZLaurent& c) { return c.shifted(1); });
                ok = j.terms.at(Rational(d)).poly == expected;
                if (!ok) d4 = "J term n=" + std::to_string(n) + " d=" + std::to_string(d);
            }
        }
        report(4, "classical limit: P^(n+1) = Q and Givental's J-function, n <= 5", ok, d4);
    }

    // ---- criterion 5: the P(1,1,2) fixture ----
    {
        Weights w{{1, 1, 2}};
        SectorSet s{w};
        NovikovScalar half_q_half = NovikovScalar::monomial(Rational(1, 2), Rational(1, 2));
        bool ok = s_closed(w, Rational(1, 2)) == Rational(1, 2);

        QuantumMatrix m = p_matrix(s);
        ok = ok && m.entries[1][0] == NovikovScalar(1) && m.entries[2][1] == NovikovScalar(1) &&
             m.entries[3][2] == half_q_half && m.entries[0][3] == half_q_half;

        RingPresentation pres = presentation(s);
        ok = ok && pres.top_power == 4 &&
             pres.top_coeff == NovikovScalar::monomial(Rational(1, 4), Rational(1));

        JSeries j = j_series(s, Rational(1));
        const SeriesTerm& t = j.terms.at(Rational(1, 2));
        ok = ok && t.sector == s.index_of(Rational(1, 2)) &&
             t.poly.coeff(0) == ZLaurent::monomial(Rational(4), -2);

        MultiplicationTable cr = chen_ruan_table(s);
        size_t tw = s.position(s.index_of(Rational(1, 2)), 0);
        ok = ok && cr.product(tw, tw) == OrbClass::basis_monomial(s, 0, 2, NovikovScalar(1));

        report(5, "P(1,1,2) fixture: s_2, matrix, P^4 = Q/4, J term, Chen-Ruan square", ok);
    }

    bool axioms = checks_pass(all,
                              {"commutative", "associative", "frobenius", "effective", "grading",
                               "q-lattice", "identity-element", "table-matches-matrix",
                               "chen-ruan-limit", "chen-ruan-nilpotent", "pairing-degree",
                               "pairing-nondegenerate", "pairing-symmetric"},
                              detail);
    report(6, "ring axioms, Frobenius property, effectivity and grading", axioms, detail);

    // ---- criterion 7: complete-intersection classifiers ----
    {
        bool ok = true;
        std::string d7;
        for (const CIFixture& fx : ci_fixtures()) {
            for (const CheckResult& r : verify_ci_fixture(fx))
                if (!r.pass) {
                    ok = false;
                    d7 = r.item + " / " + r.name;
                }
        }
        CIData x7{Weights{{1, 1, 1, 1, 1, 2}}, {7}};
        ok = ok && k_invariants(x7).k_f.at(Rational(1, 2)) == Rational(-2);
        CIData x3{Weights{{1, 1, 1, 2}}, {3}};
        ok = ok && !terminal_check(x3).terminal;

        // both forms of k_f agree over the whole weight corpus with single
        // degrees up to the anticanonical degree and a two-degree sample
        // (k_invariants throws when the forms disagree)
        try {
            for (const auto& wv : corpus) {
                Weights w{wv};
                for (long d = 1; d <= w.sum() + 1; ++d)
                    k_invariants(CIData{w, {d}});
                k_invariants(CIData{w, {2, 3}});
            }
        } catch (const std::logic_error& e) {
            ok = false;
            d7 = e.what();
        }
        report(7, "complete intersections: k_f forms, CY fixtures, ceiling bounds", ok, d7);
    }

    // ---- criterion 8: mirror data ----
    {
        bool ok = true;
        std::string d8;

        CIData quintic{Weights{{1, 1, 1, 1, 1}}, {5}};
        MirrorData mq = mirror_data(quintic, i_series(quintic, Rational(3)));
        const Rational frozen[4] = {Rational(1), Rational(120), Rational(113400),
                                    Rational(168168000)};
        for (long d = 0; d <= 3; ++d) {
            ok = ok && quintic_oracle(d) == frozen[d];          // oracle reproduces the fixture
            ok = ok && mq.F.coeff(Rational(d)) == frozen[d];    // implementation matches it
        }
        ok = ok && mq.shape_ok() && mq.kind == MirrorData::Case::k_zero;
        if (!ok) d8 = "quintic F-series";

        CIData x4{Weights{{1, 1, 1, 1, 1}}, {4}};
        MirrorData m4 = mirror_data(x4, i_series(x4, Rational(2)));
        bool ok4 = m4.kind == MirrorData::Case::k_minus_one && m4.shape_ok() &&
                   m4.s == NovikovScalar::monomial(Rational(24), Rational(1));
        if (!ok4) d8 = "X_4 exponential correction";

        CIData conic{Weights{{1, 1, 1, 1}}, {2}};
        MirrorData m2 = mirror_data(conic, i_series(conic, Rational(2)));
        bool ok2 = m2.kind == MirrorData::Case::k_below_minus_one && m2.shape_ok() &&
                   m2.F == NovikovScalar(1) && m2.s.is_zero() && m2.g.is_zero();
        if (!ok2) d8 = "X_2 shape";

        report(8, "mirror data: quintic (5d)!/(d!)^5, X_4 s = 24Q, X_2 shape", ok && ok4 && ok2,
               d8);
    }

    // ---- criterion 9: Reid-Tai ----
    {
        bool ok = !reid_tai(2, {1, 1}).terminal && !reid_tai(3, {1, 2}).terminal &&
                  reid_tai(2, {1, 1, 1}).terminal;
        std::mt19937 rng(77);
        std::uniform_int_distribution<long> rdist(2, 12), len(1, 5);
        for (int trial = 0; trial < 200 && ok; ++trial) {
            long r = rdist(rng);
            std::uniform_int_distribution<long> adist(0, r - 1);
            std::vector<long> a(len(rng));
            for (long& ai : a) ai = adist(rng);
            ReidTaiReport base = reid_tai(r, a);
            std::vector<long> perm = a;
            std::shuffle(perm.begin(), perm.end(), rng);
            ReidTaiReport p = reid_tai(r, perm);
            ok = ok && p.well_formed == base.well_formed && p.terminal == base.terminal;
            for (long u = 1; u < r; ++u) {
                if (std::gcd(u, r) != 1) continue;
                std::vector<long> scaled = a;
                for (long& ai : scaled) ai = (ai * u) % r;
                ReidTaiReport sc = reid_tai(r, scaled);
                ok = ok && sc.well_formed == base.well_formed && sc.terminal == base.terminal;
            }
        }
        report(9, "Reid-Tai fixtures and permutation/unit invariance, r <= 12", ok);
    }

    if (failures == 0) {
        std::printf("all acceptance criteria PASS\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
