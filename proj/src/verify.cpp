#include "orbiqc/verify.hpp"

#include <atomic>
#include <thread>

#include "orbiqc/j_function.hpp"

namespace orbiqc {

namespace {

std::string weights_name(const std::vector<long>& w) {
    std::string s = "P(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::string fixture_name(const CIFixture& fx) {
    std::string s = "X_(";
    for (size_t i = 0; i < fx.degrees.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(fx.degrees[i]);
    }
    return s + ") in " + weights_name(fx.weights);
}

using NVec = std::vector<NovikovScalar>;

NVec matrix_apply(const QuantumMatrix& m, const NVec& v) {
    NVec out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) out[i] += m.entries[i][j] * v[j];
    return out;
}

OrbClass column_class(const SectorSet& s, const QuantumMatrix& m, size_t col) {
    OrbClass out;
    for (size_t row = 0; row < m.size(); ++row) {
        const BasisElement& e = s.basis()[row];
        out += OrbClass::basis_monomial(s, e.sector, e.p, m.entries[row][col]);
    }
    return out;
}

class Checker {
public:
    Checker(std::string item, std::vector<CheckResult>& sink)
        : item_(std::move(item)), sink_(sink) {}

    void operator()(const std::string& name, bool ok, const std::string& detail = "") {
        sink_.push_back({item_, name, ok, ok ? "" : detail});
    }

private:
    std::string item_;
    std::vector<CheckResult>& sink_;
};

} // namespace

std::vector<std::vector<long>> weight_corpus(long min_len, long max_len, long max_sum) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long remaining_sum) -> void {
        long len = static_cast<long>(cur.size());
        if (len >= min_len && len <= max_len) out.push_back(cur);
        if (len == max_len) return;
        for (long w = 1; w <= remaining_sum; ++w) {
            cur.push_back(w);
            self(self, remaining_sum - w);
            cur.pop_back();
        }
    };
    rec(rec, max_sum);
    return out;
}

std::vector<CIFixture> ci_fixtures() {
    return {
        {{1, 1, 1, 1, 1}, {5}, true, true},      // quintic threefold
        {{1, 1, 1, 1, 2}, {6}, true, true},
        {{1, 1, 1, 1, 4}, {8}, true, true},
        {{1, 1, 1, 2, 5}, {10}, true, true},
        {{1, 1, 1, 1, 1, 2}, {7}, true, true},   // the fourfold example
        {{1, 1, 1, 2}, {3}, false, true},        // not terminal; k_{1/2} = -2 passes
        {{1, 1, 1, 1}, {2}, true, true},         // manifold case, k_X = -2
        {{1, 1, 1, 1, 1}, {4}, true, true},      // k_X = -1
        {{1, 1, 1, 1}, {2, 2}, true, true},      // intersection of two quadrics
    };
}

NovikovScalar orb_pairing(const SectorSet& s, const OrbClass& x, const OrbClass& y) {
    NovikovScalar out;
    for (const auto& [si, px] : x.components()) {
        for (long p = 0; p <= px.cap(); ++p) {
            if (px.coeff(p).is_zero()) continue;
            BasisElement ea{si, p, s.position(si, p)};
            for (const auto& [sj, py] : y.components()) {
                for (long q = 0; q <= py.cap(); ++q) {
                    if (py.coeff(q).is_zero()) continue;
                    BasisElement eb{sj, q, s.position(sj, q)};
                    Rational pr = pairing(s, ea, eb);
                    if (!pr.is_zero()) out += px.coeff(p) * py.coeff(q) * pr;
                }
            }
        }
    }
    return out;
}

std::vector<CheckResult> verify_weight_vector(const std::vector<long>& wvec,
                                              const Rational& degree_cap) {
    std::vector<CheckResult> results;
    Checker check(weights_name(wvec), results);

    Weights w{wvec};
    SectorSet s{w};
    const size_t n = s.rank();
    const long ncx = w.n();  // complex dimension

    // --- sector combinatorics ---
    {
        long count = 0;
        for (const Sector& sec : s.sectors()) count += sec.dim + 1;
        check("basis-count", count == w.sum());
        bool lattice_ok = true;
        for (const Sector& sec : s.sectors())
            lattice_ok = lattice_ok && (sec.f * Rational(w.lcm())).is_integer() &&
                         (sec.age * Rational(w.lcm())).is_integer() && sec.dim >= 0 &&
                         !sec.age.is_negative();
        check("sector-lattice", lattice_ok);
        check("untwisted-sector",
              s[0].f.is_zero() && s[0].dim == ncx && s[0].age.is_zero());

        bool inv_ok = true;
        for (size_t i = 0; i < s.size(); ++i) {
            size_t j = s.involution(i);
            inv_ok = inv_ok && s.involution(j) == i && s[j].dim == s[i].dim &&
                     s[i].age + s[j].age == Rational(ncx - s[i].dim);
        }
        check("involution", inv_ok);
    }

    // --- pairing ---
    {
        bool deg_ok = true, nondeg_ok = true, sym_ok = true;
        for (const BasisElement& a : s.basis()) {
            size_t nonzero = 0;
            for (const BasisElement& b : s.basis()) {
                Rational pr = pairing(s, a, b);
                sym_ok = sym_ok && pr == pairing(s, b, a);
                if (!pr.is_zero()) {
                    ++nonzero;
                    deg_ok = deg_ok && orbifold_degree(s, a) + orbifold_degree(s, b) ==
                                           Rational(2 * ncx);
                }
            }
            nondeg_ok = nondeg_ok && nonzero == 1;
        }
        check("pairing-degree", deg_ok);
        check("pairing-nondegenerate", nondeg_ok);
        check("pairing-symmetric", sym_ok);
    }

    // --- closed-form constants ---
    CSequence cs{s};
    {
        bool ok = true;
        std::string detail;
        for (size_t j = 1; j <= n; ++j) {
            if (sigma(cs, w, j) != s_closed(w, cs.value(j))) {
                ok = false;
                detail = "j = " + std::to_string(j);
                break;
            }
        }
        check("sigma-equals-s", ok, detail);
    }

    QuantumMatrix pm = p_matrix(s);
    RingPresentation pres = presentation(s);
    NovikovScalar corner = pres.top_coeff;  // Q prod w^-w
    {
        NovikovScalar prod(1);
        for (size_t i = 0; i + 1 < n; ++i) prod *= pm.entries[i + 1][i];
        prod *= pm.entries[0][n - 1];
        check("r-product", prod == corner);

        // the companion form is the p-matrix conjugated by the diagonal
        // rescaling e_j -> sigma_j Q^{c_j} e_j (negative Novikov powers
        // cancel entrywise on the cyclic shape)
        QuantumMatrix cm = companion_matrix(s);
        bool companion_ok = true;
        for (size_t i = 0; i < n && companion_ok; ++i) {
            for (size_t j = 0; j < n && companion_ok; ++j) {
                const BasisElement& ei = s.basis()[i];
                const BasisElement& ej = s.basis()[j];
                NovikovScalar col_scale = NovikovScalar::monomial(
                    sigma(cs, s.weights(), j + 1), s[ej.sector].f);
                NovikovScalar row_scale = NovikovScalar::monomial(
                    sigma(cs, s.weights(), i + 1), s[ei.sector].f);
                companion_ok =
                    cm.entries[i][j] * row_scale == pm.entries[i][j] * col_scale;
            }
        }
        check("companion-consistency", companion_ok);

        NovikovScalar chain(1);
        bool path_ok = true;
        size_t at = 0;
        for (const Relation& rel : pres.relations) {
            path_ok = path_ok && rel.lhs_sector == at;
            chain *= rel.coeff;
            at = rel.rhs_sector;
        }
        check("presentation-chains", path_ok && at == 0 && chain == corner);
    }

    // --- telescoping and the top relation, through the matrix ---
    {
        NVec v(n);
        v[0] = NovikovScalar(1);
        bool tel_ok = true;
        long applied = 0;
        for (size_t i = 0; i < s.size(); ++i) {
            while (applied < static_cast<long>(s.offset(i))) {
                v = matrix_apply(pm, v);
                ++applied;
            }
            NVec expected(n);
            expected[s.offset(i)] =
                NovikovScalar::monomial(s_closed(w, s[i].f), s[i].f);
            tel_ok = tel_ok && v == expected;
        }
        while (applied < static_cast<long>(n)) {
            v = matrix_apply(pm, v);
            ++applied;
        }
        NVec top(n);
        top[0] = corner;
        check("telescoping", tel_ok);
        check("top-relation", v == top);
    }

    // --- the multiplication table ---
    MultiplicationTable table = multiplication_table(s);
    {
        bool comm = true, effective = true, lattice = true, grading = true;
        for (size_t a = 0; a < n && comm; ++a)
            for (size_t b = 0; b < n && comm; ++b)
                comm = table.product(a, b) == table.product(b, a);
        check("commutative", comm);

        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b) {
                const OrbClass& prod = table.product(a, b);
                effective = effective && prod.effective();
                Rational dsum = orbifold_degree(s, s.basis()[a]) +
                                orbifold_degree(s, s.basis()[b]);
                for (const auto& [sector, poly] : prod.components()) {
                    for (long p = 0; p <= poly.cap(); ++p) {
                        for (const auto& [e, c] : poly.coeff(p).terms()) {
                            lattice = lattice && (e * Rational(w.lcm())).is_integer();
                            BasisElement ec{sector, p, s.position(sector, p)};
                            grading = grading &&
                                      dsum == orbifold_degree(s, ec) +
                                                  Rational(2 * w.sum()) * e;
                        }
                    }
                }
            }
        }
        check("effective", effective);
        check("q-lattice", lattice);
        check("grading", grading);

        bool assoc = true;
        std::string detail;
        for (size_t a = 0; a < n && assoc; ++a)
            for (size_t b = a; b < n && assoc; ++b)
                for (size_t c = b; c < n && assoc; ++c) {
                    OrbClass left = table.multiply(s, table.product(a, b),
                                                   OrbClass::basis_monomial(
                                                       s, s.basis()[c].sector, s.basis()[c].p,
                                                       NovikovScalar(1)));
                    OrbClass right = table.multiply(
                        s,
                        OrbClass::basis_monomial(s, s.basis()[a].sector, s.basis()[a].p,
                                                 NovikovScalar(1)),
                        table.product(b, c));
                    if (left != right) {
                        assoc = false;
                        detail = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")";
                    }
                }
        check("associative", assoc, detail);

        bool identity = true;
        for (size_t b = 0; b < n; ++b) {
            const BasisElement& eb = s.basis()[b];
            identity = identity &&
                       table.product(0, b) ==
                           OrbClass::basis_monomial(s, eb.sector, eb.p, NovikovScalar(1));
        }
        check("identity-element", identity);

        // consistency of the table with the matrix on the hyperplane class
        if (s[0].dim >= 1) {
            size_t p_pos = s.position(0, 1);
            bool consistent = true;
            for (size_t b = 0; b < n; ++b)
                consistent = consistent && table.product(p_pos, b) == column_class(s, pm, b);
            check("table-matches-matrix", consistent);
        }

        bool frob = true;
        for (size_t a = 0; a < n && frob; ++a)
            for (size_t b = 0; b < n && frob; ++b) {
                OrbClass ea = OrbClass::basis_monomial(s, s.basis()[a].sector, s.basis()[a].p,
                                                       NovikovScalar(1));
                OrbClass eb = OrbClass::basis_monomial(s, s.basis()[b].sector, s.basis()[b].p,
                                                       NovikovScalar(1));
                frob = orb_pairing(s, column_class(s, pm, a), eb) ==
                       orb_pairing(s, ea, column_class(s, pm, b));
            }
        check("frobenius", frob);
    }

    // --- Chen-Ruan limit ---
    {
        MultiplicationTable cr = chen_ruan_table(s);
        bool limit_ok = true;
        for (size_t a = 0; a < n && limit_ok; ++a)
            for (size_t b = 0; b < n && limit_ok; ++b)
                limit_ok = cr.product(a, b) == q_zero_limit(table.product(a, b));
        check("chen-ruan-limit", limit_ok);

        // nilpotency: (dim_f + 1)-fold cup with P kills 1_f
        QuantumMatrix cr_m = QuantumMatrix::zero(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                cr_m.entries[i][j] = NovikovScalar(pm.entries[i][j].at_q_zero());
        bool nilpotent = true;
        for (size_t i = 0; i < s.size(); ++i) {
            NVec v(n);
            v[s.offset(i)] = NovikovScalar(1);
            for (long k = 0; k <= s[i].dim; ++k) v = matrix_apply(cr_m, v);
            for (const auto& entry : v) nilpotent = nilpotent && entry.is_zero();
        }
        check("chen-ruan-nilpotent", nilpotent);
    }

    // --- the J-function route ---
    {
        JSeries series = j_series(s, degree_cap);

        bool support_ok = true;
        std::vector<Rational> expected = admissible_degrees(s, degree_cap);
        support_ok = series.terms.size() == expected.size();
        for (const Rational& d : expected)
            support_ok = support_ok && series.terms.count(d) == 1;
        check("degree-support", support_ok);

        bool count_ok = true;
        for (const auto& [d, term] : series.terms) {
            long expected_count = 0;
            for (long wi : w.values()) expected_count += (d * Rational(wi)).ceil().to_long();
            count_ok = count_ok &&
                       static_cast<long>(denominator_factors(w, d).size()) == expected_count;
        }
        check("denominator-count", count_ok);

        PFReport pf = pf_check(s, series);
        std::string detail;
        for (const auto& e : pf.entries)
            if (!e.ok) {
                detail = "degree " + e.degree.to_string();
                break;
            }
        check("picard-fuchs", pf.pass, detail);

        bool v_ok = true;
        for (size_t j = 1; j <= n && v_ok; ++j) {
            OrbClass expected_v = OrbClass::basis_monomial(
                s, cs.sector(j), cs.repeat(j), NovikovScalar(sigma(cs, w, j)));
            try {
                v_ok = extract_v(s, j, series) == expected_v;
            } catch (const std::logic_error&) {
                v_ok = false;
            }
        }
        check("extract-v", v_ok);

        bool m_ok = true;
        std::string m_detail;
        try {
            m_ok = matrix_from_j(s, series) == pm;
        } catch (const std::logic_error& e) {
            m_ok = false;
            m_detail = e.what();
        }
        check("matrix-from-j", m_ok, m_detail);
    }

    return results;
}

std::vector<CheckResult> verify_ci_fixture(const CIFixture& fx) {
    std::vector<CheckResult> results;
    Checker check(fixture_name(fx), results);

    CIData ci{Weights{fx.weights}, fx.degrees};
    bool kforms = true;
    std::string detail;
    try {
        k_invariants(ci);
    } catch (const std::logic_error& e) {
        kforms = false;
        detail = e.what();
    }
    check("k-forms-agree", kforms, detail);

    SeriesHypothesisReport cor = series_hypothesis(ci);
    check("series-hypothesis", cor.verdict == fx.expect_hypothesis,
          cor.verdict ? "unexpected pass" : "unexpected fail");

    TerminalReport term = terminal_check(ci);
    check("terminal-verdict", term.terminal == fx.expect_terminal,
          term.terminal ? "unexpected pass" : "unexpected fail");

    if (ci.k_x() <= 0) {
        KBoundsReport l61 = k_bounds_check(ci);
        check("k-bounds", l61.pass);
    }
    return results;
}

VerifySummary run_verify(const VerifyOptions& opts) {
    std::vector<std::vector<long>> corpus = weight_corpus(2, opts.max_len, opts.max_sum);
    std::vector<CIFixture> fixtures = ci_fixtures();

    const size_t items = corpus.size() + fixtures.size();
    std::vector<std::vector<CheckResult>> slots(items);

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(items));

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < items; i = next.fetch_add(1)) {
            if (i < corpus.size())
                slots[i] = verify_weight_vector(corpus[i], opts.degree_cap);
            else
                slots[i] = verify_ci_fixture(fixtures[i - corpus.size()]);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerifySummary summary;
    summary.items = items;
    for (const auto& slot : slots) {
        summary.checks += slot.size();
        for (const CheckResult& r : slot)
            if (!r.pass) summary.failures.push_back(r);
    }
    return summary;
}

} // namespace orbiqc
