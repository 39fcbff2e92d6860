// orbiqc command-line interface: sectors / ring / jfun / ifun / classify /
// verify subcommands over the computation modules, with deterministic
// json, text and latex reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbiqc/json_io.hpp"
#include "orbiqc/render.hpp"
#include "orbiqc/verify.hpp"

namespace {

using namespace orbiqc;

constexpr const char* kSchema = "orbiqc/1";

std::vector<long> parse_long_list(const std::string& csv, const char* what) {
    std::vector<long> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

struct Options {
    std::string weights_csv;
    std::string degrees_csv;
    std::string degree_cap = "3";
    std::string format = "json";
    bool verify_pf = false;
    bool annotate_t = false;
    std::string reid_tai_spec;
    std::string batch_file;
    std::string corpus = "small";
    unsigned threads = 0;
};

Weights parse_weights(const Options& opt) {
    Weights w{parse_long_list(opt.weights_csv, "weights")};
    if (w.single_weight())
        std::cerr << "warning: single-weight input; the sector set is still well defined\n";
    return w;
}

void emit(const json& report, const Options& opt, const std::string& text,
          const std::string& latex) {
    if (opt.format == "json")
        std::cout << report.dump(2) << "\n";
    else if (opt.format == "latex")
        std::cout << latex;
    else
        std::cout << text;
}

/// Replaces Q by the symbolic token Qe^t for display; the computation
/// itself is always at t = 0.
std::string annotate(std::string s, bool on) {
    if (!on) return s;
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        out += s[i];
        if (s[i] == 'Q') out += "e^t";
    }
    return out;
}

int cmd_sectors(const Options& opt) {
    Weights w = parse_weights(opt);
    SectorSet s{w};

    json jf = json::array();
    for (const Sector& sec : s.sectors()) jf.push_back(sector_to_json(sec));
    json jbasis = json::array();
    for (const BasisElement& e : s.basis())
        jbasis.push_back(json{{"sector", s[e.sector].f.to_string()},
                              {"p", e.p},
                              {"position", e.position},
                              {"orbdeg", orbifold_degree(s, e).to_string()}});
    json jpair = json::array();
    for (const BasisElement& a : s.basis()) {
        json row = json::array();
        for (const BasisElement& b : s.basis()) row.push_back(pairing(s, a, b).to_string());
        jpair.push_back(std::move(row));
    }
    json report{{"schema", kSchema},       {"command", "sectors"},
                {"weights", w.values()},   {"F", std::move(jf)},
                {"basis", std::move(jbasis)}, {"pairing", std::move(jpair)}};

    std::ostringstream text;
    text << "sectors of P(" << opt.weights_csv << ")\n";
    for (const Sector& sec : s.sectors()) {
        text << "  f = " << sec.f << "  dim = " << sec.dim << "  age = " << sec.age
             << "  subweights = (";
        for (size_t i = 0; i < sec.subweights.size(); ++i)
            text << (i ? "," : "") << sec.subweights[i];
        text << ")\n";
    }
    text << "basis size N = " << s.rank() << "\n";

    std::ostringstream latex;
    latex << "\\begin{tabular}{cccc}\nf & \\dim & \\mathrm{age} & \\text{subweights} \\\\\n";
    for (const Sector& sec : s.sectors()) {
        latex << sec.f << " & " << sec.dim << " & " << sec.age << " & (";
        for (size_t i = 0; i < sec.subweights.size(); ++i)
            latex << (i ? "," : "") << sec.subweights[i];
        latex << ") \\\\\n";
    }
    latex << "\\end{tabular}\n";

    emit(report, opt, text.str(), latex.str());
    return 0;
}

int cmd_ring(const Options& opt) {
    Weights w = parse_weights(opt);
    SectorSet s{w};
    QuantumMatrix pm = p_matrix(s);
    QuantumMatrix cm = companion_matrix(s);
    RingPresentation pres = presentation(s);
    MultiplicationTable table = multiplication_table(s);
    MultiplicationTable cr = chen_ruan_table(s);

    json report{{"schema", kSchema},
                {"command", "ring"},
                {"weights", w.values()},
                {"p_matrix", matrix_to_json(pm)},
                {"companion_matrix", matrix_to_json(cm)},
                {"presentation", presentation_to_json(s, pres)},
                {"multiplication_table", table_to_json(s, table)},
                {"chen_ruan_table", table_to_json(s, cr)}};

    std::ostringstream text;
    text << "small quantum orbifold cohomology of P(" << opt.weights_csv << ")  [t = 0]\n";
    text << "matrix of P (sector basis):\n";
    for (size_t i = 0; i < pm.size(); ++i) {
        text << "  [";
        for (size_t j = 0; j < pm.size(); ++j)
            text << (j ? ", " : " ") << annotate(pm.entries[i][j].to_string(), opt.annotate_t);
        text << " ]\n";
    }
    text << "relations:\n";
    for (const Relation& rel : pres.relations)
        text << "  " << annotate(relation_to_string(s, rel), opt.annotate_t) << "\n";
    text << "top relation: " << annotate(top_relation_to_string(pres), opt.annotate_t) << "\n";
    auto describe = [&](const char* title, const MultiplicationTable& tbl) {
        text << title << ":\n";
        for (size_t a = 0; a < tbl.size(); ++a) {
            const BasisElement& ea = s.basis()[a];
            for (size_t b = a; b < tbl.size(); ++b) {
                const BasisElement& eb = s.basis()[b];
                OrbClass lhs_a = OrbClass::basis_monomial(s, ea.sector, ea.p, NovikovScalar(1));
                OrbClass lhs_b = OrbClass::basis_monomial(s, eb.sector, eb.p, NovikovScalar(1));
                text << "  " << orb_to_string(s, lhs_a) << " o " << orb_to_string(s, lhs_b)
                     << " = " << annotate(orb_to_string(s, tbl.product(a, b)), opt.annotate_t)
                     << "\n";
            }
        }
    };
    describe("multiplication table", table);
    describe("chen-ruan table", cr);

    std::ostringstream latex;
    latex << matrix_to_latex(pm) << "\n";

    emit(report, opt, text.str(), latex.str());
    return 0;
}

int cmd_jfun(const Options& opt) {
    Weights w = parse_weights(opt);
    SectorSet s{w};
    Rational cap = Rational::parse(opt.degree_cap);
    JSeries series = j_series(s, cap);

    json report{{"schema", kSchema},
                {"command", "jfun"},
                {"weights", w.values()},
                {"series", series_to_json(s, series)}};

    bool pf_pass = true;
    std::ostringstream text;
    text << "small J-function of P(" << opt.weights_csv << ") through degree " << cap
         << "  [t = 0]\n";
    for (const auto& [d, term] : series.terms) {
        text << "  Q^(" << d << ") * [";
        bool first = true;
        for (long p = 0; p <= term.poly.cap(); ++p) {
            if (term.poly.coeff(p).is_zero()) continue;
            if (!first) text << " + ";
            first = false;
            text << "(" << term.poly.coeff(p).to_string() << ")";
            if (p == 1)
                text << "*P";
            else if (p > 1)
                text << "*P^" << p;
        }
        if (first) text << "0";
        text << "] * 1_(" << s[term.sector].f << ")\n";
    }

    if (opt.verify_pf) {
        PFReport pf = pf_check(s, series);
        pf_pass = pf.pass;
        report["pf"] = pf_report_to_json(pf);
        text << "pf: " << (pf.pass ? "PASS" : "FAIL") << "\n";
        if (!pf.pass)
            for (const auto& e : pf.entries)
                if (!e.ok) {
                    text << "  first failing degree: " << e.degree << "\n";
                    break;
                }
    }

    std::ostringstream latex;
    latex << "J_{P(" << opt.weights_csv << ")}(0) = z\\sum_d Q^d T_d,\\quad T_d:\\\\\n";
    for (const auto& [d, term] : series.terms)
        latex << "d=" << d << ":\\ " << "\\text{sector } " << s[term.sector].f << "\\\\\n";

    emit(report, opt, text.str(), latex.str());
    return pf_pass ? 0 : 1;
}

int cmd_ifun(const Options& opt) {
    Weights w = parse_weights(opt);
    CIData ci{w, parse_long_list(opt.degrees_csv, "degrees")};
    SectorSet s{w};
    Rational cap = Rational::parse(opt.degree_cap);
    JSeries series = i_series(ci, cap);

    json report{{"schema", kSchema},
                {"command", "ifun"},
                {"weights", w.values()},
                {"degrees", ci.degrees},
                {"k_X", ci.k_x()},
                {"series", series_to_json(s, series)}};

    std::ostringstream text, latex;
    text << "I-function of X_(" << opt.degrees_csv << ") in P(" << opt.weights_csv
         << ") through degree " << cap << "  [t = 0]\n";
    text << "k_X = " << ci.k_x() << "\n";
    latex << "% I-function of X_{" << opt.degrees_csv << "} \\subset P(" << opt.weights_csv
          << "),\\ k_X = " << ci.k_x() << "\n";

    bool shape_ok = true;
    if (ci.k_x() <= 0 && series_hypothesis(ci).verdict) {
        MirrorData mirror = mirror_data(ci, series);
        report["mirror"] = mirror_to_json(mirror);
        shape_ok = mirror.shape_ok();
        const char* kind = mirror.kind == MirrorData::Case::k_below_minus_one
                               ? "k_X < -1"
                               : (mirror.kind == MirrorData::Case::k_minus_one ? "k_X = -1"
                                                                               : "k_X = 0");
        text << "case: " << kind << "\n";
        text << "F = " << mirror.F.to_string() << "\n";
        latex << "\\begin{align*}\nF(0) &= " << novikov_to_latex(mirror.F) << " + \\cdots\\\\\n";
        if (mirror.kind == MirrorData::Case::k_minus_one) {
            text << "s = " << mirror.s.to_string() << "\n";
            latex << "s(0) &= " << novikov_to_latex(mirror.s) << "\\\\\n";
        }
        if (mirror.kind == MirrorData::Case::k_zero) {
            text << "g = " << mirror.g.to_string() << "\n";
            text << "tau = " << mirror.tau.to_string() << "\n";
            latex << "g(0) &= " << novikov_to_latex(mirror.g) << " + \\cdots\\\\\n";
            latex << "\\tau(0) &= " << novikov_to_latex(mirror.tau) << " + \\cdots\\\\\n";
        }
        latex << "\\end{align*}\n";
        text << "shape: " << (shape_ok ? "PASS" : "FAIL") << "\n";
        for (const std::string& msg : mirror.shape_failures) text << "  " << msg << "\n";
    } else {
        report["mirror"] = nullptr;
        text << "mirror data skipped (requires k_X <= 0 and the sector hypothesis)\n";
        latex << "% mirror data skipped (requires k_X <= 0 and the sector hypothesis)\n";
    }

    emit(report, opt, text.str(), latex.str());
    return shape_ok ? 0 : 1;
}

int cmd_classify(const Options& opt) {
    if (!opt.reid_tai_spec.empty()) {
        auto colon = opt.reid_tai_spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--reid-tai expects r:a1,a2,...");
        long r = std::stol(opt.reid_tai_spec.substr(0, colon));
        std::vector<long> a =
            parse_long_list(opt.reid_tai_spec.substr(colon + 1), "reid-tai weights");
        ReidTaiReport rep = reid_tai(r, a);
        json report{{"schema", kSchema},
                    {"command", "classify"},
                    {"reid_tai", reid_tai_to_json(r, a, rep)}};
        std::ostringstream text;
        text << "1/" << r << "(";
        for (size_t i = 0; i < a.size(); ++i) text << (i ? "," : "") << a[i];
        text << "): " << (rep.terminal ? "terminal" : "not terminal")
             << (rep.well_formed ? "" : " (not well-formed)") << "\n";
        emit(report, opt, text.str(), text.str());
        return 0;
    }

    Weights w = parse_weights(opt);
    CIData ci{w, parse_long_list(opt.degrees_csv, "degrees")};
    KInvariants ks = k_invariants(ci);
    SeriesHypothesisReport cor = series_hypothesis(ci);
    TerminalReport term = terminal_check(ci);

    json jkf = json::object();
    for (const auto& [f, kf] : ks.k_f) jkf[f.to_string()] = kf.to_string();
    json report{{"schema", kSchema},
                {"command", "classify"},
                {"weights", w.values()},
                {"degrees", ci.degrees},
                {"k_X", ks.k_x},
                {"k_f", std::move(jkf)},
                {"verdict_cor12", cor.verdict},
                {"terminal", term.terminal},
                {"series_hypothesis", series_hypothesis_to_json(cor)},
                {"terminal_report", terminal_to_json(term)}};
    if (ks.k_x <= 0) report["k_bounds"] = k_bounds_to_json(k_bounds_check(ci));

    std::ostringstream text;
    text << "X_(" << opt.degrees_csv << ") in P(" << opt.weights_csv << ")\n";
    text << "k_X = " << ks.k_x << "\n";
    text << "series hypothesis: " << (cor.verdict ? "PASS" : "FAIL") << "\n";
    text << "terminal (assuming quasismooth): " << (term.terminal ? "YES" : "NO") << "\n";

    std::ostringstream latex;
    latex << "% X_{" << opt.degrees_csv << "} \\subset P(" << opt.weights_csv << "),\\ k_X = "
          << ks.k_x << "\n";
    latex << "\\begin{tabular}{cccc}\nf & k_f & \\text{hypothesis} & \\text{terminal clause} "
             "\\\\\n\\hline\n";
    for (size_t i = 0; i < cor.entries.size(); ++i) {
        const auto& ce = cor.entries[i];
        const auto& te = term.entries[i];
        latex << ce.f << " & " << ce.k_f << " & "
              << (ce.k_clause ? "k_f < -1" : (ce.count_clause ? "\\text{counts}" : "\\text{none}"))
              << " & "
              << (te.count_clause ? "\\text{counts}"
                                  : (te.reid_tai_clause ? "\\text{fractional sum}"
                                                        : "\\text{none}"))
              << " \\\\\n";
    }
    latex << "\\end{tabular}\n";

    emit(report, opt, text.str(), latex.str());
    return 0;
}

int classify_batch(const Options& opt) {
    std::ifstream in(opt.batch_file);
    if (!in) throw std::invalid_argument("cannot open batch file " + opt.batch_file);
    json reports = json::array();
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto semi = line.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("batch line " + std::to_string(lineno) +
                                        ": expected 'w0,...,wn;d0,...,dm'");
        Options row = opt;
        row.weights_csv = line.substr(0, semi);
        row.degrees_csv = line.substr(semi + 1);
        Weights w{parse_long_list(row.weights_csv, "weights")};
        CIData ci{w, parse_long_list(row.degrees_csv, "degrees")};
        KInvariants ks = k_invariants(ci);
        SeriesHypothesisReport cor = series_hypothesis(ci);
        TerminalReport term = terminal_check(ci);
        reports.push_back(json{{"weights", w.values()},
                               {"degrees", ci.degrees},
                               {"k_X", ks.k_x},
                               {"verdict_cor12", cor.verdict},
                               {"terminal", term.terminal}});
    }
    json report{{"schema", kSchema}, {"command", "classify"}, {"batch", std::move(reports)}};
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    VerifyOptions vo;
    vo.degree_cap = Rational::parse(opt.degree_cap);
    vo.threads = opt.threads;
    if (opt.corpus == "small") {
        vo.max_len = 4;
        vo.max_sum = 10;
    } else if (opt.corpus == "tiny") {
        vo.max_len = 3;
        vo.max_sum = 6;
    } else {
        throw std::invalid_argument("unknown corpus '" + opt.corpus + "' (small, tiny)");
    }

    VerifySummary summary = run_verify(vo);
    std::cout << "verify: corpus '" << opt.corpus << "', " << summary.items << " items, "
              << summary.checks << " checks\n";
    if (summary.pass()) {
        std::cout << "all invariants PASS\n";
        return 0;
    }
    const CheckResult& first = summary.failures.front();
    std::cout << summary.failures.size() << " FAILURES\n";
    std::cout << "first counterexample: " << first.item << " / " << first.name
              << (first.detail.empty() ? "" : (": " + first.detail)) << "\n";
    for (const CheckResult& r : summary.failures)
        std::cout << "  FAIL " << r.item << " " << r.name
                  << (r.detail.empty() ? "" : (": " + r.detail)) << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact small quantum orbifold cohomology of weighted projective spaces"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_weights) {
        if (needs_weights)
            sub->add_option("--weights", opt.weights_csv, "comma-separated weights w0,...,wn")
                ->required();
        sub->add_option("--format", opt.format, "json | text | latex")
            ->check(CLI::IsMember({"json", "text", "latex"}));
    };

    CLI::App* sectors = app.add_subcommand("sectors", "inertia sectors, basis and pairing");
    add_common(sectors, true);

    CLI::App* ring = app.add_subcommand("ring", "quantum ring: matrix, presentation, tables");
    add_common(ring, true);
    ring->add_option("--degree-max", opt.degree_cap, "unused; accepted for symmetry");
    ring->add_flag("--annotate-t", opt.annotate_t, "display Q as Qe^t");

    CLI::App* jfun = app.add_subcommand("jfun", "small J-function series");
    add_common(jfun, true);
    jfun->add_option("--degree-max", opt.degree_cap, "degree cap (rational, default 3)");
    jfun->add_flag("--verify-pf", opt.verify_pf, "check the Picard-Fuchs equation termwise");

    CLI::App* ifun = app.add_subcommand("ifun", "I-function and mirror data");
    add_common(ifun, true);
    ifun->add_option("--degrees", opt.degrees_csv, "complete-intersection degrees d0,...,dm")
        ->required();
    ifun->add_option("--degree-max", opt.degree_cap, "degree cap (rational, default 3)");

    CLI::App* classify = app.add_subcommand("classify", "k-invariants and terminal classifier");
    classify->add_option("--weights", opt.weights_csv, "comma-separated weights");
    classify->add_option("--degrees", opt.degrees_csv, "complete-intersection degrees");
    classify->add_option("--format", opt.format, "json | text | latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    classify->add_option("--reid-tai", opt.reid_tai_spec,
                         "standalone Reid-Tai check, r:a1,a2,...");
    classify->add_option("--batch", opt.batch_file, "CSV file of rows 'w0,...,wn;d0,...,dm'");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite over the corpus");
    verify->add_option("--corpus", opt.corpus, "small (default) | tiny");
    verify->add_option("--degree-max", opt.degree_cap, "degree cap for the series checks");
    verify->add_option("--threads", opt.threads, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sectors->parsed()) return cmd_sectors(opt);
        if (ring->parsed()) return cmd_ring(opt);
        if (jfun->parsed()) return cmd_jfun(opt);
        if (ifun->parsed()) return cmd_ifun(opt);
        if (classify->parsed()) {
            if (!opt.batch_file.empty()) return classify_batch(opt);
            if (opt.reid_tai_spec.empty() &&
                (opt.weights_csv.empty() || opt.degrees_csv.empty()))
                throw std::invalid_argument(
                    "classify needs --weights and --degrees, or --reid-tai, or --batch");
            return cmd_classify(opt);
        }
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
