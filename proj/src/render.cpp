#include "orbiqc/render.hpp"

namespace orbiqc {

namespace {

/// P^p 1_f with the usual omissions; empty string means the monomial is
/// the ring unit.
std::string basis_symbol(const SectorSet& s, size_t sector, long p) {
    std::string out;
    if (p == 1)
        out = "P";
    else if (p > 1)
        out = "P^" + std::to_string(p);
    if (sector != 0) {
        if (!out.empty()) out += "*";
        out += "1_(" + s[sector].f.to_string() + ")";
    }
    return out;
}

std::string scaled_symbol(const NovikovScalar& c, const std::string& symbol) {
    std::string cs = c.to_string();
    if (symbol.empty()) return cs;
    if (cs == "1") return symbol;
    if (cs == "-1") return "-" + symbol;
    if (c.term_count() > 1) return "(" + cs + ")*" + symbol;
    return cs + "*" + symbol;
}

} // namespace

std::string orb_to_string(const SectorSet& s, const OrbClass& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [sector, poly] : x.components()) {
        for (long p = 0; p <= poly.cap(); ++p) {
            if (poly.coeff(p).is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += scaled_symbol(poly.coeff(p), basis_symbol(s, sector, p));
        }
    }
    return out;
}

std::string relation_to_string(const SectorSet& s, const Relation& rel) {
    std::string lhs = basis_symbol(s, rel.lhs_sector, rel.lhs_power);
    std::string rhs = scaled_symbol(rel.coeff, basis_symbol(s, rel.rhs_sector, 0));
    return lhs + " = " + rhs;
}

std::string top_relation_to_string(const RingPresentation& pr) {
    return "P^" + std::to_string(pr.top_power) + " = " + pr.top_coeff.to_string();
}

std::string novikov_to_latex(const NovikovScalar& c) {
    if (c.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, coeff] : c.terms()) {
        if (first) {
            if (coeff.is_negative()) out += "-";
            first = false;
        } else {
            out += coeff.is_negative() ? " - " : " + ";
        }
        Rational a = coeff.abs();
        std::string cs;
        if (a.is_integer())
            cs = a.to_string();
        else
            cs = "\\tfrac{" + Rational(a.num()).to_string() + "}{" + Rational(a.den()).to_string() +
                 "}";
        std::string qs;
        if (!e.is_zero()) qs = e.is_one() ? "Q" : "Q^{" + e.to_string() + "}";
        if (qs.empty())
            out += cs;
        else
            out += (cs == "1" ? qs : cs + "\\," + qs);
    }
    return out;
}

std::string matrix_to_latex(const QuantumMatrix& m) {
    std::string out = "\\begin{pmatrix}\n";
    for (size_t i = 0; i < m.size(); ++i) {
        for (size_t j = 0; j < m.size(); ++j) {
            out += novikov_to_latex(m.entries[i][j]);
            if (j + 1 < m.size()) out += " & ";
        }
        out += " \\\\\n";
    }
    out += "\\end{pmatrix}";
    return out;
}

} // namespace orbiqc
