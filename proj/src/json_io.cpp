#include "orbiqc/json_io.hpp"

namespace orbiqc {

namespace {

json novikov_json(const NovikovScalar& c) { return c.to_string(); }

NovikovScalar novikov_from(const json& j) { return NovikovScalar::parse(j.get<std::string>()); }

} // namespace

json sector_to_json(const Sector& s) {
    return json{{"f", s.f.to_string()},
                {"dim", s.dim},
                {"age", s.age.to_string()},
                {"subweights", s.subweights}};
}

Sector sector_from_json(const json& j) {
    Sector s;
    s.f = Rational::parse(j.at("f").get<std::string>());
    s.dim = j.at("dim").get<long>();
    s.age = Rational::parse(j.at("age").get<std::string>());
    s.subweights = j.at("subweights").get<std::vector<long>>();
    return s;
}

json matrix_to_json(const QuantumMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(novikov_json(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

QuantumMatrix matrix_from_json(const json& j) {
    QuantumMatrix m;
    for (const auto& row : j) {
        std::vector<NovikovScalar> r;
        for (const auto& e : row) r.push_back(novikov_from(e));
        m.entries.push_back(std::move(r));
    }
    return m;
}

json orb_to_json(const SectorSet& s, const OrbClass& x) {
    json out = json::object();
    for (const auto& [sector, poly] : x.components()) {
        json coeffs = json::array();
        for (long p = 0; p <= poly.cap(); ++p) coeffs.push_back(novikov_json(poly.coeff(p)));
        out[s[sector].f.to_string()] = std::move(coeffs);
    }
    return out;
}

OrbClass orb_from_json(const SectorSet& s, const json& j) {
    OrbClass x;
    for (auto it = j.begin(); it != j.end(); ++it) {
        size_t sector = s.index_of(Rational::parse(it.key()));
        SectorPoly<NovikovScalar> poly(s[sector].dim);
        long p = 0;
        for (const auto& c : it.value()) poly.set_coeff(p++, novikov_from(c));
        x.add_component(sector, poly);
    }
    return x;
}

json table_to_json(const SectorSet& s, const MultiplicationTable& t) {
    json rows = json::array();
    for (size_t a = 0; a < t.size(); ++a) {
        json row = json::array();
        for (size_t b = 0; b < t.size(); ++b) row.push_back(orb_to_json(s, t.product(a, b)));
        rows.push_back(std::move(row));
    }
    return rows;
}

MultiplicationTable table_from_json(const SectorSet& s, const json& j) {
    std::vector<std::vector<OrbClass>> products;
    for (const auto& row : j) {
        std::vector<OrbClass> r;
        for (const auto& cell : row) r.push_back(orb_from_json(s, cell));
        products.push_back(std::move(r));
    }
    return MultiplicationTable(std::move(products));
}

json presentation_to_json(const SectorSet& s, const RingPresentation& p) {
    json rels = json::array();
    for (const Relation& rel : p.relations) {
        rels.push_back(json{{"lhs_sector", s[rel.lhs_sector].f.to_string()},
                            {"lhs_power", rel.lhs_power},
                            {"rhs_sector", s[rel.rhs_sector].f.to_string()},
                            {"coeff", novikov_json(rel.coeff)}});
    }
    return json{{"relations", std::move(rels)},
                {"top", json{{"power", p.top_power}, {"coeff", novikov_json(p.top_coeff)}}}};
}

RingPresentation presentation_from_json(const SectorSet& s, const json& j) {
    RingPresentation p;
    for (const auto& r : j.at("relations")) {
        Relation rel;
        rel.lhs_sector = s.index_of(Rational::parse(r.at("lhs_sector").get<std::string>()));
        rel.lhs_power = r.at("lhs_power").get<long>();
        rel.rhs_sector = s.index_of(Rational::parse(r.at("rhs_sector").get<std::string>()));
        rel.coeff = novikov_from(r.at("coeff"));
        p.relations.push_back(std::move(rel));
    }
    p.top_power = j.at("top").at("power").get<long>();
    p.top_coeff = novikov_from(j.at("top").at("coeff"));
    return p;
}

json series_to_json(const SectorSet& s, const JSeries& series) {
    json terms = json::array();
    for (const auto& [d, term] : series.terms) {
        json coeffs = json::array();
        for (long p = 0; p <= term.poly.cap(); ++p) {
            json zc = json::array();
            for (const auto& [k, c] : term.poly.coeff(p).terms())
                zc.push_back(json::array({k, c.to_string()}));
            coeffs.push_back(std::move(zc));
        }
        terms.push_back(json{{"degree", d.to_string()},
                             {"sector", s[term.sector].f.to_string()},
                             {"coefficients", std::move(coeffs)}});
    }
    return json{{"degree_cap", series.degree_cap.to_string()}, {"terms", std::move(terms)}};
}

JSeries series_from_json(const SectorSet& s, const json& j) {
    JSeries series;
    series.degree_cap = Rational::parse(j.at("degree_cap").get<std::string>());
    for (const auto& t : j.at("terms")) {
        Rational d = Rational::parse(t.at("degree").get<std::string>());
        size_t sector = s.index_of(Rational::parse(t.at("sector").get<std::string>()));
        SectorPoly<ZLaurent> poly(s[sector].dim);
        long p = 0;
        for (const auto& zc : t.at("coefficients")) {
            ZLaurent c;
            for (const auto& pair : zc)
                c += ZLaurent::monomial(Rational::parse(pair.at(1).get<std::string>()),
                                        pair.at(0).get<long>());
            poly.set_coeff(p++, std::move(c));
        }
        series.terms.emplace(d, SeriesTerm{sector, std::move(poly)});
    }
    return series;
}

json pf_report_to_json(const PFReport& r) {
    json degrees = json::array();
    for (const auto& e : r.entries)
        degrees.push_back(json{{"degree", e.degree.to_string()}, {"ok", e.ok}});
    return json{{"pass", r.pass}, {"degrees", std::move(degrees)}};
}

json mirror_to_json(const MirrorData& m) {
    const char* kind = m.kind == MirrorData::Case::k_below_minus_one
                           ? "k<-1"
                           : (m.kind == MirrorData::Case::k_minus_one ? "k=-1" : "k=0");
    return json{{"case", kind},
                {"F", m.F.to_string()},
                {"s", m.s.to_string()},
                {"g", m.g.to_string()},
                {"tau", m.tau.to_string()},
                {"shape_ok", m.shape_ok()},
                {"shape_failures", m.shape_failures}};
}

json series_hypothesis_to_json(const SeriesHypothesisReport& r) {
    json sectors = json::array();
    for (const auto& e : r.entries)
        sectors.push_back(json{{"f", e.f.to_string()},
                               {"k_f", e.k_f.to_string()},
                               {"k_clause", e.k_clause},
                               {"count_clause", e.count_clause}});
    return json{{"verdict", r.verdict}, {"sectors", std::move(sectors)}};
}

json terminal_to_json(const TerminalReport& r) {
    json sectors = json::array();
    for (const auto& e : r.entries)
        sectors.push_back(json{{"f", e.f.to_string()},
                               {"count_clause", e.count_clause},
                               {"reid_tai_clause", e.reid_tai_clause}});
    return json{{"verdict", r.terminal},
                {"sectors", std::move(sectors)},
                {"conditional_on_quasismoothness", r.conditional_on_quasismoothness}};
}

json k_bounds_to_json(const KBoundsReport& r) {
    json sectors = json::array();
    for (const auto& e : r.entries)
        sectors.push_back(json{{"f", e.f.to_string()},
                               {"k_f", e.lhs.to_string()},
                               {"bound", e.bound.to_string()},
                               {"ok", e.ok},
                               {"strict_ok", e.strict_ok}});
    return json{{"pass", r.pass}, {"sectors", std::move(sectors)}};
}

json reid_tai_to_json(long r, const std::vector<long>& a, const ReidTaiReport& rep) {
    return json{{"r", r},
                {"a", a},
                {"well_formed", rep.well_formed},
                {"terminal", rep.terminal},
                {"failing_k", rep.failing_k}};
}

} // namespace orbiqc
