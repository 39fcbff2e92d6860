#include <doctest.h>

#include "orbiqc/json_io.hpp"

using namespace orbiqc;

TEST_CASE("json: sector round-trip") {
    SectorSet s{Weights{{1, 1, 2}}};
    for (const Sector& sec : s.sectors()) {
        json j = sector_to_json(sec);
        CHECK(sector_from_json(j) == sec);
        CHECK(sector_to_json(sector_from_json(j)).dump() == j.dump());
    }
    json j = sector_to_json(s[1]);
    CHECK(j["f"] == "1/2");
    CHECK(j["dim"] == 0);
    CHECK(j["age"] == "1");
}

TEST_CASE("json: matrix round-trip") {
    for (const auto& wv : {std::vector<long>{1, 1}, {1, 1, 2}, {1, 2, 3}}) {
        SectorSet s{Weights{wv}};
        QuantumMatrix m = p_matrix(s);
        json j = matrix_to_json(m);
        CHECK(matrix_from_json(j) == m);
        CHECK(matrix_to_json(matrix_from_json(j)).dump() == j.dump());
    }
    SectorSet s{Weights{{1, 1}}};
    json j = matrix_to_json(p_matrix(s));
    CHECK(j[0][1] == "Q");
    CHECK(j[1][0] == "1");
    CHECK(j[0][0] == "0");
}

TEST_CASE("json: presentation and table round-trips") {
    SectorSet s{Weights{{1, 1, 2}}};
    RingPresentation p = presentation(s);
    json jp = presentation_to_json(s, p);
    CHECK(presentation_from_json(s, jp) == p);
    CHECK(jp["top"]["coeff"] == "1/4*Q");

    MultiplicationTable t = multiplication_table(s);
    json jt = table_to_json(s, t);
    CHECK(table_from_json(s, jt) == t);
    CHECK(table_to_json(s, table_from_json(s, jt)).dump() == jt.dump());
}

TEST_CASE("json: series round-trip") {
    for (const auto& wv : {std::vector<long>{1, 1}, {1, 1, 2}}) {
        SectorSet s{Weights{wv}};
        JSeries series = j_series(s, Rational(2));
        json j = series_to_json(s, series);
        CHECK(series_from_json(s, j) == series);
        CHECK(series_to_json(s, series_from_json(s, j)).dump() == j.dump());
    }
}

TEST_CASE("json: series with identically-zero twisted terms round-trips") {
    // X_8 in P(1,1,1,1,4): every twisted term of the I-series vanishes
    // because the numerator carries the pushforward P-power.
    CIData x8{Weights{{1, 1, 1, 1, 4}}, {8}};
    SectorSet s{x8.weights};
    JSeries series = i_series(x8, Rational(3, 2));
    bool has_zero_term = false;
    for (const auto& [d, term] : series.terms)
        if (!d.frac().is_zero() && term.poly.is_zero()) has_zero_term = true;
    CHECK(has_zero_term);
    json j = series_to_json(s, series);
    CHECK(series_from_json(s, j) == series);
}

TEST_CASE("json: determinism") {
    SectorSet s{Weights{{1, 2, 3}}};
    json a = table_to_json(s, multiplication_table(s));
    json b = table_to_json(s, multiplication_table(s));
    CHECK(a.dump(2) == b.dump(2));
}
