#include <doctest.h>

#include "orbiqc/quantum_ring.hpp"
#include "orbiqc/render.hpp"
#include "orbiqc/verify.hpp"

using namespace orbiqc;

namespace {
NovikovScalar q_half_over_2() { return NovikovScalar::monomial(Rational(1, 2), Rational(1, 2)); }
} // namespace

TEST_CASE("c_sequence") {
    SectorSet s11{Weights{{1, 1}}};
    CHECK(CSequence(s11).values() == std::vector<Rational>{Rational(0), Rational(0)});

    SectorSet s112{Weights{{1, 1, 2}}};
    CHECK(CSequence(s112).values() ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1, 2)});

    SectorSet s123{Weights{{1, 2, 3}}};
    CHECK(CSequence(s123).values() ==
          std::vector<Rational>{Rational(0), Rational(0), Rational(0), Rational(1, 3),
                                Rational(1, 2), Rational(2, 3)});

    // blocks of equal values have multiplicity dim + 1
    for (const auto& wv : {std::vector<long>{1, 1, 2}, {1, 2, 3}, {2, 3, 4, 5}}) {
        SectorSet s{Weights{wv}};
        CSequence cs{s};
        REQUIRE(cs.size() == static_cast<size_t>(s.weights().sum()));
        for (size_t j = 1; j <= cs.size(); ++j) {
            CHECK(cs.value(j) == s[cs.sector(j)].f);
            CHECK(cs.repeat(j) <= s[cs.sector(j)].dim);
        }
    }
}

TEST_CASE("s_closed") {
    for (const auto& wv : {std::vector<long>{1, 1}, {1, 1, 2}, {3, 4}})
        CHECK(s_closed(Weights{wv}, Rational(0)) == Rational(1));

    CHECK(s_closed(Weights{{1, 1, 2}}, Rational(1, 2)) == Rational(1, 2));

    // f = 1 gives prod w_i^(-w_i), the top-relation constant
    CHECK(s_closed(Weights{{1, 1, 2}}, Rational(1)) == Rational(1, 4));
    CHECK(s_closed(Weights{{1, 1}}, Rational(1)) == Rational(1));
    CHECK(s_closed(Weights{{2, 3}}, Rational(1)) == Rational(1, 4 * 27));
}

TEST_CASE("sigma: closed ratio over the c-sequence") {
    // c_j = 0: empty products
    CHECK(sigma(Weights{{1, 1, 2}}, 1) == Rational(1));
    CHECK(sigma(Weights{{1, 4}}, 2) == Rational(1));

    // P(1,1,2), j = 4 (c = 1/2): (1/2)^3 / ((1/2)(1/2) * 1)
    CHECK(sigma(Weights{{1, 1, 2}}, 4) == Rational(1, 2));

    // P(1,4), c = 1/2 is position 3: (1/2)(1/2)(1/4) / ((1/2) * 1 * 2)
    {
        Weights w{{1, 4}};
        SectorSet s{w};
        CSequence cs{s};
        REQUIRE(cs.value(3) == Rational(1, 4));
        REQUIRE(cs.value(4) == Rational(1, 2));
        CHECK(sigma(cs, w, 4) == Rational(1, 16));
    }
}

TEST_CASE("sigma equals s_closed on every index") {
    for (const auto& wv :
         {std::vector<long>{1, 1}, {1, 2}, {1, 1, 2}, {1, 2, 3}, {2, 3, 4}, {1, 4}, {5}}) {
        Weights w{wv};
        SectorSet s{w};
        CSequence cs{s};
        for (size_t j = 1; j <= cs.size(); ++j) CHECK(sigma(cs, w, j) == s_closed(w, cs.value(j)));
    }
}

TEST_CASE("p_matrix: projective line") {
    SectorSet s{Weights{{1, 1}}};
    QuantumMatrix m = p_matrix(s);
    REQUIRE(m.size() == 2);
    CHECK(m.entries[0][0].is_zero());
    CHECK(m.entries[0][1] == NovikovScalar::q_power(Rational(1)));
    CHECK(m.entries[1][0] == NovikovScalar(1));
    CHECK(m.entries[1][1].is_zero());
}

TEST_CASE("p_matrix: P(1,1,2) fixture") {
    SectorSet s{Weights{{1, 1, 2}}};
    QuantumMatrix m = p_matrix(s);
    REQUIRE(m.size() == 4);
    CHECK(m.entries[1][0] == NovikovScalar(1));
    CHECK(m.entries[2][1] == NovikovScalar(1));
    CHECK(m.entries[3][2] == q_half_over_2());
    CHECK(m.entries[0][3] == q_half_over_2());
    // all other entries vanish
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (!((i == j + 1) || (i == 0 && j == 3))) CHECK(m.entries[i][j].is_zero());
}

TEST_CASE("p_matrix: P(1,2)") {
    SectorSet s{Weights{{1, 2}}};
    QuantumMatrix m = p_matrix(s);
    REQUIRE(m.size() == 3);
    CHECK(m.entries[1][0] == NovikovScalar(1));
    CHECK(m.entries[2][1] == q_half_over_2());
    CHECK(m.entries[0][2] == q_half_over_2());
}

TEST_CASE("companion_matrix") {
    SectorSet s{Weights{{1, 1, 2}}};
    QuantumMatrix m = companion_matrix(s);
    CHECK(m.entries[1][0] == NovikovScalar(1));
    CHECK(m.entries[2][1] == NovikovScalar(1));
    CHECK(m.entries[3][2] == NovikovScalar(1));
    CHECK(m.entries[0][3] == NovikovScalar::monomial(Rational(1, 4), Rational(1)));

    for (long n = 1; n <= 4; ++n) {
        std::vector<long> ones(n + 1, 1);
        SectorSet sm{Weights{ones}};
        CHECK(companion_matrix(sm).entries[0][n] == NovikovScalar::q_power(Rational(1)));
    }

    SectorSet s12{Weights{{1, 2}}};
    CHECK(companion_matrix(s12).entries[0][2] ==
          NovikovScalar::monomial(Rational(1, 4), Rational(1)));
}

TEST_CASE("presentation") {
    SectorSet s11{Weights{{1, 1}}};
    RingPresentation p11 = presentation(s11);
    REQUIRE(p11.relations.size() == 1);
    CHECK(p11.relations[0].lhs_power == 2);
    CHECK(p11.relations[0].coeff == NovikovScalar::q_power(Rational(1)));
    CHECK(top_relation_to_string(p11) == "P^2 = Q");

    SectorSet s{Weights{{1, 1, 2}}};
    RingPresentation p = presentation(s);
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0].lhs_sector == 0);
    CHECK(p.relations[0].lhs_power == 3);
    CHECK(p.relations[0].rhs_sector == s.index_of(Rational(1, 2)));
    CHECK(p.relations[0].coeff == q_half_over_2());
    CHECK(p.relations[1].lhs_power == 1);
    CHECK(p.relations[1].rhs_sector == 0);
    CHECK(p.relations[1].coeff == q_half_over_2());
    CHECK(p.top_power == 4);
    CHECK(p.top_coeff == NovikovScalar::monomial(Rational(1, 4), Rational(1)));
    CHECK(top_relation_to_string(p) == "P^4 = 1/4*Q");
    CHECK(relation_to_string(s, p.relations[0]) == "P^3 = 1/2*Q^(1/2)*1_(1/2)");
    CHECK(relation_to_string(s, p.relations[1]) == "P*1_(1/2) = 1/2*Q^(1/2)");

    // chaining the relations reproduces the top relation
    NovikovScalar chain(1);
    for (const Relation& r : p.relations) chain *= r.coeff;
    CHECK(chain == p.top_coeff);
}

TEST_CASE("multiplication_table: identity and fixtures") {
    SectorSet s{Weights{{1, 1, 2}}};
    MultiplicationTable t = multiplication_table(s);

    for (size_t b = 0; b < s.rank(); ++b) {
        const BasisElement& e = s.basis()[b];
        CHECK(t.product(0, b) == OrbClass::basis_monomial(s, e.sector, e.p, NovikovScalar(1)));
    }

    // 1_{1/2} o 1_{1/2} = P^2 1_0: Q^-1 * 4 * P^6 1_0 with P^6 = (Q/4) P^2
    size_t tw = s.position(s.index_of(Rational(1, 2)), 0);
    CHECK(t.product(tw, tw) == OrbClass::basis_monomial(s, 0, 2, NovikovScalar(1)));

    // P o P = Q 1_0 on the projective line
    SectorSet s11{Weights{{1, 1}}};
    MultiplicationTable t11 = multiplication_table(s11);
    CHECK(t11.product(1, 1) ==
          OrbClass::basis_monomial(s11, 0, 0, NovikovScalar::q_power(Rational(1))));
}

TEST_CASE("reduce_p_power") {
    SectorSet s{Weights{{1, 1, 2}}};
    // P^6 1_0 = (Q/4) P^2 1_0
    PPowerReduction r = reduce_p_power(s, 6);
    CHECK(r.q == 1);
    CHECK(r.sector == 0);
    CHECK(r.p == 2);
    CHECK(r.scalar == NovikovScalar::monomial(Rational(1, 4), Rational(1)));
    // P^3 1_0 = (Q^(1/2)/2) 1_{1/2}
    PPowerReduction r3 = reduce_p_power(s, 3);
    CHECK(r3.q == 0);
    CHECK(r3.sector == s.index_of(Rational(1, 2)));
    CHECK(r3.p == 0);
    CHECK(r3.scalar == q_half_over_2());
}

TEST_CASE("chen_ruan_table") {
    SectorSet s{Weights{{1, 1, 2}}};
    MultiplicationTable cr = chen_ruan_table(s);
    size_t tw = s.position(s.index_of(Rational(1, 2)), 0);

    // 1_{1/2} cup 1_{1/2} = P^2 1_0 survives at Q^0
    CHECK(cr.product(tw, tw) == OrbClass::basis_monomial(s, 0, 2, NovikovScalar(1)));
    // P cup 1_{1/2} = 0: within-sector product hits the nilpotency cap
    CHECK(cr.product(1, tw).is_zero());

    // P cup P = 0 on the projective line
    SectorSet s11{Weights{{1, 1}}};
    CHECK(chen_ruan_table(s11).product(1, 1).is_zero());
}

TEST_CASE("orb_to_string rendering") {
    SectorSet s{Weights{{1, 1, 2}}};
    MultiplicationTable t = multiplication_table(s);
    size_t tw = s.position(s.index_of(Rational(1, 2)), 0);
    CHECK(orb_to_string(s, t.product(tw, tw)) == "P^2");
    CHECK(orb_to_string(s, t.product(0, 0)) == "1");
    CHECK(orb_to_string(s, t.product(2, 1)) == "1/2*Q^(1/2)*1_(1/2)");
    CHECK(orb_to_string(s, OrbClass::zero()) == "0");

    SectorSet s11{Weights{{1, 1}}};
    MultiplicationTable t11 = multiplication_table(s11);
    CHECK(orb_to_string(s11, t11.product(1, 1)) == "Q");
}

TEST_CASE("ring invariants over sample weight vectors") {
    for (const auto& wv : {std::vector<long>{1, 1}, {1, 2}, {1, 1, 2}, {1, 2, 3}, {2, 2}, {3}}) {
        for (const CheckResult& r : verify_weight_vector(wv, Rational(1))) {
            INFO(r.item << " / " << r.name << ": " << r.detail);
            CHECK(r.pass);
        }
    }
}
