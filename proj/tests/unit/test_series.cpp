#include "doctest.h"

#include "surfw/series.hpp"

using namespace surfw;

TEST_CASE("omega series leading terms")
{
    auto P = make_projective_plane_ring();
    HeckeContext ctx(P);
    auto om = omega_series(ctx, 4);
    CHECK(om.at({2, 0}) == P->one());
    // x^3 coefficient: 2 y^{-1} - c1
    CHECK(om.at({3, -1}) == P->one() * Rat(2));
    CHECK(om.at({3, 0}) == P->c1() * Rat(-1));

    // with c1 = c2 = 0: Omega = sum (k+1) x^{k+2} y^{-k}
    auto C0 = make_curve_ring(0, 0);
    HeckeContext c0(C0);
    auto om0 = omega_series(c0, 5);
    for (const auto& [key, coeff] : om0) {
        CHECK(key.second == -(key.first - 2)); // only x^{k+2} y^{-k} survives
        CHECK(coeff == C0->one() * Rat(key.first - 1));
    }
}

TEST_CASE("oracle matches iterated T, small compact cases")
{
    auto P = make_projective_plane_ring();
    HeckeContext ctx(P);
    // length 2, a few tuples by hand
    for (int m = -1; m <= 2; ++m)
        for (int n = -1; n <= 2; ++n) {
            std::vector<int> xs{0, 1}; // inner xi = 1, outer xi' = h
            std::vector<int> as{n, m};
            OracleValue v = oracle_coefficient(ctx, xs, as);
            REQUIRE(v.defined);
            FockElement it = ctx.T_apply(m, RingElement::basis(*P, 1),
                                         ctx.T_apply(n, P->one(), FockElement::one(*P)));
            INFO("m=", m, " n=", n);
            CHECK(v.value == it);
        }
}

TEST_CASE("oracle contraction path agrees with eps on compact instances")
{
    auto P = make_projective_plane_ring();
    HeckeContext ctx(P);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            std::vector<int> xs{2, 1};
            std::vector<int> as{n, m};
            OracleValue direct = oracle_coefficient(ctx, xs, as, false);
            OracleValue contracted = oracle_coefficient(ctx, xs, as, true);
            REQUIRE(direct.defined);
            if (contracted.defined) CHECK(direct.value == contracted.value);
        }
}

TEST_CASE("oracle on the open curve")
{
    auto C = make_curve_ring(1, 1);
    HeckeContext ctx(C);
    // indices >= 1 stay eps-free through the contraction
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 3; ++n) {
            std::vector<int> xs{C->omega_index, 0};
            std::vector<int> as{n, m};
            OracleValue v = oracle_coefficient(ctx, xs, as);
            REQUIRE(v.defined);
            FockElement it = ctx.T_apply(m, RingElement::basis(*C, C->omega_index),
                                         ctx.T_apply(n, C->one(), FockElement::one(*C)));
            INFO("m=", m, " n=", n);
            CHECK(v.value == it);
        }
}

TEST_CASE("oracle and cubic reports at small order")
{
    SweepOptions opt;
    opt.order = 3;
    opt.jobs = 2;
    for (const char* name : {"p2", "curve:g=1,e=1"}) {
        auto ring = ring_by_name(name);
        SuiteReport orep = oracle_report(ring, opt);
        for (const auto& c : orep.cases)
            if (c.status == "FAIL") { INFO(c.id, ": ", c.detail); }
        CHECK(orep.all_ok());
        SuiteReport crep = cubic_report(ring, opt);
        for (const auto& c : crep.cases)
            if (c.status == "FAIL") { INFO(c.id, ": ", c.detail); }
        CHECK(crep.all_ok());
    }
}
