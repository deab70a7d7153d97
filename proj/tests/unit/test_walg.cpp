#include "doctest.h"

#include "surfw/walg.hpp"

using namespace surfw;

TEST_CASE("operator layer basics")
{
    auto C = make_curve_ring(0, 1);
    OpEval ev(C);
    RingElement w = RingElement::basis(*C, C->omega_index);
    FockElement one = FockElement::one(*C);

    OpPtr psi = op_psi(2, w);
    CHECK(psi->shift == 2 * 2 - 2 + 2);
    OpPtr t = op_t(1, C->one());
    CHECK(t->shift == -2);
    CHECK(ev.apply(psi, one) == ev.ctx().psi_class(2, w));

    // [psi_m, psi_n] = 0
    OpPtr psi2 = op_psi(1, w);
    OpPtr br = op_bracket(psi, psi2);
    FockElement v = ev.ctx().h_eval(2, w);
    CHECK(ev.apply(br, v).is_zero());

    // [T_0(1), T_0(1)] = 0 on the compact instance
    auto P = make_projective_plane_ring();
    OpEval evp(P);
    OpPtr t0 = op_t(0, P->one());
    CHECK(evp.apply(op_bracket(t0, t0), FockElement::one(*P)).is_zero());
}

TEST_CASE("D normalization")
{
    auto C = make_curve_ring(1, 1);
    OpEval ev(C);
    RingElement w = RingElement::basis(*C, C->omega_index);
    auto basis = test_basis(*C, 5, 3);

    // D_{0,n} = psi_n and D_{1,n} = geometric T_n = abstract T_{n+1}
    for (int n = 0; n <= 2; ++n) {
        OpPtr d0 = op_d(0, n, w, 1);
        OpPtr d1 = op_d(1, n, w, 1);
        OpPtr psi = op_psi(n, w);
        OpPtr t = op_t(n + 1, w);
        for (const auto& mono : basis) {
            FockElement v(C.get());
            v.add(mono, Rat(1));
            CHECK(ev.apply(d0, v) == ev.apply(psi, v));
            CHECK(ev.apply(d1, v) == ev.apply(t, v));
        }
    }
}

TEST_CASE("proof identity [psi_2(xi), D_{m,n}(eta)] = 2m D_{m,n+1}(xi eta)")
{
    auto C = make_curve_ring(0, 1);
    OpEval ev(C);
    RingElement w = RingElement::basis(*C, C->omega_index);
    auto basis = test_basis(*C, 5, 3);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; m + n <= 2; ++n) {
            OpPtr lhs = op_bracket(op_psi(2, C->one()), op_d(m, n, w, 1));
            OpPtr rhs = op_d(m, n + 1, w, 1);
            for (const auto& mono : basis) {
                FockElement v(C.get());
                v.add(mono, Rat(1));
                CHECK(ev.apply(lhs, v) == ev.apply(rhs, v) * Rat(2 * m));
            }
        }
}

TEST_CASE("undeformed and lehn at small size")
{
    WAlgOptions opt;
    opt.max_degree = 4;
    opt.max_weight = 2;
    opt.max_index = 2;
    opt.jobs = 2;
    auto ring = make_curve_ring(1, 0);
    SuiteReport rep = check_undeformed(ring, opt);
    for (const auto& c : rep.cases)
        if (c.status == "FAIL") { INFO(c.id, ": ", c.detail); }
    CHECK(rep.all_ok());

    SuiteReport lrep = lehn_suite(ring, opt);
    for (const auto& c : lrep.cases)
        if (c.status == "FAIL") { INFO(c.id, ": ", c.detail); }
    CHECK(lrep.all_ok());
}

TEST_CASE("undeformed rejects deformed instances")
{
    WAlgOptions opt;
    CHECK_THROWS(check_undeformed(make_projective_plane_ring(), opt));
}

TEST_CASE("Lie word weights")
{
    auto C = make_curve_ring(0, 1);
    LieWord t3 = LieWord::leaf(true, 3, 0);
    CHECK(t3.weight() == 3);
    CHECK(t3.t_degree() == 1);
    LieWord w = LieWord::bracket(LieWord::leaf(false, 2, 0), LieWord::leaf(true, 1, 0));
    CHECK(w.weight() == 2);
    LieExpression e{{LieWord::leaf(false, 1, 0),
                     LieWord::bracket(LieWord::leaf(true, 0, 0), LieWord::leaf(true, 0, 1))}};
    CHECK(e.weight() == 1 + (0 + 0 - 1));
    CHECK(e.t_degree() == 2);
}

TEST_CASE("F-vanishing probe")
{
    WAlgOptions opt;
    opt.max_degree = 4;
    opt.max_weight = 2;
    opt.max_index = 1;
    opt.jobs = 2;
    for (int m = 0; m <= 2; ++m) {
        SuiteReport rep = f_vanishing_probe(make_curve_ring(1, 1), m, opt);
        for (const auto& c : rep.cases)
            if (c.status == "FAIL") { INFO(c.id, ": ", c.detail); }
        CHECK(rep.all_ok());
    }
}
