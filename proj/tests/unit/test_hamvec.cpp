#include "doctest.h"

#include "surfw/hamvec.hpp"

using namespace surfw;

TEST_CASE("h2 bracket structure constants")
{
    // [V_{1,1}, V_{2,0}] = (2*1 - 1*0) V_{2,0} = 2 V_{2,0}
    HamElement b = h2_bracket(HamElement::basis(1, 1), HamElement::basis(2, 0));
    CHECK(b == HamElement::basis(2, 0) * Rat(2));
    // antisymmetry
    CHECK(h2_bracket(HamElement::basis(2, 3), HamElement::basis(2, 3)).is_zero());
    // V_{0,0} target collapses to zero
    CHECK(h2_bracket(HamElement::basis(0, 1), HamElement::basis(1, 0)).is_zero());
    // [V(2,3), V(1,1)] = (1*3 - 2*1) V(2,3) = V(2,3)
    CHECK(h2_bracket(HamElement::basis(2, 3), HamElement::basis(1, 1)) == HamElement::basis(2, 3));
}

TEST_CASE("ham parsing and printing")
{
    HamElement v = parse_ham("V(2,3)");
    CHECK(v == HamElement::basis(2, 3));
    CHECK(v.str() == "V(2,3)");
    CHECK_THROWS(parse_ham("W(1,2)"));
}

TEST_CASE("diff op realization examples")
{
    // V_{1,1} = x d/dx - y d/dy
    PolyDiffOp v11 = vmn_as_diffop(1, 1, 1);
    Poly f;
    f[{2, 1}] = 1; // x^2 y
    Poly img = apply_diffop(v11, f);
    // (x d/dx - y d/dy)(x^2 y) = 2 x^2 y - x^2 y = x^2 y
    REQUIRE(img.size() == 1);
    CHECK(img.at({2, 1}) == Rat(1));

    CHECK(vmn_as_diffop(0, 0, 1).is_zero());
    // apply(x d/dx, x^2 y) = 2 x^2 y
    PolyDiffOp xdx;
    xdx.nvars = 2;
    xdx.add({1, 0}, 0, Rat(1));
    Poly img2 = apply_diffop(xdx, f);
    CHECK(img2.at({2, 1}) == Rat(2));

    // [x d/dx - y d/dy, -2x d/dy] = -4 x d/dy
    PolyDiffOp b;
    b.nvars = 2;
    b.add({1, 0}, 1, Rat(-2));
    PolyDiffOp br = diffop_bracket(v11, b);
    PolyDiffOp expect;
    expect.nvars = 2;
    expect.add({1, 0}, 1, Rat(-4));
    CHECK(br == expect);
    // [A, A] = 0
    CHECK(diffop_bracket(v11, v11).is_zero());
}

TEST_CASE("jacobi, realization, equivariance suites")
{
    H2Options opt;
    opt.index_cap = 3;
    opt.degree_cap = 4;
    CHECK(h2_jacobi(opt).all_ok());
    CHECK(h2_realization(opt).all_ok());
    CHECK(h2_equivariance(opt).all_ok());
}

TEST_CASE("J2 example: V_{1,1} preserves x1 - x2")
{
    PolyDiffOp v = vmn_as_diffop(1, 1, 2);
    Poly f;
    f[{1, 0, 0, 0}] = 1;
    f[{0, 1, 0, 0}] = -1;
    Poly img = apply_diffop(v, f);
    CHECK(img == f);
}
