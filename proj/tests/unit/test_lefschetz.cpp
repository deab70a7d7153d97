#include "doctest.h"

#include "surfw/lefschetz.hpp"

using namespace surfw;

namespace {

Mat jordan_block(int n)
{
    Mat m(n, n);
    for (int i = 0; i + 1 < n; ++i) m.at(i + 1, i) = 1;
    return m;
}

} // namespace

TEST_CASE("weight filtration of small Jordan blocks")
{
    SUBCASE("zero matrix")
    {
        Mat N(3, 3);
        FiltSpace W = weight_filtration(N);
        CHECK(rank(W.P(-1)) == 0);
        CHECK(rank(W.P(0)) == 3);
    }
    SUBCASE("block of size 2")
    {
        FiltSpace W = weight_filtration(jordan_block(2));
        CHECK(W.gr_dim(-1) == 1);
        CHECK(W.gr_dim(0) == 0);
        CHECK(W.gr_dim(1) == 1);
    }
    SUBCASE("block of size 3")
    {
        FiltSpace W = weight_filtration(jordan_block(3));
        CHECK(W.gr_dim(-2) == 1);
        CHECK(W.gr_dim(0) == 1);
        CHECK(W.gr_dim(2) == 1);
        CHECK(W.gr_dim(1) == 0);
    }
    CHECK_THROWS(weight_filtration(Mat::identity(2)));
}

TEST_CASE("weight filtration properties on random nilpotents")
{
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 10; ++trial) {
        int dim = 2 + int(rng() % 8);
        Mat N = random_nilpotent(rng, dim);
        FiltSpace W = weight_filtration(N);
        for (int k = W.lo() - 1; k <= W.hi(); ++k)
            CHECK(space_leq(column_space(N * W.P(k)), W.P(k - 2)));
        for (int k = 0; k <= dim; ++k) CHECK(W.gr_dim(k) == W.gr_dim(-k));
        // the canonical filtration with omega = N is a (lowering) Lefschetz
        // structure
        CheckResult res = lefschetz_verify({W, N});
        INFO(res.detail);
        CHECK(res.ok);
    }
}

TEST_CASE("sl2 on the graded of a Jordan block")
{
    SUBCASE("size 2")
    {
        Mat N = jordan_block(2);
        LefschetzStructure L{weight_filtration(N), N};
        std::string err;
        auto sl2 = sl2_on_gr(L, err);
        REQUIRE_MESSAGE(sl2.has_value(), err);
        CHECK(sl2->e * sl2->f - sl2->f * sl2->e == sl2->h);
        CHECK(sl2->h * sl2->e - sl2->e * sl2->h == sl2->e * Rat(2));
        CHECK(sl2->h * sl2->f - sl2->f * sl2->h == sl2->f * Rat(-2));
    }
    SUBCASE("blocks 3 + 1")
    {
        Mat N(4, 4);
        N.at(1, 0) = 1;
        N.at(2, 1) = 1;
        LefschetzStructure L{weight_filtration(N), N};
        std::string err;
        auto sl2 = sl2_on_gr(L, err);
        REQUIRE_MESSAGE(sl2.has_value(), err);
        CHECK(sl2->e * sl2->f - sl2->f * sl2->e == sl2->h);
        // the degree-0 singlet is annihilated by f: f has rank 2 (inside the 3-string)
        CHECK(rank(sl2->f) == 2);
    }
    SUBCASE("uniqueness across basis choices")
    {
        Mat N(3, 3);
        N.at(1, 0) = 1;
        N.at(2, 1) = 1;
        LefschetzStructure L{weight_filtration(N), N};
        std::string err;
        auto a = sl2_on_gr(L, err);
        // conjugated presentation of the same structure
        Mat g = Mat::identity(3);
        g.at(0, 1) = 2;
        g.at(1, 2) = -1;
        auto ginv = inverse(g);
        Mat N2 = g * N * *ginv;
        LefschetzStructure L2{weight_filtration(N2), N2};
        auto b = sl2_on_gr(L2, err);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        // f is canonical on Gr: the induced map Gr(g) intertwines the two
        Mat C = *inverse(b->reps) * g * a->reps;
        Mat D(C.rows, C.cols); // degree-preserving block of Gr(g)
        for (int i = 0; i < C.rows; ++i)
            for (int j = 0; j < C.cols; ++j)
                if (b->degrees[size_t(i)] == a->degrees[size_t(j)]) D.at(i, j) = C.at(i, j);
        CHECK(D * a->f == b->f * D);
        CHECK(rank(D) == 3);
    }
}

TEST_CASE("strictness on string morphisms")
{
    std::mt19937_64 rng(20240812);
    for (int trial = 0; trial < 25; ++trial) {
        StringPair p = random_equivariant_pair(rng, 6);
        CheckResult res = strictness_check(p.phi, p.U, p.V);
        INFO(res.detail);
        CHECK(res.ok);
    }
}

TEST_CASE("verify rejects a shifted filtration")
{
    Mat N = jordan_block(2);
    FiltSpace W = weight_filtration(N);
    std::map<int, Mat> shifted;
    for (int k = -3; k <= 3; ++k) shifted[k] = W.P(k - 1); // off-by-one
    LefschetzStructure bad{FiltSpace(2, std::move(shifted)), N};
    CHECK(!lefschetz_verify(bad).ok);
}

TEST_CASE("filtration_from_h and compare_h")
{
    Mat h(3, 3);
    h.at(0, 0) = -2;
    h.at(1, 1) = 0;
    h.at(2, 2) = 2;
    std::string err;
    auto F = filtration_from_h(h, err);
    REQUIRE(F.has_value());
    CHECK(rank(F->P(-2)) == 1);
    CHECK(rank(F->P(0)) == 2);
    CHECK(rank(F->P(2)) == 3);

    // e for this h: raise by 2 along the chain
    Mat e(3, 3);
    e.at(1, 0) = 1;
    e.at(2, 1) = 1;
    CHECK(compare_h(e, h, h).ok);
    Mat h2 = h;
    h2.at(0, 0) = 0; // breaks [h,h2]=0? no, both diagonal; breaks the weight
    CheckResult r = compare_h(e, h, h2);
    CHECK(!r.ok);
}

TEST_CASE("exp conjugation preserves the h filtration")
{
    // standard 3-dim irreducible: h = diag(2,0,-2), e raises, f lowers
    Mat h(3, 3);
    h.at(0, 0) = 2;
    h.at(1, 1) = 0;
    h.at(2, 2) = -2;
    Mat e(3, 3);
    e.at(0, 1) = 2;
    e.at(1, 2) = 2;
    Mat f(3, 3);
    f.at(1, 0) = 1;
    f.at(2, 1) = 1;
    // check the triple
    REQUIRE(e * f - f * e == h);
    // x = f^2 has h-degree -4
    Mat x = f * f;
    CheckResult res = exp_conjugation_filtration_check(x, e, h, f);
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("uniqueness oracle on small Jordan types")
{
    for (int n = 1; n <= 4; ++n) {
        CheckResult res = weight_filtration_unique(jordan_block(n));
        INFO("block size ", n, ": ", res.detail);
        CHECK(res.ok);
    }
    Mat N(4, 4);
    N.at(1, 0) = 1; // type (2,1,1)
    CheckResult res = weight_filtration_unique(N);
    INFO(res.detail);
    CHECK(res.ok);
}

TEST_CASE("matrix JSON round trip")
{
    Mat m(2, 2);
    m.at(0, 1) = Rat(3, 7);
    m.at(1, 0) = Rat(-2);
    Mat back = mat_from_json(mat_to_json(m));
    CHECK(back == m);
}
