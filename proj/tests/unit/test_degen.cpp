#include "doctest.h"

#include "surfw/degen.hpp"

using namespace surfw;

TEST_CASE("integer eigendecomposition")
{
    Mat h(2, 2);
    h.at(0, 0) = 2;
    h.at(1, 1) = -1;
    std::string err;
    auto e = integer_eigen(h, 8, err);
    REQUIRE(e.has_value());
    CHECK(e->values == std::vector<int>{-1, 2});

    Mat bad(2, 2);
    bad.at(0, 0) = Rat(1, 2);
    CHECK(!integer_eigen(bad, 8, err).has_value());
}

TEST_CASE("sl2_correct synthetic")
{
    SUBCASE("already a triple")
    {
        // h = diag(1,-1), d = e (weight 2)
        Mat h(2, 2);
        h.at(0, 0) = 1;
        h.at(1, 1) = -1;
        Mat d(2, 2);
        d.at(0, 1) = 1;
        std::string err;
        auto e = sl2_correct(h, h, d, err);
        REQUIRE(e.has_value());
        CHECK(*e == d);
    }
    SUBCASE("weight-0 correction")
    {
        // d = d0 + f0 with [h,d0] = 2d0 and [h,f0] = 0
        Mat h(3, 3);
        h.at(0, 0) = 2;
        h.at(1, 1) = 0;
        h.at(2, 2) = 0;
        Mat d(3, 3);
        d.at(0, 1) = 1; // weight 2 part
        d.at(1, 2) = 5; // weight 0 part f0
        std::string err;
        auto e = sl2_correct(h, h, d, err);
        REQUIRE(e.has_value());
        Mat he = h * *e - *e * h;
        CHECK(he == *e * Rat(2));
        // C = [h,d] - 2d = -2 f0 sits in weight 0, so e = d + C/2 kills the
        // weight-0 part entirely
        CHECK(e->at(1, 2) == Rat(0));
        CHECK(e->at(0, 1) == Rat(1));
    }
    SUBCASE("positive component rejected")
    {
        Mat h(2, 2);
        h.at(0, 0) = 0;
        h.at(1, 1) = 2;
        Mat d(2, 2);
        d.at(1, 0) = 1; // weight +2: [h,d] - 2d has a positive-weight block? no:
        // [h,d] = 2d here, fine; build a genuinely bad one instead
        Mat bad(2, 2);
        bad.at(1, 0) = 1;
        bad.at(0, 1) = 1; // weight -2 piece: [h,bad]-2bad has weight -4 < 0 fine
        // positive violation: d with [h,d]-2d of weight +2:
        Mat d2(2, 2);
        d2.at(1, 0) = 0;
        d2.at(0, 0) = 1; // [h, d2] = 0, so C = -2 d2 sits at weight 0: allowed
        // weight +4 impossible with this h; craft: h' with values 0 and 4
        Mat h2(2, 2);
        h2.at(1, 1) = 4;
        Mat d3(2, 2);
        d3.at(1, 0) = 1; // weight +4, C = [h,d]-2d = 2 d3 nonzero at weight +4
        std::string err;
        CHECK(!sl2_correct(h2, h2, d3, err).has_value());
    }
}

TEST_CASE("tilde interpolation round trip on synthetic data")
{
    // families M_m = u^m sum_i m^i/i! C_i must reproduce the C_i exactly;
    // exercised through the same Lagrange code path used by the pipeline
    int n = 3;
    Mat u = Mat::identity(n);
    u.at(0, 1) = 1; // unipotent
    Mat C0 = Mat::identity(n) * Rat(2);
    Mat C1(n, n);
    C1.at(1, 2) = Rat(3);
    Mat C2(n, n);
    C2.at(0, 2) = Rat(-7, 2);
    auto family = [&](int m) {
        Mat acc(n, n);
        Rat mi(1);
        // sum_i m^i / i! C_i
        acc = acc + C0;
        acc = acc + C1 * Rat(m);
        acc = acc + C2 * (Rat(m) * Rat(m) / Rat(2));
        return mat_pow(u, m) * acc;
    };
    // reproduce via Lagrange through 0..K and u^{-m}
    int K = 4;
    Mat V(K + 1, K + 1);
    for (int m = 0; m <= K; ++m) {
        Rat p(1);
        for (int j = 0; j <= K; ++j) {
            V.at(m, j) = p;
            p *= Rat(m);
        }
    }
    auto Vi = inverse(V);
    REQUIRE(Vi.has_value());
    auto uinv = inverse(u);
    std::vector<Mat> vals;
    for (int m = 0; m <= K; ++m) vals.push_back(mat_pow(*uinv, m) * family(m));
    std::vector<Mat> coeff;
    for (int j = 0; j <= K; ++j) {
        Mat c(n, n);
        for (int m = 0; m <= K; ++m) c = c + vals[size_t(m)] * Vi->at(j, m);
        coeff.push_back(c);
    }
    CHECK(coeff[0] == C0);
    CHECK(coeff[1] == C1);
    CHECK(coeff[2] == C2 * Rat(1, 2)); // i! C_i convention: coefficient of m^2 is C2/2!
    CHECK(coeff[3].is_zero());
}

TEST_CASE("degeneration pipeline skeleton on a small window")
{
    DegenOptions opt;
    opt.r = 1;
    opt.chi = 0;
    opt.window = 4;
    Degeneration deg(make_curve_ring(0, 1), opt);

    // X is the identity on the vacuum
    auto m0 = deg.x_op().matrix(0);
    REQUIRE(m0.has_value());
    CHECK(m0->at(0, 0) == Rat(1));

    // X is invertible on every slice of this window
    for (int d = 0; d <= opt.window; ++d) {
        if (deg.module()->dim(d) == 0) continue;
        CHECK(deg.x_inv().matrix(d).has_value());
    }
}
