#include "surfw/degen.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace surfw {

namespace {

CaseResult compare_case(const std::string& id, const ModCompare& cmp)
{
    std::ostringstream detail;
    if (!cmp.detail.empty()) detail << cmp.detail;
    if (!cmp.skipped.empty()) {
        detail << (cmp.detail.empty() ? "" : "; ") << "skipped slices:";
        for (int d : cmp.skipped) detail << " " << d;
    }
    if (cmp.checked.empty()) return {id, "SKIP", "no sound slices" + (detail.str().empty() ? "" : "; " + detail.str())};
    return {id, cmp.equal ? "OK" : "FAIL", detail.str()};
}

} // namespace

SuiteReport Degeneration::weyl_suite()
{
    const RingSpec& R = mod_->ring();
    SuiteReport rep;
    rep.suite = "weyl";
    rep.instance = R.name();

    ModOp y = y_op(), dy = dy_op();
    rep.cases.push_back(compare_case("weyl [dy,y] = id", mod_equal(mod_bracket(dy, y), mod_identity(mod_))));
    rep.cases.push_back(compare_case("weyl [y,q1(1)] = X",
                                     mod_equal(mod_bracket(y, d_shadow(1, 0, R.one())), x_op())));

    // round-trip decomposition V = V_red[y]
    {
        std::ostringstream detail;
        bool ok = true;
        int checked = 0;
        for (int d = 0; d <= mod_->window(); ++d) {
            if (mod_->dim(d) == 0) continue;
            auto B = weyl_basis(d);
            if (!B) {
                detail << " slice " << d << ": undecomposable/skipped;";
                ok = false;
                continue;
            }
            ++checked;
        }
        rep.cases.push_back({"weyl round-trip V = V_red[y]",
                             checked == 0 ? "SKIP" : (ok ? "OK" : "FAIL"), detail.str()});
    }

    // vector_red lands in ker dy and matches the basis-decomposition oracle
    {
        bool ok = true;
        std::string detail;
        int checked = 0;
        for (int d = 0; d <= mod_->window() && ok; ++d) {
            auto B = weyl_basis(d);
            auto dym = dy.matrix(d);
            if (!B || !dym) continue;
            auto Binv = inverse(*B);
            if (!Binv) continue;
            auto kdim = kernel_basis(*dym).cols;
            for (const auto& mono : mod_->slice(d)) {
                FockElement v(&R);
                v.add(mono, Rat(1));
                FockElement red = vector_red(v);
                std::vector<Rat> rc = mod_->coords(d, red);
                // in ker dy?
                for (int i = 0; i < dym->rows && ok; ++i) {
                    Rat s(0);
                    for (int j = 0; j < dym->cols; ++j) s += dym->at(i, j) * rc[size_t(j)];
                    if (!surfw::is_zero(s)) {
                        ok = false;
                        detail = "vector_red(" + mono.str(R) + ") not in ker dy";
                    }
                }
                // brute-force oracle: keep only the i = 0 block of the
                // decomposition
                std::vector<Rat> vc = mod_->coords(d, v);
                std::vector<Rat> coords(size_t(B->cols));
                for (int i = 0; i < Binv->rows; ++i) {
                    Rat s(0);
                    for (int j = 0; j < Binv->cols; ++j) s += Binv->at(i, j) * vc[size_t(j)];
                    coords[size_t(i)] = s;
                }
                for (int i = kdim; i < int(coords.size()); ++i) coords[size_t(i)] = 0;
                std::vector<Rat> brute(size_t(B->rows));
                for (int i = 0; i < B->rows; ++i) {
                    Rat s(0);
                    for (int j = 0; j < B->cols; ++j) s += B->at(i, j) * coords[size_t(j)];
                    brute[size_t(i)] = s;
                }
                if (ok && brute != rc) {
                    ok = false;
                    detail = "vector_red(" + mono.str(R) + ") disagrees with the decomposition oracle";
                }
                ++checked;
            }
        }
        rep.cases.push_back({"weyl vector_red oracle", checked == 0 ? "SKIP" : (ok ? "OK" : "FAIL"), detail});
    }

    // op_red output commutes with y and dy
    {
        std::vector<std::pair<std::string, ModOp>> samples = {
            {"red(tD_{1,1}(1))", op_red(tilde_d(1, 1, R.one()))},
            {"red(psi_2(1))", op_red(d_shadow(0, 2, R.one()))},
            {"red(tD_{2,0}(1))", op_red(tilde_d(2, 0, R.one()))},
        };
        for (auto& [nm, G] : samples) {
            rep.cases.push_back(compare_case("weyl [" + nm + ", y] = 0",
                                             mod_equal(mod_bracket(G, y), mod_zero(mod_, G.shift() + 2))));
            rep.cases.push_back(compare_case("weyl [" + nm + ", dy] = 0",
                                             mod_equal(mod_bracket(G, dy), mod_zero(mod_, G.shift() - 2))));
        }
    }
    return rep;
}

SuiteReport Degeneration::tilde_suite()
{
    const RingSpec& R = mod_->ring();
    SuiteReport rep;
    rep.suite = "tildeD";
    rep.instance = R.name();
    RingElement w = RingElement::basis(R, R.omega_index);

    // X(1) = 1
    {
        auto m = x_op().matrix(0);
        bool ok = m && m->rows == 1 && m->cols == 1 && m->at(0, 0) == Rat(1);
        rep.cases.push_back({"tildeD X(1) = 1", ok ? "OK" : "FAIL", ok ? "" : "X on the vacuum slice"});
    }
    // X invertibility per slice
    {
        std::ostringstream detail;
        int singular = 0, checked = 0;
        for (int d = 0; d <= mod_->window(); ++d) {
            if (mod_->dim(d) == 0) continue;
            ++checked;
            if (!x_inv().matrix(d)) {
                ++singular;
                detail << " slice " << d << " singular;";
            }
        }
        rep.cases.push_back({"tildeD X slice-invertibility",
                             singular == 0 ? "OK" : "SKIP",
                             singular == 0 ? "all " + std::to_string(checked) + " slices invertible"
                                           : detail.str()});
    }
    // polynomiality of u^{-m} D_{m,n}: theta and u defined
    {
        std::ostringstream detail;
        int missing = 0, checked = 0;
        for (int d = 0; d <= mod_->window(); ++d) {
            if (mod_->dim(d) == 0) continue;
            ++checked;
            if (!u_op().matrix(d)) {
                ++missing;
                detail << " slice " << d << ": polynomiality not observed;";
            }
        }
        rep.cases.push_back({"tildeD u-construction", missing == 0 ? "OK" : "SKIP",
                             missing == 0 ? "theta/u defined on all " + std::to_string(checked) + " slices"
                                          : detail.str()});
    }
    // tD_{0,n} = psi_n
    for (int n = 0; n <= 2; ++n) {
        std::ostringstream id;
        id << "tildeD tD_{0," << n << "}(1) = D_{0," << n << "}(1)";
        rep.cases.push_back(compare_case(id.str(), mod_equal(tilde_d(0, n, R.one()), d_shadow(0, n, R.one()))));
    }
    // tq_1(w) = 0 by the choice of u
    rep.cases.push_back(compare_case("tildeD tq_1(w) = 0",
                                     mod_equal(tilde_d(1, 0, w), mod_zero(mod_, 0))));
    return rep;
}

SuiteReport Degeneration::sl2_suite()
{
    const RingSpec& R = mod_->ring();
    SuiteReport rep;
    rep.suite = "sl2";
    rep.instance = R.name();
    ModOp e = mod_scale(Rat(1, 2), op_red(tilde_d(0, 2, R.one())));
    ModOp h = mod_scale(Rat(-1), op_red(tilde_d(1, 1, R.one())));
    ModOp f = mod_scale(Rat(1, 2), op_red(tilde_d(2, 0, R.one())));

    rep.cases.push_back(compare_case("sl2 [h,e] = 2e", mod_equal(mod_bracket(h, e), mod_scale(Rat(2), e))));
    rep.cases.push_back(compare_case("sl2 [h,f] = -2f", mod_equal(mod_bracket(h, f), mod_scale(Rat(-2), f))));
    rep.cases.push_back(compare_case("sl2 [e,f] = h", mod_equal(mod_bracket(e, f), h)));

    // h has an integral spectrum; remember it for the multiplicity report
    std::map<int, std::map<int, int>> mults; // degree -> eigenvalue -> multiplicity
    {
        bool ok = true;
        int checked = 0;
        std::ostringstream detail;
        for (int d = 0; d <= mod_->window(); ++d) {
            if (mod_->dim(d) == 0) continue;
            auto hm = h.matrix(d);
            if (!hm) {
                detail << " slice " << d << " skipped;";
                continue;
            }
            std::string err;
            auto eig = integer_eigen(*hm, 4 * mod_->window() + 16, err);
            if (!eig) {
                ok = false;
                detail << " slice " << d << ": " << err << ";";
                continue;
            }
            ++checked;
            for (size_t i = 0; i < eig->values.size(); ++i)
                mults[d][eig->values[i]] = eig->spaces[i].cols;
        }
        rep.cases.push_back({"sl2 h integral spectrum", checked == 0 ? "SKIP" : (ok ? "OK" : "FAIL"),
                             detail.str()});
    }
    // psi_k(xi) P_i subset P_{i+k}
    {
        bool ok = true;
        int checked = 0;
        std::ostringstream detail;
        for (int k = 0; k <= 2 && ok; ++k)
            for (int b = 0; b < R.dim() && ok; ++b) {
                ModOp psi = d_shadow(0, k, RingElement::basis(R, b));
                for (int d = 0; d <= mod_->window(); ++d) {
                    if (mod_->dim(d) == 0) continue;
                    int dt = d + psi.shift();
                    if (dt < 0 || dt > mod_->window() || mod_->dim(dt) == 0) continue;
                    auto hm = h.matrix(d);
                    auto hmt = h.matrix(dt);
                    auto pm = psi.matrix(d);
                    if (!hm || !hmt || !pm) continue;
                    std::string err;
                    auto es = integer_eigen(*hm, 4 * mod_->window() + 16, err);
                    auto et = integer_eigen(*hmt, 4 * mod_->window() + 16, err);
                    if (!es || !et) continue;
                    ++checked;
                    // P_i = span of eigenvalues <= i
                    for (size_t vi = 0; vi < es->values.size(); ++vi) {
                        int i = es->values[vi];
                        Mat Pi(hm->rows, 0);
                        for (size_t q = 0; q < es->values.size(); ++q)
                            if (es->values[q] <= i) Pi = space_sum(Pi, es->spaces[q]);
                        Mat img = column_space(*pm * Pi);
                        Mat target(hmt->rows, 0);
                        for (size_t q = 0; q < et->values.size(); ++q)
                            if (et->values[q] <= i + k) target = space_sum(target, et->spaces[q]);
                        if (!space_leq(img, target)) {
                            ok = false;
                            std::ostringstream os;
                            os << "psi_" << k << "(" << R.basis(b).name << ") P_" << i
                               << " escapes P_" << i + k << " at slice " << d;
                            detail << os.str();
                            break;
                        }
                    }
                }
            }
        rep.cases.push_back({"sl2 psi_k P_i subset P_{i+k}",
                             checked == 0 ? "SKIP" : (ok ? "OK" : "FAIL"), detail.str()});
    }

    nlohmann::json j;
    j["instance"] = R.name();
    j["window"] = mod_->window();
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& [d, table] : mults) {
        nlohmann::json entry;
        entry["degree"] = d;
        nlohmann::json evs = nlohmann::json::object();
        for (const auto& [lam, mult] : table) evs[std::to_string(lam)] = mult;
        entry["h_multiplicities"] = evs;
        degrees.push_back(entry);
    }
    j["slices"] = degrees;
    hmult_json_ = j.dump(2);
    return rep;
}

SuiteReport Degeneration::reduced_suite()
{
    const RingSpec& R = mod_->ring();
    SuiteReport rep;
    rep.suite = "reduced";
    rep.instance = R.name();
    RingElement w = RingElement::basis(R, R.omega_index);
    Rat rinv = Rat(1) / opt_.r;

    auto td = [&](int m, int n, const RingElement& xi) { return tilde_d(m, n, xi); };
    auto tdred = [&](int m, int n, const RingElement& xi) { return op_red(tilde_d(m, n, xi)); };

    for (int variant = 0; variant < 2; ++variant) {
        auto D = [&](int m, int n, const RingElement& xi) { return variant ? tdred(m, n, xi) : td(m, n, xi); };
        const char* tag = variant ? "reduced-twice" : "reduced";
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; m + n <= 3; ++n)
                for (int m2 = 0; m2 <= 3; ++m2)
                    for (int n2 = 0; m2 + n2 <= 3; ++n2) {
                        if (m + n == 0 && m2 + n2 == 0) continue;
                        for (int b1 = 0; b1 < R.dim(); ++b1)
                            for (int b2 = 0; b2 < R.dim(); ++b2) {
                                RingElement pi = RingElement::basis(R, b1);
                                RingElement pi2 = RingElement::basis(R, b2);
                                bool anti = R.basis(b1).odd && R.basis(b2).odd;
                                ModOp lhs = mod_bracket(D(m, n, pi), D(m2, n2, pi2), anti);
                                ModOp rhs = mod_zero(mod_, lhs.shift());
                                long c0 = long(n) * m2 - long(m) * n2;
                                RingElement prod = R.mul(pi, pi2);
                                if (c0 != 0 && !prod.is_zero() && m + m2 >= 1)
                                    rhs = mod_add(rhs, mod_scale(Rat(c0), D(m + m2 - 1, n + n2 - 1, prod)));
                                RingElement piw = R.mul(pi, w);
                                RingElement pi2w = R.mul(pi2, w);
                                if (n >= 1 && m2 >= 1 && !piw.is_zero()) {
                                    Rat c = -rinv * Rat(long(n) * m2);
                                    ModOp t1 = mod_compose(D(m, n - 1, piw), D(m2 - 1, n2, pi2));
                                    rhs = mod_add(rhs, mod_scale(c, t1));
                                    if (variant && !pi2w.is_zero()) {
                                        ModOp t2 = mod_compose(D(m2 - 1, n2, pi2w), D(m, n - 1, pi));
                                        rhs = mod_add(rhs, mod_scale(c, t2));
                                    }
                                }
                                if (m >= 1 && n2 >= 1 && !pi2w.is_zero()) {
                                    Rat c = rinv * Rat(long(m) * n2);
                                    ModOp t3 = mod_compose(D(m2, n2 - 1, pi2w), D(m - 1, n, pi));
                                    rhs = mod_add(rhs, mod_scale(c, t3));
                                    if (variant && !piw.is_zero()) {
                                        ModOp t4 = mod_compose(D(m - 1, n, piw), D(m2, n2 - 1, pi2));
                                        rhs = mod_add(rhs, mod_scale(c, t4));
                                    }
                                }
                                std::ostringstream id;
                                id << tag << " [tD_{" << m << "," << n << "}(" << R.basis(b1).name
                                   << "), tD_{" << m2 << "," << n2 << "}(" << R.basis(b2).name << ")]";
                                rep.cases.push_back(compare_case(id.str(), mod_equal(lhs, rhs)));
                            }
                    }
    }
    return rep;
}

namespace {

/// Operator on V[x] with the x-degree capped: one big matrix per source
/// slice over the basis (x-power, module basis vector).
struct XPolyOp {
    int shift = 0;
    int xraise = 0; ///< how far the operator can push the x-degree up
    std::map<int, std::optional<Mat>> mats;
};

} // namespace

SuiteReport Degeneration::unred_suite()
{
    const RingSpec& R = mod_->ring();
    SuiteReport rep;
    rep.suite = "unred";
    rep.instance = R.name();
    RingElement w = RingElement::basis(R, R.omega_index);
    int xcap = 8;

    // tD_{m,n}(pi)_unred = sum_{i,j} x^i C(m,i) C(n,j) (-r)^{-j}
    //                      tD_{m-i,n-j}(pi w^j) d_x^j
    auto build = [&](int m, int n, const RingElement& pi) {
        XPolyOp out;
        out.shift = 2 * n - 2 + pi.degree().value_or(0);
        out.xraise = m;
        for (int d = 0; d <= mod_->window(); ++d) {
            int dt = d + out.shift;
            int rows = mod_->dim(dt) * (xcap + 1);
            int cols = mod_->dim(d) * (xcap + 1);
            if (dt < 0 || dt > mod_->window()) {
                out.mats[d] = Mat(std::max(rows, 0), cols);
                continue;
            }
            Mat big(rows, cols);
            bool ok = true;
            for (int i = 0; i <= m && ok; ++i)
                for (int j = 0; j <= std::min(n, 1) && ok; ++j) {
                    RingElement arg = pi;
                    for (int q = 0; q < j; ++q) arg = R.mul(arg, w);
                    if (arg.is_zero()) continue;
                    ModOp piece = tilde_d(m - i, n - j, arg);
                    auto pm = piece.matrix(d);
                    if (!pm) { ok = false; break; }
                    Rat base = binomial(m, unsigned(i)) * binomial(n, unsigned(j)) *
                               rat_pow(Rat(-1) / opt_.r, unsigned(j));
                    for (int a = 0; a <= xcap; ++a) {
                        int aout = a + i - j;
                        if (aout < 0 || aout > xcap) continue;
                        Rat fall(1);
                        for (int q = 0; q < j; ++q) fall *= Rat(a - q);
                        if (surfw::is_zero(fall)) continue;
                        Rat c = base * fall;
                        for (int r0 = 0; r0 < pm->rows; ++r0)
                            for (int c0 = 0; c0 < pm->cols; ++c0) {
                                const Rat& v = pm->at(r0, c0);
                                if (surfw::is_zero(v)) continue;
                                big.at(aout * pm->rows + r0, a * pm->cols + c0) += c * v;
                            }
                    }
                }
            if (ok)
                out.mats[d] = big;
            else
                out.mats[d] = std::nullopt;
        }
        return out;
    };

    auto compare = [&](int m, int n, int b1, int m2, int n2, int b2) {
        RingElement pi = RingElement::basis(R, b1);
        RingElement pi2 = RingElement::basis(R, b2);
        XPolyOp A = build(m, n, pi), B = build(m2, n2, pi2);
        long c0 = long(m2) * n - long(m) * n2;
        RingElement prod = R.mul(pi, pi2);
        std::optional<XPolyOp> Rhs;
        if (c0 != 0 && !prod.is_zero() && m + m2 >= 1 && n + n2 >= 1) Rhs = build(m + m2 - 1, n + n2 - 1, prod);
        bool anti = R.basis(b1).odd && R.basis(b2).odd;
        int checked = 0, skipped = 0;
        bool equal = true;
        std::string detail;
        int xsafe = xcap - (m + m2); // columns whose x-expansion stays inside the cap
        for (int d = 0; d <= mod_->window(); ++d) {
            int dB = d + B.shift, dA = d + A.shift;
            if (dB < 0 || dB > mod_->window() || dA < 0 || dA > mod_->window()) { ++skipped; continue; }
            int dAB = d + A.shift + B.shift;
            if (dAB < 0 || dAB > mod_->window()) { ++skipped; continue; }
            auto mB = B.mats[d], mA_afterB = A.mats[dB], mA = A.mats[d], mB_afterA = B.mats[dA];
            if (!mB || !mA_afterB || !mA || !mB_afterA) { ++skipped; continue; }
            Mat ab = *mA_afterB * *mB;
            Mat ba = *mB_afterA * *mA;
            Mat lhs = anti ? ab + ba : ab - ba;
            Mat rhs(lhs.rows, lhs.cols);
            if (Rhs) {
                auto mr = Rhs->mats[d];
                if (!mr) { ++skipped; continue; }
                rhs = *mr * Rat(c0);
            }
            ++checked;
            int bdim = mod_->dim(d);
            int tdim = mod_->dim(dAB);
            for (int a = 0; a <= xsafe && equal; ++a)
                for (int aout = 0; aout <= xcap && equal; ++aout)
                    for (int r0 = 0; r0 < tdim && equal; ++r0)
                        for (int c0i = 0; c0i < bdim && equal; ++c0i) {
                            const Rat& l = lhs.at(aout * tdim + r0, a * bdim + c0i);
                            const Rat& rr = rhs.at(aout * tdim + r0, a * bdim + c0i);
                            if (l != rr) {
                                equal = false;
                                std::ostringstream os;
                                os << "slice " << d << " x^" << a << " -> x^" << aout;
                                detail = os.str();
                            }
                        }
        }
        std::ostringstream id;
        id << "unred [tD_{" << m << "," << n << "}(" << R.basis(b1).name << ")u, tD_{" << m2 << "," << n2
           << "}(" << R.basis(b2).name << ")u]";
        if (checked == 0) return CaseResult{id.str(), "SKIP", "no sound slices"};
        return CaseResult{id.str(), equal ? "OK" : "FAIL", detail};
    };

    for (int m = 0; m <= 2; ++m)
        for (int n = 0; m + n <= 3; ++n)
            for (int m2 = 0; m2 <= 2; ++m2)
                for (int n2 = 0; m2 + n2 <= 3; ++n2) {
                    if (m + n == 0 && m2 + n2 == 0) continue;
                    for (int b1 = 0; b1 < R.dim(); ++b1)
                        for (int b2 = 0; b2 < R.dim(); ++b2)
                            rep.cases.push_back(compare(m, n, b1, m2, n2, b2));
                }
    return rep;
}

SuiteReport Degeneration::parabolic_suite()
{
    const RingSpec& R = mod_->ring();
    if (R.parabolic_rank < 1)
        throw std::invalid_argument("parabolic_suite: parabolic instance required");
    SuiteReport rep;
    rep.suite = "parabolic";
    rep.instance = R.name();
    int rk = R.parabolic_rank;
    HeckeContext ctx(mod_->ring_ptr());

    // eigenvalue class elements p_i (i = 1..rk; the last one is w - sum)
    auto p_elem = [&](int i) {
        if (i < rk) return RingElement::basis(R, R.parabolic_indices[size_t(i - 1)]);
        RingElement e = RingElement::basis(R, R.omega_index);
        for (int k2 = 1; k2 < rk; ++k2) e -= RingElement::basis(R, R.parabolic_indices[size_t(k2 - 1)]);
        return e;
    };
    auto y_node = [&](int i) { return op_mul(ctx.psi_class(1, p_elem(i))); };
    OpPtr t0 = op_t(1, R.one()); // geometric T_0(1)
    auto x_node = [&](int i) { return op_bracket(y_node(i), t0); };

    int ncap = 4;
    // X_i = T_1(p_i) (free-level consequence of Q0)
    for (int i = 1; i <= rk; ++i) {
        ModOp lhs = mod_free(mod_, ev_, x_node(i));
        ModOp rhs = mod_free(mod_, ev_, op_t(1, p_elem(i)));
        rep.cases.push_back(compare_case("parabolic X_" + std::to_string(i) + " = geomT_0(p_i)",
                                         mod_equal(lhs, rhs)));
    }
    // [X_i, y_j] = 0
    for (int i = 1; i <= rk; ++i)
        for (int j = 1; j <= rk; ++j) {
            OpPtr node = op_bracket(x_node(i), y_node(j));
            rep.cases.push_back(compare_case(
                "parabolic [X_" + std::to_string(i) + ", y_" + std::to_string(j) + "] = 0",
                mod_equal(mod_free(mod_, ev_, node), mod_zero(mod_, node->shift))));
        }
    // [psi_n(1), X_i] = n y_i^{n-1} X_i
    for (int n = 1; n <= ncap; ++n)
        for (int i = 1; i <= rk; ++i) {
            OpPtr lhs = op_bracket(op_psi(n, R.one()), x_node(i));
            OpPtr rhs = x_node(i);
            for (int k2 = 0; k2 < n - 1; ++k2) rhs = op_compose(y_node(i), rhs);
            rep.cases.push_back(compare_case(
                "parabolic [psi_" + std::to_string(n) + "(1), X_" + std::to_string(i) + "]",
                mod_equal(mod_free(mod_, ev_, lhs), mod_scale(Rat(n), mod_free(mod_, ev_, rhs)))));
        }
    // [psi_n(pi), X_i] = 0 for positive-degree pi
    for (int n = 1; n <= ncap; ++n)
        for (int b = 1; b < R.dim(); ++b)
            for (int i = 1; i <= rk; ++i) {
                OpPtr node = op_bracket(op_psi(n, RingElement::basis(R, b)), x_node(i));
                rep.cases.push_back(compare_case(
                    "parabolic [psi_" + std::to_string(n) + "(" + R.basis(b).name + "), X_" +
                        std::to_string(i) + "] = 0",
                    mod_equal(mod_free(mod_, ev_, node), mod_zero(mod_, node->shift))));
            }
    // geomT_n(p_i) = y_i^n X_i
    for (int n = 0; n <= ncap; ++n)
        for (int i = 1; i <= rk; ++i) {
            OpPtr lhs = op_t(n + 1, p_elem(i));
            OpPtr rhs = x_node(i);
            for (int k2 = 0; k2 < n; ++k2) rhs = op_compose(y_node(i), rhs);
            rep.cases.push_back(compare_case(
                "parabolic geomT_" + std::to_string(n) + "(p_" + std::to_string(i) + ") = y^n X",
                mod_equal(mod_free(mod_, ev_, lhs), mod_free(mod_, ev_, rhs))));
        }
    // sum_i y_i^n = psi_n(w) as specialized elements
    for (int n = 1; n <= ncap; ++n) {
        FockElement lhs(&R);
        for (int i = 1; i <= rk; ++i) {
            FockElement y = ctx.psi_class(1, p_elem(i));
            FockElement pw = FockElement::one(R);
            for (int k2 = 0; k2 < n; ++k2) pw = fock_mul(pw, y);
            lhs += pw;
        }
        FockElement rhs = ctx.psi_class(n, RingElement::basis(R, R.omega_index));
        bool ok = mod_->specialize(lhs) == mod_->specialize(rhs);
        rep.cases.push_back({"parabolic sum y_i^" + std::to_string(n) + " = psi_" + std::to_string(n) + "(w)",
                             ok ? "OK" : "FAIL", ""});
    }
    return rep;
}

std::string Degeneration::h_multiplicities_json()
{
    if (hmult_json_.empty()) sl2_suite();
    return hmult_json_;
}

} // namespace surfw
