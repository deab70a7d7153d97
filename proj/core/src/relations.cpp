#include "surfw/relations.hpp"
#include "surfw/series.hpp"

#include <algorithm>
#include <sstream>

namespace surfw {

std::vector<FockMonomial> test_basis(const RingSpec& ring, int max_degree, int max_weight)
{
    // generators ordered by packed code; multiset enumeration with the odd
    // ones squarefree
    std::vector<std::uint32_t> gens;
    for (int n = 1; n <= max_weight; ++n)
        for (int b = 0; b < ring.dim(); ++b) gens.push_back(Generator::pack(n, b));
    std::sort(gens.begin(), gens.end());

    std::vector<FockMonomial> out;
    std::vector<std::uint32_t> cur;
    std::function<void(size_t, int)> rec = [&](size_t from, int weight_left) {
        FockMonomial m(cur);
        if (m.degree(ring) <= max_degree) out.push_back(m);
        for (size_t i = from; i < gens.size(); ++i) {
            Generator g = Generator::unpack(gens[i]);
            if (g.n > weight_left) continue;
            bool odd = ring.basis(g.b).odd;
            if (odd && !cur.empty() && cur.back() == gens[i]) continue;
            cur.push_back(gens[i]);
            rec(odd ? i + 1 : i, weight_left - g.n);
            cur.pop_back();
        }
    };
    rec(0, max_weight);
    std::sort(out.begin(), out.end(), [](const FockMonomial& a, const FockMonomial& b) { return a < b; });
    return out;
}

int koszul_reorder_sign(const std::vector<int>& src, const std::vector<int>& dst,
                        const std::vector<bool>& odd)
{
    // count odd-odd pairs whose relative order differs between src and dst
    auto pos = [](const std::vector<int>& v, int x) {
        return int(std::find(v.begin(), v.end(), x) - v.begin());
    };
    int inv = 0;
    for (size_t a = 0; a < src.size(); ++a)
        for (size_t b = a + 1; b < src.size(); ++b) {
            int x = src[a], y = src[b];
            if (!odd[size_t(x)] || !odd[size_t(y)]) continue;
            if (pos(dst, x) > pos(dst, y)) ++inv;
        }
    return (inv % 2) ? -1 : 1;
}

namespace {

FockElement mono_elem(const RingSpec& ring, const FockMonomial& m)
{
    FockElement f(&ring);
    f.add(m, Rat(1));
    return f;
}

int basis_parity(const RingSpec& ring, int b) { return ring.basis(b).odd ? 1 : 0; }

// graded commutator of two T's
FockElement t_comm(HeckeContext& ctx, int m, const RingElement& a, int pa, int n,
                   const RingElement& b, int pb, const FockElement& v)
{
    FockElement lhs = ctx.T_apply(m, a, ctx.T_apply(n, b, v));
    FockElement rhs = ctx.T_apply(n, b, ctx.T_apply(m, a, v));
    return (pa && pb) ? lhs + rhs : lhs - rhs;
}

struct CaseSpec {
    std::string id;
    std::function<bool(HeckeContext&, const std::vector<FockMonomial>&, std::string&)> run;
};

std::string describe_diff(const FockElement& diff, const FockMonomial& v, const RingSpec& ring)
{
    std::ostringstream os;
    os << "input " << v.str(ring) << " -> residual " << diff.str();
    return os.str();
}

} // namespace

SuiteReport check_relation(std::shared_ptr<const RingSpec> ring, const std::string& relation,
                           const SweepOptions& opt)
{
    if (relation == "oracle") return oracle_report(ring, opt);
    if (relation == "cubic") return cubic_report(ring, opt);

    const RingSpec& R = *ring;
    const int dim = R.dim();
    const int mi = opt.max_index;
    const int t0 = R.compact() ? 0 : 1; // lowest well-defined T index
    std::vector<FockMonomial> basis = test_basis(R, opt.max_degree, opt.max_weight);

    std::vector<CaseSpec> cases;
    auto bname = [&](int b) { return R.basis(b).name; };

    if (relation == "Q0") {
        for (int m = 0; m <= mi; ++m)
            for (int n = t0; n <= t0 + mi; ++n)
                for (int be = 0; be < dim; ++be)
                    for (int bx = 0; bx < dim; ++bx) {
                        std::ostringstream id;
                        id << "Q0 m=" << m << " n=" << n << " eta=" << bname(be) << " xi=" << bname(bx)
                           << " deg<=" << opt.max_degree;
                        int pm = basis_parity(R, be), pn = basis_parity(R, bx);
                        cases.push_back({id.str(), [=, &R](HeckeContext& ctx, const std::vector<FockMonomial>& vs,
                                                           std::string& detail) {
                            RingElement eta = RingElement::basis(R, be);
                            RingElement xi = RingElement::basis(R, bx);
                            RingElement etaxi = R.mul(eta, xi);
                            for (const auto& v : vs) {
                                FockElement vv = mono_elem(R, v);
                                FockElement lhs = ctx.psi_apply(m, eta, ctx.T_apply(n, xi, vv));
                                FockElement rhs0 = ctx.T_apply(n, xi, ctx.psi_apply(m, eta, vv));
                                FockElement lhsc = (pm && pn) ? lhs + rhs0 : lhs - rhs0;
                                FockElement rhs = (m == 0 || etaxi.is_zero())
                                                      ? FockElement(&R)
                                                      : ctx.T_apply(m + n - 1, etaxi, vv) * Rat(m);
                                FockElement diff = lhsc - rhs;
                                if (!diff.is_zero()) {
                                    detail = describe_diff(diff, v, R);
                                    return false;
                                }
                            }
                            return true;
                        }});
                    }
    } else if (relation == "Q1") {
        for (int m = t0; m <= t0 + mi; ++m)
            for (int n = t0; n <= t0 + mi; ++n)
                for (int b1 = 0; b1 < dim; ++b1)
                    for (int b2 = 0; b2 < dim; ++b2)
                        for (int b3 = 0; b3 < dim; ++b3) {
                            std::ostringstream id;
                            id << "Q1 m=" << m << " n=" << n << " xi=" << bname(b1) << " xi'=" << bname(b2)
                               << " xi''=" << bname(b3) << " deg<=" << opt.max_degree;
                            cases.push_back({id.str(), [=, &R](HeckeContext& ctx,
                                                               const std::vector<FockMonomial>& vs,
                                                               std::string& detail) {
                                RingElement x1 = RingElement::basis(R, b1);
                                RingElement x2 = RingElement::basis(R, b2);
                                RingElement x3 = RingElement::basis(R, b3);
                                RingElement x12 = R.mul(x1, x2);
                                RingElement x23 = R.mul(x2, x3);
                                int p1 = basis_parity(R, b1), p2 = basis_parity(R, b2), p3 = basis_parity(R, b3);
                                for (const auto& v : vs) {
                                    FockElement vv = mono_elem(R, v);
                                    FockElement lhs = t_comm(ctx, m, x12, (p1 + p2) % 2, n, x3, p3, vv);
                                    FockElement rhs = t_comm(ctx, m, x1, p1, n, x23, (p2 + p3) % 2, vv);
                                    FockElement diff = lhs - rhs;
                                    if (!diff.is_zero()) {
                                        detail = describe_diff(diff, v, R);
                                        return false;
                                    }
                                }
                                return true;
                            }});
                        }
    } else if (relation == "Q2") {
        for (int m = t0; m <= t0 + mi; ++m)
            for (int n = t0; n <= t0 + mi; ++n)
                for (int b1 = 0; b1 < dim; ++b1)
                    for (int b2 = 0; b2 < dim; ++b2) {
                        std::ostringstream id;
                        id << "Q2 m=" << m << " n=" << n << " xi=" << bname(b1) << " xi'=" << bname(b2)
                           << " deg<=" << opt.max_degree;
                        cases.push_back({id.str(), [=, &R](HeckeContext& ctx,
                                                           const std::vector<FockMonomial>& vs,
                                                           std::string& detail) {
                            RingElement xi = RingElement::basis(R, b1);
                            RingElement xip = RingElement::basis(R, b2);
                            int p1 = basis_parity(R, b1), p2 = basis_parity(R, b2);
                            RingElement s2xip = R.mul(R.s2(), xip);
                            // components of s1 * Delta * xi xi'
                            RingElement s1xx = R.mul(R.c1(), R.mul(xi, xip));
                            TensorElement tens = R.diagonal_mul(s1xx);
                            for (const auto& v : vs) {
                                FockElement vv = mono_elem(R, v);
                                FockElement acc(&R);
                                acc += t_comm(ctx, m, xi, p1, n + 3, xip, p2, vv);
                                acc -= t_comm(ctx, m + 1, xi, p1, n + 2, xip, p2, vv) * Rat(3);
                                acc += t_comm(ctx, m + 2, xi, p1, n + 1, xip, p2, vv) * Rat(3);
                                acc -= t_comm(ctx, m + 3, xi, p1, n, xip, p2, vv);
                                if (!s2xip.is_zero()) {
                                    acc -= t_comm(ctx, m, xi, p1, n + 1, s2xip, p2, vv);
                                    acc += t_comm(ctx, m + 1, xi, p1, n, s2xip, p2, vv);
                                }
                                if (!tens.is_zero()) {
                                    // the anticommutator term enters with a minus
                                    // sign; the displayed form in the source
                                    // derivation carries a compensating sign slip
                                    // in its Omega expansion (see README notes)
                                    for (int a = 0; a < R.dim(); ++a)
                                        for (int b = 0; b < R.dim(); ++b) {
                                            const Rat& c = tens.at(a, b);
                                            if (surfw::is_zero(c)) continue;
                                            RingElement ea = RingElement::basis(R, a);
                                            RingElement eb = RingElement::basis(R, b);
                                            int pa = basis_parity(R, a), pb = basis_parity(R, b);
                                            FockElement t1 = ctx.T_apply(m, ea, ctx.T_apply(n, eb, vv));
                                            FockElement t2 = ctx.T_apply(n, eb, ctx.T_apply(m, ea, vv));
                                            FockElement anti = (pa && pb) ? t1 - t2 : t1 + t2;
                                            acc -= anti * c;
                                        }
                                }
                                if (!acc.is_zero()) {
                                    detail = describe_diff(acc, v, R);
                                    return false;
                                }
                            }
                            return true;
                        }});
                    }
    } else if (relation == "Q3") {
        // permutations of S3 acting on (index, argument) pairs
        static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int m1 = t0; m1 <= t0 + mi; ++m1)
            for (int m2 = t0; m2 <= t0 + mi; ++m2)
                for (int m3 = t0; m3 <= t0 + mi; ++m3)
                    for (int b1 = 0; b1 < dim; ++b1)
                        for (int b2 = 0; b2 < dim; ++b2)
                            for (int b3 = 0; b3 < dim; ++b3) {
                                std::ostringstream id;
                                id << "Q3 m1=" << m1 << " m2=" << m2 << " m3=" << m3 << " xi1=" << bname(b1)
                                   << " xi2=" << bname(b2) << " xi3=" << bname(b3) << " deg<=" << opt.max_degree;
                                cases.push_back({id.str(), [=, &R](HeckeContext& ctx,
                                                                   const std::vector<FockMonomial>& vs,
                                                                   std::string& detail) {
                                    int ms[3] = {m1, m2, m3};
                                    int bs[3] = {b1, b2, b3};
                                    std::vector<bool> odd(4, false);
                                    for (int i = 0; i < 3; ++i) odd[size_t(i + 1)] = R.basis(bs[i]).odd;
                                    for (const auto& v : vs) {
                                        FockElement vv = mono_elem(R, v);
                                        FockElement acc(&R);
                                        for (const auto& p : perms) {
                                            // written order (xi_{p(3)}, xi_{p(2)}, xi_{p(1)})
                                            std::vector<int> src{3, 2, 1};
                                            std::vector<int> dst{p[2] + 1, p[1] + 1, p[0] + 1};
                                            int sgn = koszul_reorder_sign(src, dst, odd);
                                            int a3 = ms[p[2]], a2 = ms[p[1]], a1 = ms[p[0]] + 1;
                                            RingElement z3 = RingElement::basis(R, bs[p[2]]);
                                            RingElement z2 = RingElement::basis(R, bs[p[1]]);
                                            RingElement z1 = RingElement::basis(R, bs[p[0]]);
                                            int q3 = basis_parity(R, bs[p[2]]);
                                            int q2 = basis_parity(R, bs[p[1]]);
                                            int q1 = basis_parity(R, bs[p[0]]);
                                            // inner bracket w = [T_{a2}(z2), T_{a1}(z1)]
                                            FockElement w = t_comm(ctx, a2, z2, q2, a1, z1, q1, vv);
                                            FockElement outer = ctx.T_apply(a3, z3, w);
                                            // [T3, w](v) = T3(w(v)) -+ w(T3(v))
                                            FockElement w2 = t_comm(ctx, a2, z2, q2, a1, z1, q1,
                                                                    ctx.T_apply(a3, z3, vv));
                                            bool anti = q3 && ((q1 + q2) % 2);
                                            FockElement br = anti ? outer + w2 : outer - w2;
                                            acc += br * Rat(sgn);
                                        }
                                        if (!acc.is_zero()) {
                                            detail = describe_diff(acc, v, R);
                                            return false;
                                        }
                                    }
                                    return true;
                                }});
                            }
    } else {
        throw std::invalid_argument("unknown relation: " + relation);
    }

    SuiteReport report;
    report.suite = relation;
    report.instance = R.name();
    report.cases.resize(cases.size());
    int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
    std::vector<std::unique_ptr<HeckeContext>> workers;
    for (int w = 0; w < std::max(1, std::min(jobs, int(cases.size()))); ++w)
        workers.push_back(std::make_unique<HeckeContext>(ring));
    parallel_tasks(jobs, int(cases.size()), [&](int w, int i) {
        std::string detail;
        bool ok = cases[size_t(i)].run(*workers[size_t(w)], basis, detail);
        report.cases[size_t(i)] = {cases[size_t(i)].id, ok ? "OK" : "FAIL", detail};
    });
    return report;
}

} // namespace surfw
