#include "surfw/series.hpp"

#include <array>
#include <sstream>

namespace surfw {

OmegaTable::OmegaTable(HeckeContext& ctx, bool plus_t, int pmax)
{
    const RingSpec& R = ctx.ring();
    Rat tsign(plus_t ? 1 : -1);
    RingElement c1s = R.c1() * tsign;          // +-c1
    RingElement one = R.one();
    // S_P(z) = (2z +- c1) S_{P-1} - (z^2 +- c1 z + c2) S_{P-2}
    rows_.resize(size_t(pmax) + 1);
    rows_[0] = {one};
    if (pmax >= 1) rows_[1] = {c1s, one * Rat(2)};
    for (int P = 2; P <= pmax; ++P) {
        std::vector<RingElement> cur(size_t(P) + 1, RingElement::zero(R));
        const auto& s1 = rows_[size_t(P - 1)];
        for (int k = 0; k < int(s1.size()); ++k) {
            cur[size_t(k + 1)] += s1[size_t(k)] * Rat(2);
            cur[size_t(k)] += R.mul(c1s, s1[size_t(k)]);
        }
        const auto& s2 = rows_[size_t(P - 2)];
        for (int k = 0; k < int(s2.size()); ++k) {
            cur[size_t(k + 2)] -= s2[size_t(k)];
            cur[size_t(k + 1)] -= R.mul(c1s, s2[size_t(k)]);
            cur[size_t(k)] -= R.mul(R.c2(), s2[size_t(k)]);
        }
        rows_[size_t(P)] = std::move(cur);
    }
}

std::map<std::pair<int, int>, RingElement> omega_series(HeckeContext& ctx, int order)
{
    if (order < 2) throw std::invalid_argument("omega_series: order must be >= 2");
    OmegaTable table(ctx, false, order - 2);
    std::map<std::pair<int, int>, RingElement> out;
    for (int P = 0; P + 2 <= order; ++P)
        for (int A = 0; A <= P; ++A) {
            const RingElement& w = table.row(P)[size_t(A)];
            if (!w.is_zero()) out[{2 + P, -A}] = w;
        }
    return out;
}

namespace {

struct PairLeg {
    int i, j;       // slots, 1-based, i < j in region order
    RingElement W;  // Omega coefficient; the pair stands for Delta * W
};

/// Recursive expansion of the remaining diagonal pairs followed by slot-wise
/// h evaluation.  Slot contents are plain ring elements; all diagonal legs
/// must be even (asserted by the callers for the supported instances).
FockElement expand_pairs(HeckeContext& ctx, std::vector<int>& k, std::vector<RingElement>& content,
                         std::vector<bool>& alive, const std::vector<PairLeg>& pairs, size_t idx,
                         const Rat& coeff, bool& defined)
{
    const RingSpec& R = ctx.ring();
    if (idx == pairs.size()) {
        FockElement acc = FockElement::one(R) * coeff;
        for (int s = int(k.size()); s >= 1 && !acc.is_zero(); --s) {
            if (!alive[size_t(s - 1)]) continue;
            const RingElement& c = content[size_t(s - 1)];
            if (c.is_zero()) return FockElement(&R);
            if (k[size_t(s - 1)] == 0 && !R.compact()) {
                defined = false;
                return FockElement(&R);
            }
            acc = fock_mul(acc, ctx.h_eval(k[size_t(s - 1)], c));
        }
        return acc;
    }
    const PairLeg& p = pairs[idx];
    FockElement out(&R);
    TensorElement D = R.tensor_mul_left(R.diag(), p.W);
    for (int a = 0; a < R.dim(); ++a)
        for (int b = 0; b < R.dim(); ++b) {
            const Rat& c = D.at(a, b);
            if (surfw::is_zero(c)) continue;
            if (R.basis(a).odd || R.basis(b).odd)
                throw std::runtime_error("series engine: odd diagonal components unsupported");
            RingElement save_i = content[size_t(p.i - 1)];
            RingElement save_j = content[size_t(p.j - 1)];
            content[size_t(p.i - 1)] = R.mul(save_i, RingElement::basis(R, a));
            content[size_t(p.j - 1)] = R.mul(save_j, RingElement::basis(R, b));
            out += expand_pairs(ctx, k, content, alive, pairs, idx + 1, coeff * c, defined);
            content[size_t(p.i - 1)] = save_i;
            content[size_t(p.j - 1)] = save_j;
            if (!defined) return out;
        }
    return out;
}

/// Contract h_0 slots through the diagonal (open instances), then expand.
FockElement eval_term(HeckeContext& ctx, std::vector<int> k, std::vector<RingElement> content,
                      std::vector<PairLeg> pairs, Rat coeff, bool& defined)
{
    const RingSpec& R = ctx.ring();
    std::vector<bool> alive(k.size(), true);
    if (!R.compact()) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (int s = 1; s <= int(k.size()); ++s) {
                if (!alive[size_t(s - 1)] || k[size_t(s - 1)] != 0) continue;
                if (content[size_t(s - 1)].is_zero()) return FockElement(&R);
                // find a pair touching slot s
                int found = -1;
                for (size_t q = 0; q < pairs.size(); ++q)
                    if (pairs[q].i == s || pairs[q].j == s) { found = int(q); break; }
                if (found < 0) {
                    defined = false; // needs a bare eps
                    return FockElement(&R);
                }
                PairLeg p = pairs[size_t(found)];
                int t = (p.i == s) ? p.j : p.i;
                // sum_{Delta} eps(alpha * B) beta = B for even legs:
                // slot t picks up W * content_s, remaining pairs re-anchor to t
                content[size_t(t - 1)] = R.mul(content[size_t(t - 1)], R.mul(p.W, content[size_t(s - 1)]));
                pairs.erase(pairs.begin() + found);
                for (auto& q : pairs) {
                    if (q.i == s) q.i = t;
                    if (q.j == s) q.j = t;
                    if (q.i > q.j) std::swap(q.i, q.j);
                }
                alive[size_t(s - 1)] = false;
                progress = true;
            }
        }
    }
    return expand_pairs(ctx, k, content, alive, pairs, 0, coeff, defined);
}

} // namespace

OracleValue oracle_coefficient(HeckeContext& ctx, const std::vector<int>& xi_basis,
                               const std::vector<int>& a, bool force_contraction)
{
    const RingSpec& R = ctx.ring();
    int len = int(xi_basis.size());
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 1; i <= len; ++i)
        for (int j = i + 1; j <= len; ++j) all_pairs.emplace_back(i, j);

    int pcap = 0;
    for (int s = 0; s < len; ++s) pcap += std::max(a[size_t(s)], 0);
    pcap += 2 * len;
    OmegaTable table(ctx, false, pcap);

    OracleValue result;
    result.value = FockElement(&R);
    bool defined = true;

    int npairs = int(all_pairs.size());
    for (int mask = 0; mask < (1 << npairs); ++mask) {
        std::vector<std::pair<int, int>> chosen;
        for (int q = 0; q < npairs; ++q)
            if (mask & (1 << q)) chosen.push_back(all_pairs[size_t(q)]);
        // enumerate (P, A) per chosen pair; slot budgets prune the search
        std::vector<PairLeg> legs(chosen.size());
        std::vector<int> kadd(size_t(len), 0), ksub(size_t(len), 0);
        Rat sign((chosen.size() % 2) ? -1 : 1); // each pair carries -Delta Omega
        std::function<void(size_t)> rec = [&](size_t idx) {
            if (!defined) return;
            if (idx == chosen.size()) {
                std::vector<int> k(size_t(len), 0);
                for (int s = 0; s < len; ++s) {
                    k[size_t(s)] = a[size_t(s)] + kadd[size_t(s)] - ksub[size_t(s)];
                    if (k[size_t(s)] < 0) return;
                }
                std::vector<RingElement> content;
                for (int s = 0; s < len; ++s)
                    content.push_back(RingElement::basis(R, xi_basis[size_t(s)]));
                bool def = true;
                FockElement v = (force_contraction || !R.compact())
                                    ? eval_term(ctx, k, content, legs, sign, def)
                                    : [&]() {
                                          std::vector<bool> alive(size_t(len), true);
                                          return expand_pairs(ctx, k, content, alive, legs, 0, sign, def);
                                      }();
                if (!def) { defined = false; return; }
                result.value += v;
                return;
            }
            auto [i, j] = chosen[size_t(idx)];
            // incoming A for slot i is final (pairs are sorted lexicographically)
            int budget_i = a[size_t(i - 1)] + kadd[size_t(i - 1)] - ksub[size_t(i - 1)];
            for (int P = 0; 2 + P <= budget_i; ++P) {
                const auto& row = table.row(P);
                for (int A = 0; A <= P; ++A) {
                    const RingElement& W = row[size_t(A)];
                    if (W.is_zero()) continue;
                    legs[idx] = {i, j, W};
                    ksub[size_t(i - 1)] += 2 + P;
                    kadd[size_t(j - 1)] += A;
                    rec(idx + 1);
                    ksub[size_t(i - 1)] -= 2 + P;
                    kadd[size_t(j - 1)] -= A;
                    if (!defined) return;
                }
            }
        };
        rec(0);
        if (!defined) break;
    }
    result.defined = defined;
    return result;
}

SuiteReport oracle_report(std::shared_ptr<const RingSpec> ring, const SweepOptions& opt)
{
    const RingSpec& R = *ring;
    int t0 = R.compact() ? -1 : 1; // lowest index compared
    struct Tuple {
        std::vector<int> xs;
        std::vector<int> as;
    };
    std::vector<Tuple> tuples;
    for (int len = 2; len <= 3; ++len) {
        std::vector<int> xs(size_t(len), 0), as(size_t(len), 0);
        std::function<void(int)> recx = [&](int s) {
            if (s == len) {
                std::function<void(int, int)> reca = [&](int t, int sum) {
                    if (t == len) {
                        tuples.push_back({xs, as});
                        return;
                    }
                    for (int v = t0; sum + std::max(v, 0) <= opt.order; ++v) {
                        as[size_t(t)] = v;
                        reca(t + 1, sum + std::max(v, 0));
                    }
                };
                reca(0, 0);
                return;
            }
            for (int b = 0; b < R.dim(); ++b) {
                xs[size_t(s)] = b;
                recx(s + 1);
            }
        };
        recx(0);
    }

    SuiteReport report;
    report.suite = "oracle";
    report.instance = R.name();
    report.cases.resize(tuples.size());
    int jobs = opt.jobs > 0 ? opt.jobs : default_jobs();
    std::vector<std::unique_ptr<HeckeContext>> workers;
    for (int w = 0; w < std::max(1, std::min(jobs, int(tuples.size()))); ++w)
        workers.push_back(std::make_unique<HeckeContext>(ring));
    parallel_tasks(jobs, int(tuples.size()), [&](int w, int i) {
        HeckeContext& ctx = *workers[size_t(w)];
        const Tuple& t = tuples[size_t(i)];
        std::ostringstream id;
        id << "oracle len=" << t.xs.size();
        for (size_t s = t.xs.size(); s-- > 0;)
            id << " T_" << t.as[s] << "(" << R.basis(t.xs[s]).name << ")";
        OracleValue oracle = oracle_coefficient(ctx, t.xs, t.as);
        if (!oracle.defined) {
            report.cases[size_t(i)] = {id.str(), "SKIP", "coefficient needs eps on open instance"};
            return;
        }
        FockElement iterated = FockElement::one(R);
        for (size_t s = 0; s < t.xs.size(); ++s)
            iterated = ctx.T_apply(t.as[s], RingElement::basis(R, t.xs[s]), iterated);
        FockElement diff = oracle.value - iterated;
        if (diff.is_zero())
            report.cases[size_t(i)] = {id.str(), "OK", ""};
        else
            report.cases[size_t(i)] = {id.str(), "FAIL", "oracle " + oracle.value.str() + " vs iterated " + iterated.str()};
    });
    return report;
}

namespace {

/// Sparse H^{x3}-valued Laurent series in x1, x2, x3.
struct Tensor3Series {
    struct Key {
        std::array<int, 3> e;
        std::array<int, 3> b;
        bool operator<(const Key& o) const
        {
            if (e != o.e) return e < o.e;
            return b < o.b;
        }
    };
    std::map<Key, Rat> terms;

    void add(const Key& k, const Rat& c)
    {
        if (surfw::is_zero(c)) return;
        auto it = terms.find(k);
        if (it == terms.end()) terms.emplace(k, c);
        else {
            it->second += c;
            if (surfw::is_zero(it->second)) terms.erase(it);
        }
    }
};

struct Window {
    std::array<int, 3> hi;
    std::array<int, 3> lo;
    bool inside(const std::array<int, 3>& e) const
    {
        for (int v = 0; v < 3; ++v)
            if (e[size_t(v)] > hi[size_t(v)] || e[size_t(v)] < lo[size_t(v)]) return false;
        return true;
    }
};

Tensor3Series t3_mul(const RingSpec& R, const Tensor3Series& A, const Tensor3Series& B, const Window& w)
{
    Tensor3Series out;
    for (const auto& [ka, ca] : A.terms)
        for (const auto& [kb, cb] : B.terms) {
            std::array<int, 3> e{ka.e[0] + kb.e[0], ka.e[1] + kb.e[1], ka.e[2] + kb.e[2]};
            if (!w.inside(e)) continue;
            // slotwise products; all inserted content is even, so no signs
            std::array<const RingElement*, 3> prods{};
            RingElement p0 = R.mul_basis(ka.b[0], kb.b[0]);
            RingElement p1 = R.mul_basis(ka.b[1], kb.b[1]);
            RingElement p2 = R.mul_basis(ka.b[2], kb.b[2]);
            (void)prods;
            Rat c = ca * cb;
            for (int i0 = 0; i0 < R.dim(); ++i0) {
                if (surfw::is_zero(p0[i0])) continue;
                for (int i1 = 0; i1 < R.dim(); ++i1) {
                    if (surfw::is_zero(p1[i1])) continue;
                    for (int i2 = 0; i2 < R.dim(); ++i2) {
                        if (surfw::is_zero(p2[i2])) continue;
                        out.add({e, {i0, i1, i2}}, c * p0[i0] * p1[i1] * p2[i2]);
                    }
                }
            }
        }
    return out;
}

/// (1 - Delta_{ab} Omega(x_a, x_b)) expanded for the fixed region
/// |x1| << |x2| << |x3|.
Tensor3Series omega_factor(HeckeContext& ctx, const OmegaTable& minus, const OmegaTable& plus, int a,
                           int b, const Window& w)
{
    const RingSpec& R = ctx.ring();
    Tensor3Series out;
    out.add({{0, 0, 0}, {0, 0, 0}}, Rat(1));
    int small = std::min(a, b), big = std::max(a, b);
    const OmegaTable& table = (a < b) ? minus : plus;
    for (int P = 0; P <= table.pmax(); ++P) {
        if (2 + P > w.hi[size_t(small - 1)]) break;
        for (int A = 0; A <= P; ++A) {
            const RingElement& W = table.row(P)[size_t(A)];
            if (W.is_zero()) continue;
            TensorElement D = R.tensor_mul_left(R.diag(), W);
            for (int x = 0; x < R.dim(); ++x)
                for (int y = 0; y < R.dim(); ++y) {
                    const Rat& c = D.at(x, y);
                    if (surfw::is_zero(c)) continue;
                    if (R.basis(x).odd || R.basis(y).odd)
                        throw std::runtime_error("series engine: odd diagonal components unsupported");
                    std::array<int, 3> e{0, 0, 0};
                    e[size_t(small - 1)] = 2 + P;
                    e[size_t(big - 1)] = -A;
                    std::array<int, 3> bs{0, 0, 0};
                    // legs of Delta_{ab}: first leg to slot a, second to slot b
                    bs[size_t(a - 1)] = x;
                    bs[size_t(b - 1)] = y;
                    out.add({e, bs}, -c);
                }
        }
    }
    return out;
}

} // namespace

SuiteReport cubic_report(std::shared_ptr<const RingSpec> ring, const SweepOptions& opt)
{
    auto ctx = HeckeContext(ring);
    const RingSpec& R = *ring;
    int N = opt.order;

    // expansion caps: positive x1 powers come only from the (1,*) pairs,
    // positive x2 powers only from (2,3); one x^{-1} multiplier floats around
    Window w;
    w.hi = {N + 4, 2 * N + 8, 2};
    w.lo = {-(3 * N + 14), -(3 * N + 14), -(3 * N + 14)};
    int pmax = 2 * N + 10;
    OmegaTable minus(ctx, false, pmax);
    OmegaTable plus(ctx, true, pmax);

    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    // (1 - s12)(1 + s13) = e + s13 - s12 - s12 s13
    struct TauTerm { int perm[3]; int sign; };
    const TauTerm taus[4] = {
        {{0, 1, 2}, 1},
        {{2, 1, 0}, 1},   // s13
        {{1, 0, 2}, -1},  // s12
        {{2, 0, 1}, -1},  // s12 s13: 1->3, 2->1, 3->2
    };

    Tensor3Series acc;
    for (const auto& prow : perms) {
        for (const auto& tau : taus) {
            int rho[3];
            for (int i = 0; i < 3; ++i) rho[i] = prow[tau.perm[i]]; // rho = pi o tau
            // product over base pairs (1,2),(2,3),(1,3) of (1 - Delta Omega)
            Tensor3Series prod;
            prod.add({{0, 0, 0}, {0, 0, 0}}, Rat(1));
            const int base_pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
            for (const auto& bp : base_pairs) {
                Tensor3Series f = omega_factor(ctx, minus, plus, rho[bp[0]] + 1, rho[bp[1]] + 1, w);
                prod = t3_mul(R, prod, f, w);
            }
            // multiply by x_{pi(1)}^{-1} and the tau sign
            int var = prow[0];
            for (const auto& [k, c] : prod.terms) {
                Tensor3Series::Key nk = k;
                nk.e[size_t(var)] -= 1;
                acc.add(nk, c * Rat(tau.sign));
            }
        }
    }

    SuiteReport report;
    report.suite = "cubic";
    report.instance = R.name();
    // verified window: all exponents within [-N, N]
    int bad = 0;
    std::string first_bad;
    for (const auto& [k, c] : acc.terms) {
        bool in = true;
        for (int v = 0; v < 3; ++v)
            if (k.e[size_t(v)] > N || k.e[size_t(v)] < -N) in = false;
        if (!in) continue;
        ++bad;
        if (first_bad.empty()) {
            std::ostringstream os;
            os << "x1^" << k.e[0] << " x2^" << k.e[1] << " x3^" << k.e[2] << " (" << R.basis(k.b[0]).name
               << "," << R.basis(k.b[1]).name << "," << R.basis(k.b[2]).name << ") = " << rat_str(c);
            first_bad = os.str();
        }
    }
    std::ostringstream id;
    id << "cubic K'=0 order<=" << N;
    report.cases.push_back({id.str(), bad == 0 ? "OK" : "FAIL",
                            bad == 0 ? "" : std::to_string(bad) + " nonzero coefficients, e.g. " + first_bad});

    // the S3 symmetrizer identity sum_pi pi x1^{-1} (1-s12)(1+s13) =
    // sum_pi pi (x1^{-1} - 2 x2^{-1} + x3^{-1}) on plain monomials
    {
        bool ok = true;
        std::string detail;
        for (int e1 = 0; e1 <= 2 && ok; ++e1)
            for (int e2 = 0; e2 <= 2 && ok; ++e2)
                for (int e3 = 0; e3 <= 2 && ok; ++e3) {
                    std::map<std::array<int, 3>, Rat> lhs, rhs;
                    int mono[3] = {e1, e2, e3};
                    for (const auto& prow : perms) {
                        for (const auto& tau : taus) {
                            int rho[3];
                            for (int i = 0; i < 3; ++i) rho[i] = prow[tau.perm[i]];
                            std::array<int, 3> e{0, 0, 0};
                            for (int i = 0; i < 3; ++i) e[size_t(rho[i])] = mono[i];
                            e[size_t(prow[0])] -= 1;
                            lhs[e] += Rat(tau.sign);
                        }
                        for (int v = 0; v < 3; ++v) {
                            std::array<int, 3> e{0, 0, 0};
                            for (int i = 0; i < 3; ++i) e[size_t(prow[i])] = mono[i];
                            e[size_t(prow[v])] -= 1;
                            rhs[e] += Rat(v == 1 ? -2 : 1);
                        }
                    }
                    for (auto& [k, c] : rhs) {
                        auto it = lhs.find(k);
                        Rat l = (it == lhs.end()) ? Rat(0) : it->second;
                        if (l != c) { ok = false; detail = "mismatch on a monomial"; }
                    }
                    for (auto& [k, c] : lhs) {
                        if (!rhs.count(k) && !surfw::is_zero(c)) { ok = false; detail = "extra term"; }
                    }
                }
        report.cases.push_back({"cubic symmetrizer-identity", ok ? "OK" : "FAIL", detail});
    }
    return report;
}

} // namespace surfw
