#include "surfw/walg.hpp"

#include <sstream>

namespace surfw {

namespace {

struct DTable {
    // d[m][n][basis]
    std::vector<std::vector<std::vector<OpPtr>>> d;
    const OpPtr& at(int m, int n, int b) const { return d[size_t(m)][size_t(n)][size_t(b)]; }
};

DTable build_dtable(const RingSpec& R, int mmax, int nmax, int t_base)
{
    DTable t;
    t.d.resize(size_t(mmax) + 1);
    for (int m = 0; m <= mmax; ++m) {
        t.d[size_t(m)].resize(size_t(nmax) + 1);
        for (int n = 0; n <= nmax; ++n)
            for (int b = 0; b < R.dim(); ++b)
                t.d[size_t(m)][size_t(n)].push_back(op_d(m, n, RingElement::basis(R, b), t_base));
    }
    return t;
}

/// D_{m,n}(xi) for a general ring element via linearity over the basis table.
FockElement d_apply(OpEval& ev, const DTable& t, int m, int n, const RingElement& xi,
                    const FockElement& v)
{
    FockElement out(&ev.ctx().ring());
    for (int b = 0; b < xi.ring()->dim(); ++b)
        if (!surfw::is_zero(xi[b])) out += ev.apply(t.at(m, n, b), v) * xi[b];
    return out;
}

struct WCase {
    std::string id;
    std::function<bool(OpEval&, const std::vector<FockMonomial>&, std::string&)> run;
};

SuiteReport run_cases(std::shared_ptr<const RingSpec> ring, const std::string& suite,
                      std::vector<WCase> cases, const std::vector<FockMonomial>& basis, int jobs)
{
    SuiteReport report;
    report.suite = suite;
    report.instance = ring->name();
    report.cases.resize(cases.size());
    if (jobs <= 0) jobs = default_jobs();
    std::vector<std::unique_ptr<OpEval>> workers;
    for (int w = 0; w < std::max(1, std::min(jobs, int(cases.size()))); ++w)
        workers.push_back(std::make_unique<OpEval>(ring));
    parallel_tasks(jobs, int(cases.size()), [&](int w, int i) {
        std::string detail;
        bool ok = cases[size_t(i)].run(*workers[size_t(w)], basis, detail);
        report.cases[size_t(i)] = {cases[size_t(i)].id, ok ? "OK" : "FAIL", detail};
    });
    return report;
}

} // namespace

SuiteReport check_undeformed(std::shared_ptr<const RingSpec> ring, const WAlgOptions& opt)
{
    const RingSpec& R = *ring;
    if (!(R.s2().is_zero() && R.tensor_mul_left(R.diag(), R.c1()).is_zero()))
        throw std::invalid_argument("check_undeformed: instance is not undeformed (s2, s1*Delta must vanish)");
    int t_base = R.compact() ? 0 : 1;
    int cap = opt.max_index;
    auto table = std::make_shared<DTable>(build_dtable(R, 2 * cap, 2 * cap, t_base));
    std::vector<FockMonomial> basis = test_basis(R, opt.max_degree, opt.max_weight);

    std::vector<WCase> cases;
    for (int m = 0; m <= cap; ++m)
        for (int n = 0; m + n <= cap; ++n)
            for (int m2 = 0; m2 <= cap; ++m2)
                for (int n2 = 0; m2 + n2 <= cap; ++n2) {
                    if (m + n == 0 && m2 + n2 == 0) continue; // D_{0,0} pairs are trivially zero
                    for (int b1 = 0; b1 < R.dim(); ++b1)
                        for (int b2 = 0; b2 < R.dim(); ++b2) {
                            std::ostringstream id;
                            id << "W m=" << m << " n=" << n << " m'=" << m2 << " n'=" << n2
                               << " xi=" << R.basis(b1).name << " eta=" << R.basis(b2).name;
                            cases.push_back({id.str(), [=, &R](OpEval& ev,
                                                               const std::vector<FockMonomial>& vs,
                                                               std::string& detail) {
                                const DTable& t = *table;
                                const OpPtr& D1 = t.at(m, n, b1);
                                const OpPtr& D2 = t.at(m2, n2, b2);
                                bool anti = R.basis(b1).odd && R.basis(b2).odd;
                                long coef = long(n) * m2 - long(m) * n2;
                                RingElement prod = R.mul(RingElement::basis(R, b1), RingElement::basis(R, b2));
                                for (const auto& vm : vs) {
                                    FockElement v(&R);
                                    v.add(vm, Rat(1));
                                    FockElement ab = ev.apply(D1, ev.apply(D2, v));
                                    FockElement ba = ev.apply(D2, ev.apply(D1, v));
                                    FockElement lhs = anti ? ab + ba : ab - ba;
                                    FockElement rhs(&R);
                                    if (coef != 0 && !prod.is_zero())
                                        rhs = d_apply(ev, t, m + m2, n + n2 - 1, prod, v) * Rat(coef);
                                    FockElement diff = lhs - rhs;
                                    if (!diff.is_zero()) {
                                        detail = "input " + vm.str(R) + " -> residual " + diff.str();
                                        return false;
                                    }
                                }
                                return true;
                            }});
                        }
                }
    return run_cases(ring, "undeformed", std::move(cases), basis, opt.jobs);
}

SuiteReport lehn_suite(std::shared_ptr<const RingSpec> ring, const WAlgOptions& opt)
{
    const RingSpec& R = *ring;
    int t_base = R.compact() ? 0 : 1;
    int cap = opt.max_index;
    auto table = std::make_shared<DTable>(build_dtable(R, 2 * cap, 2, t_base));
    std::vector<FockMonomial> basis = test_basis(R, opt.max_degree, opt.max_weight);
    OpPtr dilation = op_scale(Rat(1, 2), op_psi(2, R.one())); // the operator d

    std::vector<WCase> cases;
    auto add_case = [&](std::string id,
                        std::function<bool(OpEval&, const std::vector<FockMonomial>&, std::string&)> run) {
        cases.push_back({std::move(id), std::move(run)});
    };
    for (int m = 0; m <= cap; ++m)
        for (int n = 0; m + n <= cap; ++n)
            for (int b1 = 0; b1 < R.dim(); ++b1)
                for (int b2 = 0; b2 < R.dim(); ++b2) {
                    bool anti = R.basis(b1).odd && R.basis(b2).odd;
                    RingElement prod = R.mul(RingElement::basis(R, b1), RingElement::basis(R, b2));
                    {
                        std::ostringstream id;
                        id << "lehn [q_" << m << "(" << R.basis(b1).name << "), q_" << n << "("
                           << R.basis(b2).name << ")] = 0";
                        add_case(id.str(), [=, &R](OpEval& ev, const std::vector<FockMonomial>& vs,
                                                   std::string& detail) {
                            const DTable& t = *table;
                            for (const auto& vm : vs) {
                                FockElement v(&R);
                                v.add(vm, Rat(1));
                                FockElement ab = ev.apply(t.at(m, 0, b1), ev.apply(t.at(n, 0, b2), v));
                                FockElement ba = ev.apply(t.at(n, 0, b2), ev.apply(t.at(m, 0, b1), v));
                                FockElement diff = anti ? ab + ba : ab - ba;
                                if (!diff.is_zero()) {
                                    detail = "input " + vm.str(R) + " -> residual " + diff.str();
                                    return false;
                                }
                            }
                            return true;
                        });
                    }
                    {
                        std::ostringstream id;
                        id << "lehn [L_" << m << "(" << R.basis(b1).name << "), q_" << n << "("
                           << R.basis(b2).name << ")] = " << n << " q_" << m + n;
                        add_case(id.str(), [=, &R](OpEval& ev, const std::vector<FockMonomial>& vs,
                                                   std::string& detail) {
                            const DTable& t = *table;
                            for (const auto& vm : vs) {
                                FockElement v(&R);
                                v.add(vm, Rat(1));
                                FockElement ab = ev.apply(t.at(m, 1, b1), ev.apply(t.at(n, 0, b2), v));
                                FockElement ba = ev.apply(t.at(n, 0, b2), ev.apply(t.at(m, 1, b1), v));
                                FockElement lhs = anti ? ab + ba : ab - ba;
                                FockElement rhs(&R);
                                if (n != 0 && !prod.is_zero())
                                    rhs = d_apply(ev, t, m + n, 0, prod, v) * Rat(n);
                                FockElement diff = lhs - rhs;
                                if (!diff.is_zero()) {
                                    detail = "input " + vm.str(R) + " -> residual " + diff.str();
                                    return false;
                                }
                            }
                            return true;
                        });
                    }
                    {
                        std::ostringstream id;
                        id << "lehn [L_" << m << "(" << R.basis(b1).name << "), L_" << n << "("
                           << R.basis(b2).name << ")] = " << (n - m) << " L_" << m + n;
                        add_case(id.str(), [=, &R](OpEval& ev, const std::vector<FockMonomial>& vs,
                                                   std::string& detail) {
                            const DTable& t = *table;
                            for (const auto& vm : vs) {
                                FockElement v(&R);
                                v.add(vm, Rat(1));
                                FockElement ab = ev.apply(t.at(m, 1, b1), ev.apply(t.at(n, 1, b2), v));
                                FockElement ba = ev.apply(t.at(n, 1, b2), ev.apply(t.at(m, 1, b1), v));
                                FockElement lhs = anti ? ab + ba : ab - ba;
                                FockElement rhs(&R);
                                if (n != m && !prod.is_zero())
                                    rhs = d_apply(ev, t, m + n, 1, prod, v) * Rat(n - m);
                                FockElement diff = lhs - rhs;
                                if (!diff.is_zero()) {
                                    detail = "input " + vm.str(R) + " -> residual " + diff.str();
                                    return false;
                                }
                            }
                            return true;
                        });
                    }
                }
    for (int m = 0; m <= cap; ++m)
        for (int b1 = 0; b1 < R.dim(); ++b1) {
            std::ostringstream id;
            id << "lehn [d, q_" << m << "(" << R.basis(b1).name << ")] = " << m << " L_" << m;
            add_case(id.str(), [=, &R](OpEval& ev, const std::vector<FockMonomial>& vs, std::string& detail) {
                const DTable& t = *table;
                for (const auto& vm : vs) {
                    FockElement v(&R);
                    v.add(vm, Rat(1));
                    FockElement ab = ev.apply(dilation, ev.apply(t.at(m, 0, b1), v));
                    FockElement ba = ev.apply(t.at(m, 0, b1), ev.apply(dilation, v));
                    FockElement lhs = ab - ba;
                    FockElement rhs(&R);
                    if (m != 0) rhs = ev.apply(t.at(m, 1, b1), v) * Rat(m);
                    FockElement diff = lhs - rhs;
                    if (!diff.is_zero()) {
                        detail = "input " + vm.str(R) + " -> residual " + diff.str();
                        return false;
                    }
                }
                return true;
            });
        }
    return run_cases(ring, "lehn", std::move(cases), basis, opt.jobs);
}

LieWord LieWord::leaf(bool is_t, int index, int basis)
{
    LieWord w;
    w.is_leaf = true;
    w.is_t = is_t;
    w.index = index;
    w.basis = basis;
    return w;
}

LieWord LieWord::bracket(const LieWord& l, const LieWord& r)
{
    LieWord w;
    w.is_leaf = false;
    w.left = std::make_shared<LieWord>(l);
    w.right = std::make_shared<LieWord>(r);
    return w;
}

int LieWord::weight() const
{
    if (is_leaf) return index;
    return left->weight() + right->weight() - 1;
}

int LieWord::t_degree() const
{
    if (is_leaf) return is_t ? 1 : 0;
    return left->t_degree() + right->t_degree();
}

std::string LieWord::str(const RingSpec& ring) const
{
    if (is_leaf) {
        std::ostringstream os;
        os << (is_t ? "T_" : "psi_") << index << "(" << ring.basis(basis).name << ")";
        return os.str();
    }
    return "[" + left->str(ring) + ", " + right->str(ring) + "]";
}

OpPtr LieWord::to_op(const RingSpec& ring, int t_base) const
{
    if (is_leaf) {
        RingElement xi = RingElement::basis(ring, basis);
        return is_t ? op_t(index + t_base, xi) : op_psi(index, xi);
    }
    return op_bracket(left->to_op(ring, t_base), right->to_op(ring, t_base));
}

int LieExpression::weight() const
{
    int w = 0;
    for (const auto& word : words) w += word.weight();
    return w;
}

int LieExpression::t_degree() const
{
    int d = 0;
    for (const auto& word : words) d += word.t_degree();
    return d;
}

std::string LieExpression::str(const RingSpec& ring) const
{
    std::string s;
    for (size_t i = 0; i < words.size(); ++i) {
        if (i) s += " ";
        s += words[i].str(ring);
    }
    return s;
}

OpPtr LieExpression::to_op(const RingSpec& ring, int t_base) const
{
    OpPtr out;
    for (const auto& word : words) {
        OpPtr w = word.to_op(ring, t_base);
        out = out ? op_compose(out, w) : w;
    }
    return out;
}

SuiteReport f_vanishing_probe(std::shared_ptr<const RingSpec> ring, int m, const WAlgOptions& opt)
{
    const RingSpec& R = *ring;
    int t_base = R.compact() ? 0 : 1;
    int idx_max = std::min(opt.max_index, 2);

    // leaves and small bracket words
    std::vector<LieWord> words;
    for (int is_t = 0; is_t <= 1; ++is_t)
        for (int idx = 0; idx <= idx_max; ++idx)
            for (int b = 0; b < R.dim(); ++b) words.push_back(LieWord::leaf(is_t, idx, b));
    size_t nleaves = words.size();
    for (size_t i = 0; i < nleaves; ++i)
        for (size_t j = 0; j < nleaves; ++j) words.push_back(LieWord::bracket(words[i], words[j]));
    size_t depth1_end = words.size();
    for (size_t i = nleaves; i < depth1_end; ++i)
        for (size_t j = 0; j < nleaves; ++j) words.push_back(LieWord::bracket(words[i], words[j]));

    // expressions: single words and products of two words
    std::vector<LieExpression> exprs;
    for (const auto& w : words)
        if (w.t_degree() == m && w.weight() <= -m) exprs.push_back({{w}});
    for (size_t i = 0; i < words.size() && exprs.size() < 400; ++i)
        for (size_t j = i; j < words.size(); ++j) {
            LieExpression e{{words[i], words[j]}};
            if (e.t_degree() == m && e.weight() <= -m) {
                exprs.push_back(e);
                if (exprs.size() >= 400) break;
            }
        }

    std::vector<FockMonomial> basis = test_basis(R, opt.max_degree, opt.max_weight);
    std::vector<WCase> cases;
    for (const auto& e : exprs) {
        std::ostringstream id;
        id << "fprobe deg=" << m << " weight=" << e.weight() << " " << e.str(R);
        cases.push_back({id.str(), [e, &R, t_base](OpEval& ev, const std::vector<FockMonomial>& vs,
                                                   std::string& detail) {
            OpPtr op = e.to_op(R, t_base);
            for (const auto& vm : vs) {
                FockElement v(&R);
                v.add(vm, Rat(1));
                FockElement out = ev.apply(op, v);
                if (!out.is_zero()) {
                    detail = "input " + vm.str(R) + " -> " + out.str();
                    return false;
                }
            }
            return true;
        }});
    }
    if (cases.empty())
        cases.push_back({"fprobe deg=" + std::to_string(m) + " (no expressions in window)",
                         [](OpEval&, const std::vector<FockMonomial>&, std::string&) { return true; }});
    return run_cases(ring, "fprobe", std::move(cases), basis, opt.jobs);
}

} // namespace surfw
