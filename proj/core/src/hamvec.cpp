#include "surfw/hamvec.hpp"

#include <sstream>
#include <stdexcept>

namespace surfw {

HamElement HamElement::basis(int m, int n)
{
    HamElement e;
    e.add(m, n, Rat(1));
    return e;
}

void HamElement::add(int m, int n, const Rat& c)
{
    if (m < 0 || n < 0) return;       // outside the polynomial algebra
    if (m == 0 && n == 0) return;     // V_{0,0} is the zero field
    if (surfw::is_zero(c)) return;
    auto key = std::make_pair(m, n);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (surfw::is_zero(it->second)) terms_.erase(it);
    }
}

HamElement& HamElement::operator+=(const HamElement& o)
{
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

HamElement HamElement::operator*(const Rat& c) const
{
    HamElement out;
    for (const auto& [k, v] : terms_) out.add(k.first, k.second, v * c);
    return out;
}

std::string HamElement::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != Rat(1)) os << rat_str(c) << "*";
        os << "V(" << k.first << "," << k.second << ")";
    }
    return os.str();
}

HamElement h2_bracket(const HamElement& a, const HamElement& b)
{
    HamElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            long coef = long(kb.first) * ka.second - long(ka.first) * kb.second; // m'n - mn'
            if (coef == 0) continue;
            out.add(ka.first + kb.first - 1, ka.second + kb.second - 1, ca * cb * Rat(coef));
        }
    return out;
}

HamElement parse_ham(const std::string& text)
{
    size_t pos = text.find('V');
    if (pos == std::string::npos) throw std::invalid_argument("expected V(m,n): " + text);
    size_t open = text.find('(', pos);
    size_t comma = text.find(',', open);
    size_t close = text.find(')', comma);
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("expected V(m,n): " + text);
    int m = std::stoi(text.substr(open + 1, comma - open - 1));
    int n = std::stoi(text.substr(comma + 1, close - comma - 1));
    if (m < 0 || n < 0) throw std::invalid_argument("V indices must be >= 0");
    return HamElement::basis(m, n);
}

void PolyDiffOp::add(const std::vector<int>& mono, int var, const Rat& c)
{
    if (surfw::is_zero(c)) return;
    for (auto& t : terms)
        if (t.var == var && t.mono == mono) {
            t.coef += c;
            if (surfw::is_zero(t.coef)) {
                t = terms.back();
                terms.pop_back();
            }
            return;
        }
    terms.push_back({mono, var, c});
}

bool PolyDiffOp::operator==(const PolyDiffOp& o) const
{
    PolyDiffOp diff = diffop_sub(*this, o);
    return diff.is_zero();
}

PolyDiffOp diffop_sub(const PolyDiffOp& A, const PolyDiffOp& B)
{
    PolyDiffOp out;
    out.nvars = std::max(A.nvars, B.nvars);
    for (const auto& t : A.terms) out.add(t.mono, t.var, t.coef);
    for (const auto& t : B.terms) out.add(t.mono, t.var, -t.coef);
    return out;
}

Poly apply_diffop(const PolyDiffOp& op, const Poly& f)
{
    Poly out;
    for (const auto& t : op.terms)
        for (const auto& [mono, c] : f) {
            int e = mono[size_t(t.var)];
            if (e == 0) continue;
            std::vector<int> m = mono;
            m[size_t(t.var)] -= 1;
            for (size_t v = 0; v < m.size(); ++v) m[v] += t.mono[v];
            Rat& slot = out[m];
            slot += t.coef * c * Rat(e);
            if (surfw::is_zero(slot)) out.erase(m);
        }
    return out;
}

PolyDiffOp diffop_bracket(const PolyDiffOp& A, const PolyDiffOp& B)
{
    // [f d_u, g d_v] = f (d_u g) d_v - g (d_v f) d_u
    PolyDiffOp out;
    out.nvars = std::max(A.nvars, B.nvars);
    auto compose_into = [&](const PolyDiffOp& P, const PolyDiffOp& Q, const Rat& sign) {
        // P o Q acting on first-order parts: P differentiates Q's coefficient
        for (const auto& tp : P.terms)
            for (const auto& tq : Q.terms) {
                int e = tq.mono[size_t(tp.var)];
                if (e == 0) continue;
                std::vector<int> m = tq.mono;
                m[size_t(tp.var)] -= 1;
                for (size_t v = 0; v < m.size(); ++v) m[v] += tp.mono[v];
                out.add(m, tq.var, sign * tp.coef * tq.coef * Rat(e));
            }
    };
    compose_into(A, B, Rat(1));
    compose_into(B, A, Rat(-1));
    return out;
}

PolyDiffOp vmn_as_diffop(int m, int n, int k)
{
    if (k < 1) throw std::invalid_argument("vmn_as_diffop: k >= 1 required");
    PolyDiffOp out;
    out.nvars = 2 * k;
    for (int i = 0; i < k; ++i) {
        // n y_i^{n-1} x_i^m d/dx_i
        if (n >= 1) {
            std::vector<int> mono(size_t(2 * k), 0);
            mono[size_t(i)] = m;
            mono[size_t(k + i)] = n - 1;
            out.add(mono, i, Rat(n));
        }
        // -m x_i^{m-1} y_i^n d/dy_i
        if (m >= 1) {
            std::vector<int> mono(size_t(2 * k), 0);
            mono[size_t(i)] = m - 1;
            mono[size_t(k + i)] = n;
            out.add(mono, k + i, Rat(-m));
        }
    }
    return out;
}

PolyDiffOp ham_as_diffop(const HamElement& h, int k)
{
    PolyDiffOp out;
    out.nvars = 2 * k;
    for (const auto& [key, c] : h.terms()) {
        PolyDiffOp v = vmn_as_diffop(key.first, key.second, k);
        for (const auto& t : v.terms) out.add(t.mono, t.var, t.coef * c);
    }
    return out;
}

namespace {

std::vector<Poly> monomials_up_to(int nvars, int degree_cap)
{
    std::vector<Poly> out;
    std::vector<int> cur(size_t(nvars), 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars) {
            Poly p;
            p[cur] = 1;
            out.push_back(std::move(p));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[size_t(v)] = e;
            rec(v + 1, left - e);
        }
        cur[size_t(v)] = 0;
    };
    rec(0, degree_cap);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly out = a;
    for (const auto& [m, c] : b) {
        Rat& slot = out[m];
        slot -= c;
        if (surfw::is_zero(slot)) out.erase(m);
    }
    return out;
}

} // namespace

SuiteReport h2_jacobi(const H2Options& opt)
{
    SuiteReport rep;
    rep.suite = "h2-jacobi";
    rep.instance = "H2";
    int cap = opt.index_cap;
    bool ok = true;
    std::string detail;
    long count = 0;
    for (int m1 = 0; m1 <= cap && ok; ++m1)
        for (int n1 = 0; n1 <= cap && ok; ++n1)
            for (int m2 = 0; m2 <= cap && ok; ++m2)
                for (int n2 = 0; n2 <= cap && ok; ++n2)
                    for (int m3 = 0; m3 <= cap && ok; ++m3)
                        for (int n3 = 0; n3 <= cap && ok; ++n3) {
                            HamElement a = HamElement::basis(m1, n1);
                            HamElement b = HamElement::basis(m2, n2);
                            HamElement c = HamElement::basis(m3, n3);
                            HamElement j = h2_bracket(a, h2_bracket(b, c));
                            j += h2_bracket(b, h2_bracket(c, a));
                            j += h2_bracket(c, h2_bracket(a, b));
                            ++count;
                            if (!j.is_zero()) {
                                ok = false;
                                std::ostringstream os;
                                os << "triple (" << m1 << "," << n1 << ")(" << m2 << "," << n2 << ")("
                                   << m3 << "," << n3 << ") -> " << j.str();
                                detail = os.str();
                            }
                        }
    rep.cases.push_back({"h2 jacobi indices<=" + std::to_string(cap) + " (" + std::to_string(count) +
                             " triples)",
                         ok ? "OK" : "FAIL", detail});
    return rep;
}

SuiteReport h2_realization(const H2Options& opt)
{
    SuiteReport rep;
    rep.suite = "h2-realization";
    rep.instance = "H2";
    int cap = opt.index_cap;
    auto basis1 = monomials_up_to(2, opt.degree_cap);
    bool ok = true;
    std::string detail;
    for (int m1 = 0; m1 <= cap && ok; ++m1)
        for (int n1 = 0; n1 <= cap && ok; ++n1)
            for (int m2 = 0; m2 <= cap && ok; ++m2)
                for (int n2 = 0; n2 <= cap && ok; ++n2) {
                    PolyDiffOp A = vmn_as_diffop(m1, n1, 1);
                    PolyDiffOp B = vmn_as_diffop(m2, n2, 1);
                    PolyDiffOp br = diffop_bracket(A, B);
                    HamElement pred = h2_bracket(HamElement::basis(m1, n1), HamElement::basis(m2, n2));
                    PolyDiffOp want = ham_as_diffop(pred, 1);
                    for (const auto& f : basis1) {
                        Poly lhs = apply_diffop(br, f);
                        Poly rhs = apply_diffop(want, f);
                        if (!poly_sub(lhs, rhs).empty()) {
                            ok = false;
                            std::ostringstream os;
                            os << "V(" << m1 << "," << n1 << "),V(" << m2 << "," << n2 << ")";
                            detail = os.str();
                            break;
                        }
                    }
                }
    rep.cases.push_back({"h2 realization indices<=" + std::to_string(cap) + " deg<=" +
                             std::to_string(opt.degree_cap),
                         ok ? "OK" : "FAIL", detail});
    return rep;
}

SuiteReport h2_equivariance(const H2Options& opt)
{
    SuiteReport rep;
    rep.suite = "h2-equivariance";
    rep.instance = "H2";
    int cap = std::min(opt.index_cap, 3);

    // (a) commutation with variable-pair permutations, k <= 3
    {
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= 3 && ok; ++k) {
            auto monos = monomials_up_to(2 * k, std::min(opt.degree_cap, 5));
            // the swap of pairs 0 and 1
            auto swap_poly = [&](const Poly& f) {
                Poly out;
                for (const auto& [m, c] : f) {
                    std::vector<int> s = m;
                    std::swap(s[0], s[1]);
                    std::swap(s[size_t(k)], s[size_t(k) + 1]);
                    out[s] = c;
                }
                return out;
            };
            for (int m = 0; m <= cap && ok; ++m)
                for (int n = 0; n <= cap && ok; ++n) {
                    PolyDiffOp V = vmn_as_diffop(m, n, k);
                    for (const auto& f : monos) {
                        Poly a = swap_poly(apply_diffop(V, f));
                        Poly b = apply_diffop(V, swap_poly(f));
                        if (!poly_sub(a, b).empty()) {
                            ok = false;
                            detail = "k=" + std::to_string(k) + " V(" + std::to_string(m) + "," +
                                     std::to_string(n) + ")";
                            break;
                        }
                    }
                }
        }
        rep.cases.push_back({"h2 S_n-equivariance k<=3", ok ? "OK" : "FAIL", detail});
    }

    // (b) J_2 preservation: generators (x1-x2), (y1-y2) times monomials;
    // images vanish on the diagonal x1=x2, y1=y2
    {
        bool ok = true;
        std::string detail;
        int k = 2;
        auto monos = monomials_up_to(2 * k, 3);
        auto on_diagonal = [&](const Poly& f) {
            // substitute x2 <- x1, y2 <- y1
            Poly out;
            for (const auto& [m, c] : f) {
                std::vector<int> s{m[0] + m[1], 0, m[2] + m[3], 0};
                Rat& slot = out[s];
                slot += c;
                if (surfw::is_zero(slot)) out.erase(s);
            }
            return out;
        };
        std::vector<Poly> gens(2);
        {
            std::vector<int> e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, f1{0, 0, 1, 0}, f2{0, 0, 0, 1};
            gens[0][e1] = 1;
            gens[0][e2] = -1;
            gens[1][f1] = 1;
            gens[1][f2] = -1;
        }
        // include the Vandermonde-type product (x1-x2)(y1-y2)
        Poly vand;
        for (const auto& [m1, c1] : gens[0])
            for (const auto& [m2, c2] : gens[1]) {
                std::vector<int> m(4);
                for (int i = 0; i < 4; ++i) m[size_t(i)] = m1[size_t(i)] + m2[size_t(i)];
                vand[m] += c1 * c2;
            }
        std::vector<Poly> seeds = gens;
        seeds.push_back(vand);
        for (int m = 0; m <= cap && ok; ++m)
            for (int n = 0; n <= cap && ok; ++n) {
                PolyDiffOp V = vmn_as_diffop(m, n, k);
                for (const auto& g : seeds)
                    for (const auto& mono : monos) {
                        Poly f;
                        for (const auto& [mg, cg] : g)
                            for (const auto& [mm, cm] : mono) {
                                std::vector<int> s(4);
                                for (int i = 0; i < 4; ++i) s[size_t(i)] = mg[size_t(i)] + mm[size_t(i)];
                                f[s] += cg * cm;
                            }
                        Poly img = apply_diffop(V, f);
                        if (!on_diagonal(img).empty()) {
                            ok = false;
                            detail = "V(" + std::to_string(m) + "," + std::to_string(n) + ") escapes J_2";
                            break;
                        }
                    }
            }
        rep.cases.push_back({"h2 J_2 diagonal-vanishing preserved", ok ? "OK" : "FAIL", detail});
    }
    return rep;
}

} // namespace surfw
