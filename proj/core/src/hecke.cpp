#include "surfw/hecke.hpp"

#include <limits>
#include <stdexcept>

namespace surfw {

void ExtendedElement::add(const Key& k, const Rat& c)
{
    if (surfw::is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (surfw::is_zero(it->second)) terms_.erase(it);
    }
}

ExtendedElement& ExtendedElement::operator+=(const ExtendedElement& o)
{
    if (!ring_) ring_ = o.ring();
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

HeckeContext::HeckeContext(std::shared_ptr<const RingSpec> ring) : ring_(std::move(ring)) {}

const RingElement& HeckeContext::todd(int k)
{
    while (int(todd_.size()) <= k) todd_.push_back(ring_->eval_cpoly(todd_cpoly(int(todd_.size()))));
    return todd_[size_t(k)];
}

const std::vector<RingElement>& HeckeContext::dd(int n)
{
    while (int(dd_.size()) <= n) {
        int m = int(dd_.size());
        if (m < 1)
            dd_.push_back({RingElement::zero(*ring_)});
        else
            dd_.push_back(ring_->divided_difference(m));
    }
    return dd_[size_t(n)];
}

const HeckeContext::DiagExpansion& HeckeContext::diag_expansion(int k, int b)
{
    auto key = std::make_pair(k, b);
    auto it = diag_.find(key);
    if (it != diag_.end()) return it->second;
    DiagExpansion out;
    if (k <= 1) {
        out.push_back({{b}, Rat(1)});
    } else {
        // (f g)(xi) = (f (x) g)(Delta xi): split the last slot off
        TensorElement d = ring_->diagonal_mul(RingElement::basis(*ring_, b));
        for (int i = 0; i < ring_->dim(); ++i)
            for (int j = 0; j < ring_->dim(); ++j) {
                const Rat& c = d.at(i, j);
                if (surfw::is_zero(c)) continue;
                for (const auto& [tuple, tc] : diag_expansion(k - 1, i)) {
                    std::vector<int> full = tuple;
                    full.push_back(j);
                    out.push_back({std::move(full), c * tc});
                }
            }
    }
    return diag_.emplace(key, std::move(out)).first->second;
}

FockElement HeckeContext::eval_symfunc(const SymFunc& f, const RingElement& xi)
{
    FockElement out(ring_.get());
    for (const auto& [lam, coef] : f) {
        if (lam.empty()) {
            // 1(xi) = eps(xi); hard error on open rings
            out += FockElement::one(*ring_) * (coef * ring_->aug(xi));
            continue;
        }
        int len = int(lam.size());
        for (int b = 0; b < ring_->dim(); ++b) {
            if (surfw::is_zero(xi[b])) continue;
            for (const auto& [tuple, tc] : diag_expansion(len, b)) {
                FockElement term = FockElement::one(*ring_) * (coef * xi[b] * tc);
                for (int s = 0; s < len && !term.is_zero(); ++s)
                    term = fock_mul(term, FockElement::generator(
                                              *ring_, lam[size_t(s)],
                                              RingElement::basis(*ring_, tuple[size_t(s)])));
                out += term;
            }
        }
    }
    return out;
}

FockElement HeckeContext::h_eval(int n, const RingElement& xi)
{
    if (n < 0) return FockElement(ring_.get());
    FockElement out(ring_.get());
    for (int b = 0; b < ring_->dim(); ++b) {
        if (surfw::is_zero(xi[b])) continue;
        auto key = std::make_pair(n, b);
        auto it = heval_.find(key);
        if (it == heval_.end()) {
            FockElement v = eval_symfunc(h_to_p(n), RingElement::basis(*ring_, b));
            it = heval_.emplace(key, std::move(v)).first;
        }
        out += it->second * xi[b];
    }
    return out;
}

FockElement HeckeContext::psi_class(int n, const RingElement& xi)
{
    FockElement out(ring_.get());
    for (int b = 0; b < ring_->dim(); ++b) {
        if (surfw::is_zero(xi[b])) continue;
        auto key = std::make_pair(n, b);
        auto it = psi_.find(key);
        if (it == psi_.end()) {
            FockElement v(ring_.get());
            Rat nf = factorial(unsigned(n));
            for (int m = 1; m <= n + 1; ++m) {
                RingElement arg = ring_->mul(todd(n + 1 - m), RingElement::basis(*ring_, b));
                if (arg.is_zero()) continue;
                v += FockElement::generator(*ring_, m, arg) * (nf / factorial(unsigned(m)));
            }
            it = psi_.emplace(key, std::move(v)).first;
        }
        out += it->second * xi[b];
    }
    return out;
}

const ExtendedElement& HeckeContext::R_hom(const FockMonomial& m)
{
    auto it = rmemo_.find(m);
    if (it != rmemo_.end()) return it->second;

    // expand prod_i (p_{n_i}(b_i) - DD_{n_i}(u) b_i) over subsets, right to left
    ExtendedElement out(ring_.get());
    struct Frame {
        std::vector<std::uint32_t> kept; // reversed order
        std::map<int, RingElement> hu;   // u-power -> H element
        int odd_kept = 0;
        int sign = 1;
    };
    const auto& gens = m.gens();
    std::vector<Frame> stack;
    {
        Frame f;
        f.hu[0] = ring_->one();
        stack.push_back(std::move(f));
    }
    for (size_t idx = gens.size(); idx-- > 0;) {
        Generator g = Generator::unpack(gens[idx]);
        bool godd = ring_->basis(g.b).odd;
        const auto& ddpoly = dd(g.n);
        std::vector<Frame> next;
        next.reserve(stack.size() * 2);
        for (const Frame& f : stack) {
            // keep the generator
            Frame keep = f;
            keep.kept.push_back(gens[idx]);
            if (godd) keep.odd_kept += 1;
            next.push_back(std::move(keep));
            // take the correction -DD_n(u) b, multiplied from the left
            Frame corr = f;
            bool any = false;
            std::map<int, RingElement> hu;
            for (int k = 0; k < int(ddpoly.size()); ++k) {
                RingElement coef = ring_->mul(ddpoly[size_t(k)], RingElement::basis(*ring_, g.b));
                if (coef.is_zero()) continue;
                for (const auto& [k2, h2] : f.hu) {
                    RingElement prod = ring_->mul(coef, h2);
                    if (prod.is_zero()) continue;
                    auto itp = hu.find(k + k2);
                    if (itp == hu.end()) hu.emplace(k + k2, prod);
                    else itp->second += prod;
                    any = true;
                }
            }
            if (!any) continue;
            corr.hu = std::move(hu);
            corr.sign = f.sign * (((godd ? 1 : 0) * f.odd_kept) % 2 ? -1 : 1) * -1;
            next.push_back(std::move(corr));
        }
        stack = std::move(next);
    }
    for (const Frame& f : stack) {
        std::vector<std::uint32_t> fw(f.kept.rbegin(), f.kept.rend());
        FockMonomial mono(std::move(fw));
        for (const auto& [k, h] : f.hu)
            for (int b = 0; b < ring_->dim(); ++b)
                if (!surfw::is_zero(h[b]))
                    out.add({mono, b, k}, h[b] * Rat(f.sign));
    }
    return rmemo_.emplace(m, std::move(out)).first->second;
}

ExtendedElement HeckeContext::R_hom(const FockElement& f)
{
    ExtendedElement out(ring_.get());
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [k, v] : R_hom(m).terms()) out.add(k, v * c);
    }
    return out;
}

FockElement HeckeContext::Q_map(const ExtendedElement& e)
{
    FockElement out(ring_.get());
    for (const auto& [k, c] : e.terms()) {
        if (k.upow < 0) continue;
        RingElement eta = RingElement::basis(*ring_, k.b);
        if (k.upow == 0 && !ring_->compact())
            throw std::runtime_error("Q_map: u^0 term on open instance '" + ring_->name() + "'");
        FockElement h = h_eval(k.upow, eta);
        FockElement mono(ring_.get());
        mono.add(k.mono, c);
        out += fock_mul(mono, h);
    }
    return out;
}

FockElement HeckeContext::T_apply_mono(int n, int xi_basis, const FockMonomial& m)
{
    auto key = std::make_tuple(n, xi_basis, m);
    auto it = tmemo_.find(key);
    if (it != tmemo_.end()) return it->second;
    const RingSpec& R = *ring_;
    bool xi_odd = R.basis(xi_basis).odd;
    RingElement xi = RingElement::basis(R, xi_basis);
    FockElement out(&R);
    for (const auto& [k, c] : R_hom(m).terms()) {
        int power = n + k.upow;
        if (power < 0) continue;
        RingElement eta = R.mul(xi, RingElement::basis(R, k.b));
        if (eta.is_zero()) continue;
        Rat coef = c;
        if (xi_odd && k.mono.odd(R)) coef = -coef; // xi moves past the Fock part
        if (power == 0) {
            if (!R.compact())
                throw std::runtime_error("T_apply: h_0 needed on open instance '" + R.name() + "'");
            FockElement mono(&R);
            mono.add(k.mono, coef * R.aug(eta));
            out += mono;
        } else {
            FockElement mono(&R);
            mono.add(k.mono, coef);
            out += fock_mul(mono, h_eval(power, eta));
        }
    }
    return tmemo_.emplace(std::move(key), std::move(out)).first->second;
}

FockElement HeckeContext::T_apply(int n, const RingElement& xi, const FockElement& f)
{
    FockElement out(ring_.get());
    for (int b = 0; b < ring_->dim(); ++b) {
        if (surfw::is_zero(xi[b])) continue;
        for (const auto& [m, c] : f.terms()) out += T_apply_mono(n, b, m) * (xi[b] * c);
    }
    return out;
}

FockElement HeckeContext::psi_apply(int n, const RingElement& xi, const FockElement& f)
{
    return fock_mul(psi_class(n, xi), f);
}

} // namespace surfw
