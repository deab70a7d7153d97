#include "surfw/degen.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace surfw {

namespace {

/// inverse Vandermonde on nodes 0..K: poly coefficients from values
std::vector<std::vector<Rat>> vandermonde_inv(int K)
{
    int n = K + 1;
    Mat V(n, n);
    for (int m = 0; m < n; ++m) {
        Rat p(1);
        for (int j = 0; j < n; ++j) {
            V.at(m, j) = p;
            p *= Rat(m);
        }
    }
    auto inv = inverse(V);
    if (!inv) throw std::logic_error("vandermonde_inv: singular");
    std::vector<std::vector<Rat>> w(size_t(n), std::vector<Rat>(size_t(n), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) w[size_t(i)][size_t(m)] = inv->at(i, m);
    return w;
}

} // namespace

std::optional<EigenDecomp> integer_eigen(const Mat& h, int bound, std::string& err)
{
    if (h.rows != h.cols) {
        err = "not square";
        return std::nullopt;
    }
    EigenDecomp out;
    int total = 0;
    for (int lam = -bound; lam <= bound && total < h.rows; ++lam) {
        Mat shifted = h - Mat::identity(h.rows) * Rat(lam);
        Mat ker = kernel_basis(shifted);
        if (ker.cols == 0) continue;
        out.values.push_back(lam);
        out.spaces.push_back(ker);
        total += ker.cols;
    }
    if (total != h.rows) {
        err = "spectrum not integral/diagonalizable within bound";
        return std::nullopt;
    }
    out.basis = Mat(h.rows, h.rows);
    int col = 0;
    for (const auto& sp : out.spaces)
        for (int j = 0; j < sp.cols; ++j, ++col)
            for (int i = 0; i < h.rows; ++i) out.basis.at(i, col) = sp.at(i, j);
    auto inv = inverse(out.basis);
    if (!inv) {
        err = "eigenbasis not invertible";
        return std::nullopt;
    }
    out.basis_inv = *inv;
    return out;
}

std::optional<Mat> sl2_correct(const Mat& h_src, const Mat& h_tgt, const Mat& d, std::string& err)
{
    int bound = 4 * std::max(h_src.rows, h_tgt.rows) + 16;
    auto es = integer_eigen(h_src, bound, err);
    if (!es) return std::nullopt;
    auto et = integer_eigen(h_tgt, bound, err);
    if (!et) return std::nullopt;
    Mat C = h_tgt * d - d * h_src - d * Rat(2);
    // eigen-coordinates
    Mat Cc = et->basis_inv * C * es->basis;
    Mat Dc = et->basis_inv * d * es->basis;
    // offsets per eigenvalue block
    auto offsets = [](const EigenDecomp& e) {
        std::vector<int> off(e.spaces.size() + 1, 0);
        for (size_t i = 0; i < e.spaces.size(); ++i) off[i + 1] = off[i] + e.spaces[i].cols;
        return off;
    };
    std::vector<int> off_s = offsets(*es), off_t = offsets(*et);
    Mat Ec = Dc;
    for (size_t bt = 0; bt < et->values.size(); ++bt)
        for (size_t bs = 0; bs < es->values.size(); ++bs) {
            int w = et->values[bt] - es->values[bs]; // ad_h weight of this block
            bool nonzero = false;
            for (int i = off_t[bt]; i < off_t[bt + 1]; ++i)
                for (int j = off_s[bs]; j < off_s[bs + 1]; ++j)
                    if (!surfw::is_zero(Cc.at(i, j))) nonzero = true;
            if (!nonzero) continue;
            if (w > 0) {
                err = "positive ad_h component in [h,d]-2d";
                return std::nullopt;
            }
            int iwt = -w;
            Rat factor = Rat(1) / Rat(iwt + 2);
            for (int i = off_t[bt]; i < off_t[bt + 1]; ++i)
                for (int j = off_s[bs]; j < off_s[bs + 1]; ++j) Ec.at(i, j) += Cc.at(i, j) * factor;
        }
    return et->basis * Ec * es->basis_inv;
}

Degeneration::Degeneration(std::shared_ptr<const RingSpec> ring, DegenOptions opt) : opt_(opt)
{
    SpecializationConfig cfg;
    cfg.ring = ring;
    cfg.r = opt.r;
    cfg.chi = opt.chi;
    mod_ = std::make_shared<TruncatedModule>(cfg, opt.window);
    ev_ = std::make_shared<OpEval>(ring);
}

ModOp Degeneration::d_shadow(int m, int n, const RingElement& xi)
{
    const RingSpec& R = mod_->ring();
    ModOp out;
    bool first = true;
    for (int b = 0; b < R.dim(); ++b) {
        if (surfw::is_zero(xi[b])) continue;
        auto key = std::make_tuple(m, n, b);
        auto it = dsh_cache_.find(key);
        if (it == dsh_cache_.end()) {
            OpPtr op = op_d(m, n, RingElement::basis(R, b), /*t_base=*/1);
            it = dsh_cache_.emplace(key, mod_free(mod_, ev_, op)).first;
        }
        ModOp piece = (xi[b] == Rat(1)) ? it->second : mod_scale(xi[b], it->second);
        out = first ? piece : mod_add(out, piece);
        first = false;
    }
    if (first) {
        int shift = 2 * n - 2; // zero element: shift of the even convention
        out = mod_zero(mod_, shift);
    }
    return out;
}

ModOp Degeneration::x_op()
{
    if (!x_) {
        const RingSpec& R = mod_->ring();
        x_ = mod_scale(Rat(1) / opt_.r, d_shadow(1, 0, RingElement::basis(R, R.omega_index)));
    }
    return *x_;
}

ModOp Degeneration::x_inv()
{
    if (!xinv_) xinv_ = mod_inverse(x_op());
    return *xinv_;
}

ModOp Degeneration::interpolate_coeff(const std::function<ModOp(int)>& family, int i, int shift,
                                      const std::string& name)
{
    int K = probes();
    auto weights = std::make_shared<std::vector<std::vector<Rat>>>(vandermonde_inv(K));
    auto fam = std::make_shared<std::vector<ModOp>>();
    for (int m = 0; m <= K + 1; ++m) fam->push_back(family(m));
    auto provider = [fam, weights, i, K](int d) -> std::optional<Mat> {
        std::vector<Mat> mats;
        for (int m = 0; m <= K + 1; ++m) {
            auto mm = (*fam)[size_t(m)].matrix(d);
            if (!mm) return std::nullopt;
            mats.push_back(*mm);
        }
        // fit through m = 0..K, then verify at m = K+1
        std::vector<Mat> coeff;
        for (int j = 0; j <= K; ++j) {
            Mat c(mats[0].rows, mats[0].cols);
            for (int m = 0; m <= K; ++m) {
                const Rat& wv = (*weights)[size_t(j)][size_t(m)];
                if (!surfw::is_zero(wv)) c = c + mats[size_t(m)] * wv;
            }
            coeff.push_back(std::move(c));
        }
        Mat probe(mats[0].rows, mats[0].cols);
        Rat p(1);
        for (int j = 0; j <= K; ++j) {
            probe = probe + coeff[size_t(j)] * p;
            p *= Rat(K + 1);
        }
        if (!(probe == mats[size_t(K + 1)])) return std::nullopt; // polynomiality not observed
        return coeff[size_t(i)];
    };
    int rise = 0;
    for (int m = 0; m <= K + 1; ++m) rise = std::max(rise, (*fam)[size_t(m)].rise());
    return ModOp(mod_, shift, rise, provider, name);
}

ModOp Degeneration::theta_op()
{
    if (!theta_) {
        const RingSpec& R = mod_->ring();
        RingElement w = RingElement::basis(R, R.omega_index);
        ModOp xinv = x_inv();
        auto family = [this, &w, &xinv](int k) {
            return mod_compose(mod_power(x_op(), -k, &xinv), d_shadow(k, 0, w));
        };
        theta_ = interpolate_coeff(family, 1, 0, "theta");
    }
    return *theta_;
}

ModOp Degeneration::u_op()
{
    if (!u_) {
        ModOp X = x_op();
        ModOp th = theta_op();
        Rat rinv = Rat(1) / opt_.r;
        auto mod = mod_;
        auto provider = [X, th, rinv, mod](int d) -> std::optional<Mat> {
            auto xm = X.matrix(d);
            auto tm = th.matrix(d);
            if (!xm || !tm) return std::nullopt;
            int n = tm->rows;
            // exp(theta/r): theta must be nilpotent on the slice
            Mat acc = Mat::identity(n);
            Mat pw = Mat::identity(n);
            Rat fct(1);
            bool nil = false;
            for (int j = 1; j <= n + 1; ++j) {
                pw = pw * *tm;
                if (pw.is_zero()) { nil = true; break; }
                fct *= Rat(j);
                acc = acc + pw * (rat_pow(rinv, unsigned(j)) / fct);
            }
            if (!nil) return std::nullopt; // theta not nilpotent: abort slice
            return *xm * acc;
        };
        u_ = ModOp(mod_, 0, 0, provider, "u");
    }
    return *u_;
}

ModOp Degeneration::u_inv()
{
    if (!uinv_) uinv_ = mod_inverse(u_op());
    return *uinv_;
}

ModOp Degeneration::tilde_d(int i, int n, const RingElement& xi)
{
    std::ostringstream key;
    key << xi.str();
    auto k = std::make_tuple(i, n, key.str());
    auto it = tilde_cache_.find(k);
    if (it != tilde_cache_.end()) return it->second;
    int dxi = xi.degree().value_or(0);
    int shift = 2 * n - 2 + dxi;
    ModOp uinv = u_inv();
    auto family = [this, n, &xi, &uinv](int m) {
        return mod_compose(mod_power(u_op(), -m, &uinv), d_shadow(m, n, xi));
    };
    std::ostringstream nm;
    nm << "tD_{" << i << "," << n << "}(" << xi.str() << ")";
    ModOp c = interpolate_coeff(family, i, shift, nm.str());
    ModOp out = (i <= 1) ? c : mod_scale(factorial(unsigned(i)), c);
    return tilde_cache_.emplace(k, out).first->second;
}

ModOp Degeneration::y_op()
{
    if (!y_) {
        const RingSpec& R = mod_->ring();
        HeckeContext ctx(mod_->ring_ptr());
        FockElement cls = ctx.psi_class(1, RingElement::basis(R, R.omega_index)) * (Rat(1) / opt_.r);
        y_ = mod_mul(mod_, cls, "y");
    }
    return *y_;
}

ModOp Degeneration::dy_op()
{
    if (!dy_) dy_ = mod_scale(Rat(-1), tilde_d(1, 0, mod_->ring().one()));
    return *dy_;
}

FockElement Degeneration::vector_red(const FockElement& v)
{
    // f_red = sum_i y^i (-dy)^i / i! f at the level of module coordinates
    const RingSpec& R = mod_->ring();
    FockElement out(&R);
    auto byd = mod_->specialize(v).by_degree();
    ModOp y = y_op(), dy = dy_op();
    for (const auto& [d, comp] : byd) {
        std::vector<Rat> cur = mod_->coords(d, comp);
        FockElement acc = comp;
        int i = 1;
        std::vector<Rat> power = cur;
        Rat fct(1);
        int deg = d;
        while (true) {
            auto dym = dy.matrix(deg);
            if (!dym) break;
            // power <- (-dy) power
            std::vector<Rat> next(size_t(dym->rows));
            for (int r0 = 0; r0 < dym->rows; ++r0) {
                Rat s(0);
                for (int c0 = 0; c0 < dym->cols; ++c0) s += dym->at(r0, c0) * power[size_t(c0)];
                next[size_t(r0)] = -s;
            }
            deg -= 2;
            power = std::move(next);
            bool zero = true;
            for (const auto& c : power)
                if (!surfw::is_zero(c)) zero = false;
            if (zero || deg < 0) break;
            fct *= Rat(i);
            // lift back with y^i
            std::vector<Rat> lifted = power;
            int e = deg;
            for (int j = 0; j < i; ++j) {
                auto ym = y.matrix(e);
                if (!ym) { lifted.clear(); break; }
                std::vector<Rat> nx(size_t(ym->rows));
                for (int r0 = 0; r0 < ym->rows; ++r0) {
                    Rat s(0);
                    for (int c0 = 0; c0 < ym->cols; ++c0) s += ym->at(r0, c0) * lifted[size_t(c0)];
                    nx[size_t(r0)] = s;
                }
                lifted = std::move(nx);
                e += 2;
            }
            if (lifted.empty()) break;
            FockElement term = mod_->from_coords(e, lifted) * (Rat(1) / fct);
            acc += term;
            ++i;
        }
        out += acc;
    }
    return out;
}

std::optional<Mat> Degeneration::weyl_basis(int d)
{
    ModOp dy = dy_op(), y = y_op();
    int dimd = mod_->dim(d);
    Mat B(dimd, 0);
    std::vector<Mat> blocks;
    int total = 0;
    for (int i = 0; d - 2 * i >= 0; ++i) {
        int e = d - 2 * i;
        auto dym = dy.matrix(e);
        if (!dym) return std::nullopt;
        Mat K = kernel_basis(*dym);
        // lift with y^i
        Mat lifted = K;
        int cur = e;
        for (int j = 0; j < i; ++j) {
            auto ym = y.matrix(cur);
            if (!ym) return std::nullopt;
            lifted = *ym * lifted;
            cur += 2;
        }
        blocks.push_back(lifted);
        total += lifted.cols;
    }
    if (total != dimd) return std::nullopt;
    Mat out(dimd, dimd);
    int col = 0;
    for (const auto& blk : blocks)
        for (int j = 0; j < blk.cols; ++j, ++col)
            for (int i = 0; i < dimd; ++i) out.at(i, col) = blk.at(i, j);
    if (rank(out) != dimd) return std::nullopt;
    return out;
}

ModOp Degeneration::op_red(const ModOp& f)
{
    int s = f.shift();
    auto self = this;
    auto pf = f;
    auto mod = mod_;
    auto provider = [self, pf, mod, s](int d) -> std::optional<Mat> {
        auto Bd = self->weyl_basis(d);
        auto Bt = self->weyl_basis(d + s);
        if (!Bd || !Bt) return std::nullopt;
        auto Bd_inv = inverse(*Bd);
        auto Bt_inv = inverse(*Bt);
        if (!Bd_inv || !Bt_inv) return std::nullopt;
        ModOp dy = self->dy_op();
        // block sizes: dim ker(dy) at d-2i and d+s-2i
        auto ker_dims = [&](int base) {
            std::vector<int> dims;
            for (int i = 0; base - 2 * i >= 0; ++i) {
                auto m = dy.matrix(base - 2 * i);
                if (!m) return std::vector<int>();
                dims.push_back(kernel_basis(*m).cols);
            }
            return dims;
        };
        std::vector<int> src_dims = ker_dims(d), tgt_dims = ker_dims(d + s);
        if (src_dims.empty() && mod->dim(d) > 0) return std::nullopt;
        Mat middle(mod->dim(d + s), mod->dim(d));
        int src_off = 0;
        for (size_t i = 0; i < src_dims.size(); ++i) {
            int e = d - 2 * int(i);
            int te = e + s;
            if (src_dims[i] == 0) continue;
            // K-block map at source degree e: coordinates of Pi(F(w)) in ker at te
            auto fm = pf.matrix(e);
            if (!fm) return std::nullopt;
            auto dym = dy.matrix(e);
            if (!dym) return std::nullopt;
            Mat K = kernel_basis(*dym);
            auto Bte = self->weyl_basis(te);
            if (!Bte) return std::nullopt;
            auto Bte_inv = inverse(*Bte);
            if (!Bte_inv) return std::nullopt;
            Mat coords = *Bte_inv * (*fm * K);
            // rows 0..dim ker(te)-1 are the i' = 0 block
            auto dytm = dy.matrix(te);
            if (!dytm) return std::nullopt;
            int kt = kernel_basis(*dytm).cols;
            // target offset: block i in B(d+s)
            int tgt_off = 0;
            if (i >= tgt_dims.size()) {
                // y^i K_{d+s-2i} absent; image must vanish there
                tgt_off = -1;
            } else {
                for (size_t q = 0; q < i; ++q) tgt_off += tgt_dims[q];
            }
            for (int j = 0; j < src_dims[i]; ++j)
                for (int r0 = 0; r0 < kt; ++r0) {
                    const Rat& v = coords.at(r0, j);
                    if (surfw::is_zero(v)) continue;
                    if (tgt_off < 0) return std::nullopt;
                    middle.at(tgt_off + r0, src_off + j) = v;
                }
            src_off += src_dims[i];
        }
        return *Bt * middle * *Bd_inv;
    };
    int rise = std::max(f.rise(), std::max(s, 0));
    return ModOp(mod_, s, rise, provider, "red(" + f.name() + ")");
}

} // namespace surfw
