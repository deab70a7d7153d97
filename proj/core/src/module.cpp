#include "surfw/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace surfw {

Rat SpecializationConfig::euler_e() const
{
    if (ring->omega_index < 0)
        throw std::invalid_argument("specialization: curve-family instance required");
    return ring->c1()[ring->omega_index];
}

Rat SpecializationConfig::p2_unit_scalar() const
{
    // psi_1(1) = (e/2) p1(w) + p2(1)/2 = chi
    return Rat(2) * chi - euler_e() * r;
}

TruncatedModule::TruncatedModule(SpecializationConfig cfg, int window)
    : cfg_(std::move(cfg)), window_(window)
{
    const RingSpec& R = *cfg_.ring;
    if (R.compact() || R.omega_index < 0)
        throw std::invalid_argument("TruncatedModule: open curve-family instance required");
    if (surfw::is_zero(cfg_.r)) throw std::invalid_argument("TruncatedModule: r must be nonzero");
    if (R.parabolic_rank >= 1) {
        cfg_.taut_substitution = true;
        if (R.parabolic_points > 1)
            throw std::invalid_argument("TruncatedModule: eigenvalue substitution supports one point");
    }

    // surviving generators of degree 1..window
    std::vector<std::uint32_t> gens;
    for (int n = 1; 2 * n - 4 <= window + 2; ++n)
        for (int b = 0; b < R.dim(); ++b) {
            int deg = 2 * n - 4 + R.basis(b).degree;
            if (deg < 1 || deg > window) continue;
            if (!generator_kept(n, b)) continue;
            gens.push_back(Generator::pack(n, b));
        }
    std::sort(gens.begin(), gens.end());

    slices_.resize(size_t(window_) + 1);
    std::vector<std::uint32_t> cur;
    std::function<void(size_t, int)> rec = [&](size_t from, int deg) {
        slices_[size_t(deg)].push_back(FockMonomial(cur));
        for (size_t i = from; i < gens.size(); ++i) {
            Generator g = Generator::unpack(gens[i]);
            int gd = 2 * g.n - 4 + R.basis(g.b).degree;
            if (deg + gd > window_) continue;
            bool odd = R.basis(g.b).odd;
            if (odd && !cur.empty() && cur.back() == gens[i]) continue;
            cur.push_back(gens[i]);
            rec(odd ? i + 1 : i, deg + gd);
            cur.pop_back();
        }
    };
    rec(0, 0);
    for (auto& s : slices_) std::sort(s.begin(), s.end());
    for (int d = 0; d <= window_; ++d)
        for (int i = 0; i < int(slices_[size_t(d)].size()); ++i)
            index_[slices_[size_t(d)][size_t(i)]] = i;
}

const std::vector<FockMonomial>& TruncatedModule::slice(int d) const
{
    static const std::vector<FockMonomial> empty;
    if (d < 0 || d > window_) return empty;
    return slices_[size_t(d)];
}

int TruncatedModule::dim(int d) const { return int(slice(d).size()); }

bool TruncatedModule::generator_kept(int n, int b) const
{
    const RingSpec& R = *cfg_.ring;
    int deg = 2 * n - 4 + R.basis(b).degree;
    if (deg <= 0) return false;
    if (cfg_.taut_substitution && n >= 3) {
        if (b == R.omega_index) return false;
        for (int p : R.parabolic_indices)
            if (b == p) return false;
    }
    return true;
}

FockElement TruncatedModule::eigenvalue_y(int point, int i) const
{
    const RingSpec& R = *cfg_.ring;
    int rk = R.parabolic_rank;
    if (rk < 1 && !(i == 1 && point == 1))
        throw std::invalid_argument("eigenvalue_y: parabolic instance required");
    auto p2_of = [&](int b) { return FockElement::generator(R, 2, RingElement::basis(R, b)); };
    if (rk < 1) return p2_of(R.omega_index) * Rat(1, 2); // rank-one curve: y = p2(w)/2
    if (i < rk) {
        int b = R.parabolic_indices[size_t((point - 1) * (rk - 1) + (i - 1))];
        return p2_of(b) * Rat(1, 2);
    }
    FockElement y = p2_of(R.omega_index);
    for (int k = 1; k < rk; ++k)
        y -= p2_of(R.parabolic_indices[size_t((point - 1) * (rk - 1) + (k - 1))]);
    return y * Rat(1, 2);
}

FockElement TruncatedModule::specialize_gen(int n, int b) const
{
    auto key = std::make_pair(n, b);
    auto it = gen_cache_.find(key);
    if (it != gen_cache_.end()) return it->second;
    const RingSpec& R = *cfg_.ring;
    int deg = 2 * n - 4 + R.basis(b).degree;
    FockElement out(&R);
    if (deg < 0 || (deg <= 0 && R.basis(b).odd)) {
        // dies
    } else if (deg == 0) {
        Rat scalar(0);
        if (n == 1 && b == R.omega_index) scalar = cfg_.r;
        else if (n == 2 && b == 0) scalar = cfg_.p2_unit_scalar();
        else {
            bool parab = false;
            for (int p : R.parabolic_indices)
                if (b == p) parab = true;
            if (parab && n == 1) scalar = cfg_.r / Rat(R.parabolic_rank);
            else throw std::logic_error("specialize: unexpected degree-0 generator");
        }
        out = FockElement::one(R) * scalar;
    } else if (!generator_kept(n, b)) {
        // p_n on an eigenvalue class -> n (psi_1 of it)^{n-1}
        int rk = std::max(R.parabolic_rank, 1);
        if (b == R.omega_index) {
            for (int i = 1; i <= rk; ++i) {
                FockElement y = eigenvalue_y(1, i);
                FockElement pw = FockElement::one(R);
                for (int k = 0; k < n - 1; ++k) pw = fock_mul(pw, y);
                out += pw * Rat(n);
            }
        } else {
            int pos = -1;
            for (int q = 0; q < int(R.parabolic_indices.size()); ++q)
                if (R.parabolic_indices[size_t(q)] == b) pos = q;
            if (pos < 0) throw std::logic_error("specialize: unexpected substituted generator");
            FockElement y = eigenvalue_y(pos / (rk - 1) + 1, pos % (rk - 1) + 1);
            FockElement pw = FockElement::one(R);
            for (int k = 0; k < n - 1; ++k) pw = fock_mul(pw, y);
            out = pw * Rat(n);
        }
    } else {
        out = FockElement::generator(R, n, RingElement::basis(R, b));
    }
    gen_cache_.emplace(key, out);
    return out;
}

FockElement TruncatedModule::specialize(const FockElement& f) const
{
    const RingSpec& R = *cfg_.ring;
    FockElement out(&R);
    for (const auto& [m, c] : f.terms()) {
        FockElement term = FockElement::one(R) * c;
        for (auto code : m.gens()) {
            if (term.is_zero()) break;
            Generator g = Generator::unpack(code);
            term = fock_mul(term, specialize_gen(g.n, g.b));
        }
        out += term;
    }
    return out;
}

std::vector<Rat> TruncatedModule::coords(int d, const FockElement& v) const
{
    std::vector<Rat> out(size_t(dim(d)), Rat(0));
    for (const auto& [m, c] : v.terms()) {
        if (m.degree(ring()) != d)
            throw std::invalid_argument("coords: element not concentrated in degree " + std::to_string(d));
        auto it = index_.find(m);
        if (it == index_.end()) throw std::invalid_argument("coords: monomial outside the module basis");
        out[size_t(it->second)] = c;
    }
    return out;
}

FockElement TruncatedModule::from_coords(int d, const std::vector<Rat>& c) const
{
    FockElement out(&ring());
    const auto& s = slice(d);
    for (int i = 0; i < int(s.size()); ++i)
        if (!surfw::is_zero(c[size_t(i)])) out.add(s[size_t(i)], c[size_t(i)]);
    return out;
}

ModOp::ModOp(std::shared_ptr<const TruncatedModule> mod, int shift, int rise, Provider provider,
             std::string name)
    : mod_(std::move(mod)),
      shift_(shift),
      rise_(std::max(rise, std::max(shift, 0))),
      provider_(std::move(provider)),
      name_(std::move(name)),
      cache_(std::make_shared<std::map<int, std::optional<Mat>>>())
{
}

bool ModOp::sound(int d) const
{
    // degrees below 0 carry the zero space, so only the top of the window
    // can lose information
    return d >= 0 && d <= mod_->window() && d + rise_ <= mod_->window();
}

std::optional<Mat> ModOp::matrix(int d) const
{
    if (!sound(d)) return std::nullopt;
    auto it = cache_->find(d);
    if (it != cache_->end()) return it->second;
    std::optional<Mat> m = provider_(d);
    cache_->emplace(d, m);
    return m;
}

ModOp mod_free(std::shared_ptr<const TruncatedModule> mod, std::shared_ptr<OpEval> ev, OpPtr op)
{
    int shift = op->shift;
    auto modp = mod;
    auto provider = [modp, ev, op, shift](int d) -> std::optional<Mat> {
        const auto& src = modp->slice(d);
        Mat m(modp->dim(d + shift), int(src.size()));
        for (int j = 0; j < int(src.size()); ++j) {
            FockElement x(&modp->ring());
            x.add(src[size_t(j)], Rat(1));
            FockElement img = modp->specialize(ev->apply(op, x));
            std::vector<Rat> col = modp->coords(d + shift, img);
            for (int i = 0; i < m.rows; ++i) m.at(i, j) = col[size_t(i)];
        }
        return m;
    };
    return ModOp(mod, shift, std::max(shift, 0), provider, op->name);
}

ModOp mod_mul(std::shared_ptr<const TruncatedModule> mod, const FockElement& free_elem,
              const std::string& name)
{
    FockElement v = mod->specialize(free_elem);
    int shift = 0;
    if (!v.is_zero()) {
        auto byd = v.by_degree();
        if (byd.size() != 1) throw std::invalid_argument("mod_mul: inhomogeneous multiplier");
        shift = byd.begin()->first;
    }
    auto modp = mod;
    auto provider = [modp, v, shift](int d) -> std::optional<Mat> {
        const auto& src = modp->slice(d);
        Mat m(modp->dim(d + shift), int(src.size()));
        for (int j = 0; j < int(src.size()); ++j) {
            FockElement x(&modp->ring());
            x.add(src[size_t(j)], Rat(1));
            std::vector<Rat> col = modp->coords(d + shift, fock_mul(v, x));
            for (int i = 0; i < m.rows; ++i) m.at(i, j) = col[size_t(i)];
        }
        return m;
    };
    return ModOp(mod, shift, std::max(shift, 0), provider, name);
}

ModOp mod_identity(std::shared_ptr<const TruncatedModule> mod)
{
    auto modp = mod;
    return ModOp(mod, 0, 0, [modp](int d) { return Mat::identity(modp->dim(d)); }, "id");
}

ModOp mod_zero(std::shared_ptr<const TruncatedModule> mod, int shift)
{
    auto modp = mod;
    return ModOp(mod, shift, std::max(shift, 0),
                 [modp, shift](int d) { return Mat(modp->dim(d + shift), modp->dim(d)); }, "0");
}

ModOp mod_compose(const ModOp& a, const ModOp& b)
{
    int shift = a.shift() + b.shift();
    int rise = std::max(b.rise(), b.shift() + a.rise());
    auto pa = a, pb = b;
    auto provider = [pa, pb](int d) -> std::optional<Mat> {
        auto mb = pb.matrix(d);
        auto ma = pa.matrix(d + pb.shift());
        if (!mb || !ma) return std::nullopt;
        return *ma * *mb;
    };
    return ModOp(a.module(), shift, rise, provider, pa.name() + " o " + pb.name());
}

ModOp mod_add(const ModOp& a, const ModOp& b)
{
    if (a.shift() != b.shift()) throw std::invalid_argument("mod_add: shift mismatch");
    auto pa = a, pb = b;
    auto provider = [pa, pb](int d) -> std::optional<Mat> {
        auto ma = pa.matrix(d);
        auto mb = pb.matrix(d);
        if (!ma || !mb) return std::nullopt;
        return *ma + *mb;
    };
    return ModOp(a.module(), a.shift(), std::max(a.rise(), b.rise()), provider,
                 "(" + a.name() + " + " + b.name() + ")");
}

ModOp mod_scale(const Rat& c, const ModOp& a)
{
    auto pa = a;
    Rat cc = c;
    auto provider = [pa, cc](int d) -> std::optional<Mat> {
        auto ma = pa.matrix(d);
        if (!ma) return std::nullopt;
        return *ma * cc;
    };
    return ModOp(a.module(), a.shift(), a.rise(), provider, rat_str(c) + "*" + a.name());
}

ModOp mod_bracket(const ModOp& a, const ModOp& b, bool anti)
{
    ModOp ab = mod_compose(a, b);
    ModOp ba = mod_compose(b, a);
    auto provider = [ab, ba, anti](int d) -> std::optional<Mat> {
        auto m1 = ab.matrix(d);
        auto m2 = ba.matrix(d);
        if (!m1 || !m2) return std::nullopt;
        return anti ? *m1 + *m2 : *m1 - *m2;
    };
    return ModOp(a.module(), ab.shift(), std::max(ab.rise(), ba.rise()), provider,
                 "[" + a.name() + ", " + b.name() + "]");
}

ModOp mod_inverse(const ModOp& x)
{
    if (x.shift() != 0) throw std::invalid_argument("mod_inverse: shift-0 operator required");
    auto px = x;
    auto provider = [px](int d) -> std::optional<Mat> {
        auto m = px.matrix(d);
        if (!m) return std::nullopt;
        return inverse(*m);
    };
    return ModOp(x.module(), 0, x.rise(), provider, x.name() + "^-1");
}

ModOp mod_power(const ModOp& x, int k, const ModOp* inv)
{
    if (k < 0) {
        if (!inv) throw std::invalid_argument("mod_power: negative power needs the inverse");
        return mod_power(*inv, -k);
    }
    ModOp out = mod_identity(x.module());
    for (int i = 0; i < k; ++i) out = mod_compose(out, x);
    return out;
}

ModCompare mod_equal(const ModOp& a, const ModOp& b)
{
    ModCompare out;
    if (a.shift() != b.shift()) {
        out.equal = false;
        out.detail = "shift mismatch";
        return out;
    }
    const auto& mod = *a.module();
    for (int d = 0; d <= mod.window(); ++d) {
        auto ma = a.matrix(d);
        auto mb = b.matrix(d);
        if (!ma || !mb) {
            out.skipped.push_back(d);
            continue;
        }
        out.checked.push_back(d);
        if (!(*ma == *mb)) {
            out.equal = false;
            if (out.detail.empty()) {
                std::ostringstream os;
                os << "slice " << d << ": " << a.name() << " = " << ma->str() << " vs " << b.name()
                   << " = " << mb->str();
                out.detail = os.str();
            }
        }
    }
    return out;
}

} // namespace surfw
