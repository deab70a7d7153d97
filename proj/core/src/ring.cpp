#include "surfw/ring.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace surfw {

RingElement RingElement::zero(const RingSpec& ring)
{
    return RingElement(&ring, std::vector<Rat>(size_t(ring.dim())));
}

RingElement RingElement::basis(const RingSpec& ring, int i)
{
    RingElement e = zero(ring);
    e[i] = 1;
    return e;
}

bool RingElement::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!surfw::is_zero(c)) return false;
    return true;
}

std::optional<int> RingElement::degree() const
{
    std::optional<int> deg;
    for (int i = 0; i < int(coeffs_.size()); ++i) {
        if (surfw::is_zero(coeffs_[size_t(i)])) continue;
        int d = ring_->basis(i).degree;
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

int RingElement::parity() const
{
    int par = -1;
    for (int i = 0; i < int(coeffs_.size()); ++i) {
        if (surfw::is_zero(coeffs_[size_t(i)])) continue;
        int p = ring_->basis(i).odd ? 1 : 0;
        if (par >= 0 && par != p) return 2;
        par = p;
    }
    return par;
}

RingElement& RingElement::operator+=(const RingElement& o)
{
    if (!ring_) { *this = o; return *this; }
    if (o.ring_ && o.ring_ != ring_) throw std::invalid_argument("RingElement: mismatched RingSpec");
    if (!o.ring_) return *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o)
{
    if (!ring_) { *this = o * Rat(-1); return *this; }
    if (!o.ring_) return *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

RingElement RingElement::operator*(const Rat& c) const
{
    RingElement out = *this;
    for (auto& v : out.coeffs_) v *= c;
    return out;
}

bool RingElement::operator==(const RingElement& o) const
{
    if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
    return coeffs_ == o.coeffs_;
}

std::string RingElement::str() const
{
    if (!ring_ || is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ring_->dim(); ++i) {
        const Rat& c = coeffs_[size_t(i)];
        if (surfw::is_zero(c)) continue;
        if (!first) os << " + ";
        first = false;
        if (c == Rat(1) && i != 0)
            os << ring_->basis(i).name;
        else if (i == 0)
            os << rat_str(c);
        else
            os << rat_str(c) << "*" << ring_->basis(i).name;
    }
    return os.str();
}

TensorElement::TensorElement(const RingSpec* ring)
    : ring_(ring), entries_(size_t(ring->dim()) * size_t(ring->dim())) {}

Rat& TensorElement::at(int i, int j) { return entries_[size_t(i) * size_t(ring_->dim()) + size_t(j)]; }
const Rat& TensorElement::at(int i, int j) const { return entries_[size_t(i) * size_t(ring_->dim()) + size_t(j)]; }

bool TensorElement::is_zero() const
{
    for (const auto& c : entries_)
        if (!surfw::is_zero(c)) return false;
    return true;
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    if (!ring_) { *this = o; return *this; }
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

TensorElement TensorElement::operator*(const Rat& c) const
{
    TensorElement out = *this;
    for (auto& v : out.entries_) v *= c;
    return out;
}

bool TensorElement::operator==(const TensorElement& o) const
{
    return entries_ == o.entries_;
}

TensorElement TensorElement::flip() const
{
    TensorElement out(ring_);
    int n = ring_->dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& c = at(i, j);
            if (surfw::is_zero(c)) continue;
            bool sign = ring_->basis(i).odd && ring_->basis(j).odd;
            out.at(j, i) += sign ? Rat(-c) : c;
        }
    return out;
}

RingSpec::RingSpec(Data d)
    : name_(std::move(d.name)),
      basis_(std::move(d.basis)),
      kind_(d.kind),
      sheaf_rank_(d.sheaf_rank)
{
    int n = dim();
    if (int(d.mul.size()) != n) throw std::invalid_argument("RingSpec: bad mul table");
    mul_.resize(size_t(n));
    for (int i = 0; i < n; ++i) {
        if (int(d.mul[size_t(i)].size()) != n) throw std::invalid_argument("RingSpec: bad mul table row");
        for (int j = 0; j < n; ++j)
            mul_[size_t(i)].push_back(RingElement(this, d.mul[size_t(i)][size_t(j)]));
    }
    diag_ = TensorElement(this);
    for (const auto& [i, j, c] : d.diag) diag_.at(i, j) += c;
    one_ = RingElement::basis(*this, 0);
    c1_ = RingElement(this, d.c1);
    c2_ = RingElement(this, d.c2);
    s2_ = mul(c1_, c1_) - c2_;
    aug_ = std::move(d.aug);
}

int RingSpec::basis_index(const std::string& name) const
{
    for (int i = 0; i < dim(); ++i)
        if (basis_[size_t(i)].name == name) return i;
    throw std::invalid_argument("unknown basis element: " + name);
}

RingElement RingSpec::mul(const RingElement& a, const RingElement& b) const
{
    if (a.ring() != this || b.ring() != this)
        throw std::invalid_argument("RingSpec::mul: mismatched RingSpec");
    RingElement out = RingElement::zero(*this);
    for (int i = 0; i < dim(); ++i) {
        if (surfw::is_zero(a[i])) continue;
        for (int j = 0; j < dim(); ++j) {
            if (surfw::is_zero(b[j])) continue;
            Rat c = a[i] * b[j];
            const RingElement& m = mul_[size_t(i)][size_t(j)];
            for (int k = 0; k < dim(); ++k)
                if (!surfw::is_zero(m[k])) out[k] += c * m[k];
        }
    }
    return out;
}

Rat RingSpec::aug(const RingElement& x) const
{
    if (!aug_)
        throw std::runtime_error("augmentation undefined on open instance '" + name_ + "'");
    Rat out(0);
    for (int i = 0; i < dim(); ++i) out += (*aug_)[size_t(i)] * x[i];
    return out;
}

TensorElement RingSpec::diagonal_mul(const RingElement& xi) const
{
    return tensor_mul_left(diag_, xi);
}

TensorElement RingSpec::tensor_mul_left(const TensorElement& t, const RingElement& a) const
{
    TensorElement out(this);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            const Rat& c = t.at(i, j);
            if (surfw::is_zero(c)) continue;
            RingElement ai = mul(a, RingElement::basis(*this, i));
            for (int k = 0; k < dim(); ++k)
                if (!surfw::is_zero(ai[k])) out.at(k, j) += c * ai[k];
        }
    return out;
}

TensorElement RingSpec::tensor_mul_right(const TensorElement& t, const RingElement& a) const
{
    TensorElement out(this);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            const Rat& c = t.at(i, j);
            if (surfw::is_zero(c)) continue;
            RingElement ja = mul(RingElement::basis(*this, j), a);
            for (int k = 0; k < dim(); ++k)
                if (!surfw::is_zero(ja[k])) out.at(i, k) += c * ja[k];
        }
    return out;
}

TensorElement RingSpec::tensor_mul(const TensorElement& s, const TensorElement& t) const
{
    // (a x b)(a' x b') = (-1)^{|b||a'|} aa' x bb'
    TensorElement out(this);
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& c = s.at(i, j);
            if (surfw::is_zero(c)) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Rat& d = t.at(k, l);
                    if (surfw::is_zero(d)) continue;
                    Rat coef = c * d;
                    if (basis_[size_t(j)].odd && basis_[size_t(k)].odd) coef = -coef;
                    const RingElement& ik = mul_basis(i, k);
                    const RingElement& jl = mul_basis(j, l);
                    for (int x = 0; x < n; ++x) {
                        if (surfw::is_zero(ik[x])) continue;
                        for (int y = 0; y < n; ++y)
                            if (!surfw::is_zero(jl[y])) out.at(x, y) += coef * ik[x] * jl[y];
                    }
                }
        }
    return out;
}

RingElement RingSpec::eval_cpoly(const CPoly& p) const
{
    RingElement out = RingElement::zero(*this);
    for (const auto& [m, c] : p.terms()) {
        RingElement v = one_ * c;
        for (int a = 0; a < m.first && !v.is_zero(); ++a) v = mul(v, c1_);
        for (int b = 0; b < m.second && !v.is_zero(); ++b) v = mul(v, c2_);
        out += v;
    }
    return out;
}

std::vector<RingElement> RingSpec::todd_coefficients(int kmax) const
{
    std::vector<RingElement> out;
    out.reserve(size_t(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) out.push_back(eval_cpoly(todd_cpoly(k)));
    return out;
}

std::vector<RingElement> RingSpec::divided_difference(int n) const
{
    if (n < 1) throw std::invalid_argument("divided_difference: n must be >= 1");
    std::vector<RingElement> out(size_t(std::max(1, n - 1)), RingElement::zero(*this));
    for (int k = 2; k <= n; ++k) {
        Rat c = binomial(n, unsigned(k));
        if (k % 2) c = -c;
        out[size_t(n - k)] += eval_cpoly(tau(k)) * c;
    }
    return out;
}

void RingSpec::validate() const
{
    auto fail = [this](const std::string& what) {
        throw std::runtime_error("RingSpec '" + name_ + "' invalid: " + what);
    };
    if (basis_.empty() || basis_[0].degree != 0 || basis_[0].odd)
        fail("basis[0] must be the even degree-0 unit");
    for (int i = 0; i < dim(); ++i) {
        RingElement bi = RingElement::basis(*this, i);
        if (!(mul(one_, bi) == bi) || !(mul(bi, one_) == bi)) fail("unit law at " + basis_[size_t(i)].name);
    }
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            const RingElement& ab = mul_basis(i, j);
            const RingElement& ba = mul_basis(j, i);
            bool odd = basis_[size_t(i)].odd && basis_[size_t(j)].odd;
            RingElement expect = odd ? ba * Rat(-1) : ba;
            if (!(ab == expect))
                fail("super-commutativity at (" + basis_[size_t(i)].name + "," + basis_[size_t(j)].name + ")");
            int want = basis_[size_t(i)].degree + basis_[size_t(j)].degree;
            if (auto d = ab.degree(); d && *d != want)
                fail("grading at (" + basis_[size_t(i)].name + "," + basis_[size_t(j)].name + ")");
            int par = ab.parity();
            int wantp = (basis_[size_t(i)].odd != basis_[size_t(j)].odd) ? 1 : 0;
            if (par >= 0 && par != wantp)
                fail("parity at (" + basis_[size_t(i)].name + "," + basis_[size_t(j)].name + ")");
        }
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                RingElement l = mul(mul_basis(i, j), RingElement::basis(*this, k));
                RingElement r = mul(RingElement::basis(*this, i), mul_basis(j, k));
                if (!(l == r)) fail("associativity");
            }
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (!surfw::is_zero(diag_.at(i, j)) && basis_[size_t(i)].degree + basis_[size_t(j)].degree != 4)
                fail("diagonal not of degree 4");
    for (int i = 0; i < dim(); ++i) {
        RingElement bi = RingElement::basis(*this, i);
        if (!(tensor_mul_left(diag_, bi) == tensor_mul_right(diag_, bi)))
            fail("diagonal symmetry at " + basis_[size_t(i)].name);
    }
    if (!(tensor_mul(diag_, diag_) == tensor_mul_left(diag_, c2_))) fail("Delta^2 != c2*Delta");
    if (auto d = c1_.degree(); d && *d != 2) fail("c1 not of degree 2");
    if (auto d = c2_.degree(); d && *d != 4) fail("c2 not of degree 4");
    if (compact()) {
        if (!aug_) fail("compact instance without augmentation");
        for (int i = 0; i < dim(); ++i)
            if (!surfw::is_zero((*aug_)[size_t(i)]) && basis_[size_t(i)].degree != 4)
                fail("augmentation not of degree -4");
        RingElement l = RingElement::zero(*this), r = RingElement::zero(*this);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) {
                const Rat& c = diag_.at(i, j);
                if (surfw::is_zero(c)) continue;
                l += RingElement::basis(*this, j) * (c * (*aug_)[size_t(i)]);
                r += RingElement::basis(*this, i) * (c * (*aug_)[size_t(j)]);
            }
        if (!(l == one_) || !(r == one_)) fail("(eps x Id)Delta != 1");
    } else if (aug_) {
        fail("open instance with augmentation");
    }
}

namespace {

std::vector<Rat> unit_vec(int n, int idx, const Rat& c = Rat(1))
{
    std::vector<Rat> v(size_t(n), Rat(0));
    if (idx >= 0) v[size_t(idx)] = c;
    return v;
}

std::shared_ptr<const RingSpec> finish(std::shared_ptr<RingSpec> r)
{
    r->validate();
    return r;
}

} // namespace

std::shared_ptr<const RingSpec> make_curve_ring(int g, int e)
{
    if (g < 0 || e < 0) throw std::invalid_argument("make_curve_ring: g, e must be >= 0");
    int n = 2 + 2 * g;
    int w = n - 1;
    RingSpec::Data d;
    d.name = "curve:g=" + std::to_string(g) + ",e=" + std::to_string(e);
    d.basis.push_back({"1", 0, false});
    for (int i = 1; i <= 2 * g; ++i) d.basis.push_back({"g" + std::to_string(i), 1, true});
    d.basis.push_back({"w", 2, false});
    d.mul.assign(size_t(n), std::vector<std::vector<Rat>>(size_t(n), std::vector<Rat>(size_t(n))));
    for (int i = 0; i < n; ++i) {
        d.mul[0][size_t(i)] = unit_vec(n, i);
        d.mul[size_t(i)][0] = unit_vec(n, i);
    }
    for (int i = 1; i <= g; ++i) {
        d.mul[size_t(i)][size_t(i + g)] = unit_vec(n, w);
        d.mul[size_t(i + g)][size_t(i)] = unit_vec(n, w, Rat(-1));
    }
    d.diag.emplace_back(w, w, Rat(1));
    d.c1 = unit_vec(n, w, Rat(e));
    d.c2 = unit_vec(n, -1);
    d.kind = RingKind::open;
    d.sheaf_rank = 0;
    auto out = std::make_shared<RingSpec>(std::move(d));
    out->omega_index = w;
    for (int i = 1; i <= 2 * g; ++i) out->gamma_indices.push_back(i);
    return finish(out);
}

std::shared_ptr<const RingSpec> make_projective_plane_ring()
{
    int n = 3;
    RingSpec::Data d;
    d.name = "p2";
    d.basis = {{"1", 0, false}, {"h", 2, false}, {"d", 4, false}};
    d.mul.assign(size_t(n), std::vector<std::vector<Rat>>(size_t(n), std::vector<Rat>(size_t(n))));
    for (int i = 0; i < n; ++i) {
        d.mul[0][size_t(i)] = unit_vec(n, i);
        d.mul[size_t(i)][0] = unit_vec(n, i);
    }
    d.mul[1][1] = unit_vec(n, 2); // h*h = d
    d.diag = {{2, 0, Rat(1)}, {1, 1, Rat(1)}, {0, 2, Rat(1)}};
    d.c1 = unit_vec(n, 1, Rat(3));
    d.c2 = unit_vec(n, 2, Rat(3));
    d.aug = unit_vec(n, 2);
    d.kind = RingKind::compact;
    d.sheaf_rank = 1;
    return finish(std::make_shared<RingSpec>(std::move(d)));
}

std::shared_ptr<const RingSpec> make_parabolic_ring(int g, int e, int r, int points)
{
    if (r < 1 || points < 1) throw std::invalid_argument("make_parabolic_ring: r, points >= 1 required");
    int base = 2 + 2 * g;
    int n = base + points * (r - 1);
    int w = base - 1;
    RingSpec::Data d;
    d.name = "parabolic:g=" + std::to_string(g) + ",e=" + std::to_string(e) + ",r=" + std::to_string(r) +
             ",pts=" + std::to_string(points);
    d.basis.push_back({"1", 0, false});
    for (int i = 1; i <= 2 * g; ++i) d.basis.push_back({"g" + std::to_string(i), 1, true});
    d.basis.push_back({"w", 2, false});
    for (int q = 1; q <= points; ++q)
        for (int i = 1; i <= r - 1; ++i)
            d.basis.push_back({"p" + std::to_string(q) + "_" + std::to_string(i), 2, false});
    d.mul.assign(size_t(n), std::vector<std::vector<Rat>>(size_t(n), std::vector<Rat>(size_t(n))));
    for (int i = 0; i < n; ++i) {
        d.mul[0][size_t(i)] = unit_vec(n, i);
        d.mul[size_t(i)][0] = unit_vec(n, i);
    }
    for (int i = 1; i <= g; ++i) {
        d.mul[size_t(i)][size_t(i + g)] = unit_vec(n, w);
        d.mul[size_t(i + g)][size_t(i)] = unit_vec(n, w, Rat(-1));
    }
    // p_{q,i} H^{>0} = 0 and p p' = 0: every other positive-degree product
    // vanishes, which the zero-initialized table already says.
    d.diag.emplace_back(w, w, Rat(1));
    d.c1 = unit_vec(n, w, Rat(e));
    d.c2 = unit_vec(n, -1);
    d.kind = RingKind::open;
    d.sheaf_rank = 0;
    auto out = std::make_shared<RingSpec>(std::move(d));
    out->omega_index = w;
    for (int i = 1; i <= 2 * g; ++i) out->gamma_indices.push_back(i);
    for (int i = base; i < n; ++i) out->parabolic_indices.push_back(i);
    out->parabolic_rank = r;
    out->parabolic_points = points;
    return finish(out);
}

namespace {

std::map<std::string, int> parse_kv(const std::string& s)
{
    std::map<std::string, int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad instance parameter: " + item);
        out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    }
    return out;
}

} // namespace

std::shared_ptr<const RingSpec> ring_by_name(const std::string& name)
{
    if (name == "p2") return make_projective_plane_ring();
    if (name.rfind("curve:", 0) == 0) {
        auto kv = parse_kv(name.substr(6));
        return make_curve_ring(kv.at("g"), kv.at("e"));
    }
    if (name.rfind("parabolic:", 0) == 0) {
        auto kv = parse_kv(name.substr(10));
        return make_parabolic_ring(kv.at("g"), kv.at("e"), kv.at("r"), kv.at("pts"));
    }
    std::ifstream in(name);
    if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        return ring_from_json(buf.str());
    }
    throw std::invalid_argument("unknown instance: " + name);
}

std::shared_ptr<const RingSpec> ring_from_json(const std::string& text)
{
    using nlohmann::json;
    json j = json::parse(text);
    RingSpec::Data d;
    d.name = j.value("name", std::string("json-ring"));
    for (const auto& b : j.at("basis"))
        d.basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>(),
                           b.at("parity").get<std::string>() == "odd"});
    int n = int(d.basis.size());
    auto parse_elem = [&](const json& je) {
        std::vector<Rat> v(size_t(n), Rat(0));
        for (const auto& pair : je) v[pair.at(0).get<size_t>()] = parse_rat(pair.at(1).get<std::string>());
        return v;
    };
    d.mul.assign(size_t(n), std::vector<std::vector<Rat>>(size_t(n), std::vector<Rat>(size_t(n))));
    for (const auto& entry : j.at("mul"))
        d.mul[entry.at(0).get<size_t>()][entry.at(1).get<size_t>()] = parse_elem(entry.at(2));
    for (const auto& entry : j.at("diag"))
        d.diag.emplace_back(entry.at(0).get<int>(), entry.at(1).get<int>(),
                            parse_rat(entry.at(2).get<std::string>()));
    d.c1 = parse_elem(j.at("c1"));
    d.c2 = parse_elem(j.at("c2"));
    if (!j.at("aug").is_null()) d.aug = parse_elem(j.at("aug"));
    d.kind = j.at("kind").get<std::string>() == "compact" ? RingKind::compact : RingKind::open;
    d.sheaf_rank = j.value("rank", d.kind == RingKind::compact ? 1 : 0);
    return finish(std::make_shared<RingSpec>(std::move(d)));
}

std::string ring_to_json(const RingSpec& ring)
{
    using nlohmann::json;
    json j;
    j["name"] = ring.name();
    j["kind"] = ring.compact() ? "compact" : "open";
    j["rank"] = ring.sheaf_rank();
    json basis = json::array();
    for (int i = 0; i < ring.dim(); ++i)
        basis.push_back({{"name", ring.basis(i).name},
                         {"degree", ring.basis(i).degree},
                         {"parity", ring.basis(i).odd ? "odd" : "even"}});
    j["basis"] = basis;
    auto elem_json = [&](const RingElement& e) {
        json out = json::array();
        for (int k = 0; k < ring.dim(); ++k)
            if (!surfw::is_zero(e[k])) out.push_back({k, rat_str(e[k])});
        return out;
    };
    json mul = json::array();
    for (int i = 0; i < ring.dim(); ++i)
        for (int k = 0; k < ring.dim(); ++k)
            if (!ring.mul_basis(i, k).is_zero()) mul.push_back({i, k, elem_json(ring.mul_basis(i, k))});
    j["mul"] = mul;
    json diag = json::array();
    for (int i = 0; i < ring.dim(); ++i)
        for (int k = 0; k < ring.dim(); ++k)
            if (!surfw::is_zero(ring.diag().at(i, k))) diag.push_back({i, k, rat_str(ring.diag().at(i, k))});
    j["diag"] = diag;
    j["c1"] = elem_json(ring.c1());
    j["c2"] = elem_json(ring.c2());
    if (ring.has_aug()) {
        json a = json::array();
        for (int i = 0; i < ring.dim(); ++i) {
            Rat v = ring.aug(RingElement::basis(ring, i));
            if (!surfw::is_zero(v)) a.push_back({i, rat_str(v)});
        }
        j["aug"] = a;
    } else {
        j["aug"] = nullptr;
    }
    return j.dump(2);
}

RingElement permute_parabolic(const RingSpec& ring, int b, const std::vector<int>& perm)
{
    if (ring.parabolic_rank < 1) throw std::invalid_argument("permute_parabolic: not a parabolic instance");
    int r = ring.parabolic_rank;
    // decode b: non-parabolic basis elements are fixed
    auto it = std::find(ring.parabolic_indices.begin(), ring.parabolic_indices.end(), b);
    if (it == ring.parabolic_indices.end()) return RingElement::basis(ring, b);
    int pos = int(it - ring.parabolic_indices.begin());
    int point = pos / (r - 1);
    int i = pos % (r - 1); // 0-based eigenvalue label
    int target = perm[size_t(i)];
    if (target < r - 1)
        return RingElement::basis(ring, ring.parabolic_indices[size_t(point * (r - 1) + target)]);
    // image is the eliminated p_{q,r} = w - sum_{i<r} p_{q,i}
    RingElement out = RingElement::basis(ring, ring.omega_index);
    for (int k = 0; k < r - 1; ++k)
        out -= RingElement::basis(ring, ring.parabolic_indices[size_t(point * (r - 1) + k)]);
    return out;
}

RingElement ring_asym(const RingElement& x)
{
    const RingSpec& ring = *x.ring();
    if (ring.parabolic_rank < 1) throw std::invalid_argument("ring_asym: not a parabolic instance");
    int r = ring.parabolic_rank;
    std::vector<int> perm(size_t(r), 0);
    for (int i = 0; i < r; ++i) perm[size_t(i)] = i;
    RingElement acc = RingElement::zero(ring);
    Rat count(0);
    do {
        int inv = 0;
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                if (perm[size_t(a)] > perm[size_t(b)]) ++inv;
        Rat sgn((inv % 2) ? -1 : 1);
        RingElement img = RingElement::zero(ring);
        for (int i = 0; i < ring.dim(); ++i)
            if (!surfw::is_zero(x[i])) img += permute_parabolic(ring, i, perm) * x[i];
        acc += img * sgn;
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc * (Rat(1) / count);
}

} // namespace surfw
