#include "surfw/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace surfw {

int FockMonomial::weight() const
{
    int w = 0;
    for (auto g : gens_) w += Generator::unpack(g).n;
    return w;
}

int FockMonomial::degree(const RingSpec& ring) const
{
    int d = 0;
    for (auto g : gens_) {
        Generator gen = Generator::unpack(g);
        d += 2 * gen.n - 4 + ring.basis(gen.b).degree;
    }
    return d;
}

bool FockMonomial::odd(const RingSpec& ring) const
{
    int odd = 0;
    for (auto g : gens_)
        if (ring.basis(Generator::unpack(g).b).odd) ++odd;
    return odd % 2 == 1;
}

std::string FockMonomial::str(const RingSpec& ring) const
{
    if (gens_.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < gens_.size(); ++i) {
        Generator g = Generator::unpack(gens_[i]);
        if (i) os << "*";
        os << "p" << g.n << "(" << ring.basis(g.b).name << ")";
    }
    return os.str();
}

FockElement FockElement::one(const RingSpec& ring)
{
    FockElement f(&ring);
    f.add(FockMonomial(), Rat(1));
    return f;
}

FockElement FockElement::generator(const RingSpec& ring, int n, const RingElement& xi)
{
    if (n < 1) throw std::invalid_argument("Fock generator needs n >= 1");
    FockElement f(&ring);
    for (int b = 0; b < ring.dim(); ++b)
        if (!surfw::is_zero(xi[b]))
            f.add(FockMonomial({Generator::pack(n, b)}), xi[b]);
    return f;
}

void FockElement::add(const FockMonomial& m, const Rat& c)
{
    if (surfw::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (surfw::is_zero(it->second)) terms_.erase(it);
    }
}

FockElement& FockElement::operator+=(const FockElement& o)
{
    if (!ring_) ring_ = o.ring_;
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FockElement& FockElement::operator-=(const FockElement& o)
{
    if (!ring_) ring_ = o.ring_;
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

FockElement FockElement::operator*(const Rat& c) const
{
    FockElement out(ring_);
    if (surfw::is_zero(c)) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

bool FockElement::operator==(const FockElement& o) const
{
    return terms_ == o.terms_;
}

std::map<int, FockElement> FockElement::by_degree() const
{
    std::map<int, FockElement> out;
    for (const auto& [m, c] : terms_) {
        auto& f = out[m.degree(*ring_)];
        if (!f.ring()) f = FockElement(ring_);
        f.add(m, c);
    }
    return out;
}

int FockElement::parity() const
{
    int par = -1;
    for (const auto& [m, c] : terms_) {
        int p = m.odd(*ring_) ? 1 : 0;
        if (par >= 0 && par != p) return 2;
        par = p;
    }
    return par;
}

std::string FockElement::str() const
{
    return fock_to_text(*this);
}

bool mul_monomials(const RingSpec& ring, const FockMonomial& a, const FockMonomial& b,
                   FockMonomial& out, int& sign)
{
    const auto& x = a.gens();
    const auto& y = b.gens();
    std::vector<std::uint32_t> merged;
    merged.reserve(x.size() + y.size());
    // odd generators remaining in x from position i onward
    std::vector<int> odd_suffix(x.size() + 1, 0);
    for (size_t i = x.size(); i-- > 0;) {
        Generator g = Generator::unpack(x[i]);
        odd_suffix[i] = odd_suffix[i + 1] + (ring.basis(g.b).odd ? 1 : 0);
    }
    size_t i = 0, j = 0;
    int swaps = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) {
            Generator g = Generator::unpack(x[i]);
            if (ring.basis(g.b).odd) return false; // odd square
            merged.push_back(x[i]);
            ++i;
        } else if (x[i] < y[j]) {
            merged.push_back(x[i]);
            ++i;
        } else {
            Generator g = Generator::unpack(y[j]);
            if (ring.basis(g.b).odd) swaps += odd_suffix[i];
            merged.push_back(y[j]);
            ++j;
        }
    }
    while (i < x.size()) merged.push_back(x[i++]);
    while (j < y.size()) merged.push_back(y[j++]);
    out = FockMonomial(std::move(merged));
    sign = (swaps % 2) ? -1 : 1;
    return true;
}

FockElement fock_mul(const FockElement& f, const FockElement& g)
{
    if (f.ring() && g.ring() && f.ring() != g.ring())
        throw std::invalid_argument("fock_mul: mismatched RingSpec");
    FockElement out(f.ring() ? f.ring() : g.ring());
    if (!out.ring()) return out;
    const RingSpec& ring = *out.ring();
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms()) {
            FockMonomial m;
            int sign;
            if (!mul_monomials(ring, ma, mb, m, sign)) continue;
            out.add(m, ca * cb * Rat(sign));
        }
    return out;
}

FockElement fock_word(const RingSpec& ring, const std::vector<Generator>& word, const Rat& coeff)
{
    FockElement out = FockElement::one(ring) * coeff;
    for (const Generator& g : word) {
        FockElement gen(&ring);
        gen.add(FockMonomial({Generator::pack(g.n, g.b)}), Rat(1));
        out = fock_mul(out, gen);
    }
    return out;
}

std::string fock_to_text(const FockElement& f)
{
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        if (!m.is_one()) os << " * " << m.str(*f.ring());
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& pos)
{
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

Generator parse_gen(const RingSpec& ring, const std::string& s, size_t& pos)
{
    if (pos >= s.size() || s[pos] != 'p') throw std::invalid_argument("expected 'p' at " + std::to_string(pos));
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected generator index");
    int n = std::stoi(s.substr(start, pos - start));
    if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("expected '('");
    ++pos;
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("expected ')'");
    std::string name = s.substr(pos, close - pos);
    pos = close + 1;
    return {n, ring.basis_index(name)};
}

} // namespace

FockElement fock_from_text(const RingSpec& ring, const std::string& text)
{
    FockElement out(&ring);
    size_t pos = 0;
    skip_ws(text, pos);
    if (text.compare(pos, 1, "0") == 0 && pos + 1 >= text.size()) return out;
    bool negate = false;
    while (pos < text.size()) {
        skip_ws(text, pos);
        if (pos >= text.size()) break;
        Rat coeff(1);
        bool neg = negate;
        negate = false;
        if (text[pos] == '-') { neg = true; ++pos; skip_ws(text, pos); }
        // optional rational literal
        if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])))) {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            coeff = parse_rat(text.substr(start, pos - start));
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(text, pos); }
        }
        if (neg) coeff = -coeff;
        std::vector<Generator> word;
        while (pos < text.size() && text[pos] == 'p') {
            word.push_back(parse_gen(ring, text, pos));
            skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '*') { ++pos; skip_ws(text, pos); }
            else break;
        }
        out += fock_word(ring, word, coeff);
        skip_ws(text, pos);
        if (pos < text.size()) {
            if (text[pos] == '+') { ++pos; }
            else if (text[pos] == '-') { negate = true; ++pos; }
            else throw std::invalid_argument("unexpected character at " + std::to_string(pos));
        }
    }
    return out;
}

FockElement fock_asym(const FockElement& f)
{
    const RingSpec& ring = *f.ring();
    if (ring.parabolic_rank < 1) throw std::invalid_argument("fock_asym: not a parabolic instance");
    int r = ring.parabolic_rank;
    std::vector<int> perm(size_t(r), 0);
    for (int i = 0; i < r; ++i) perm[size_t(i)] = i;
    FockElement acc(f.ring());
    Rat count(0);
    do {
        int inv = 0;
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b)
                if (perm[size_t(a)] > perm[size_t(b)]) ++inv;
        Rat sgn((inv % 2) ? -1 : 1);
        for (const auto& [m, c] : f.terms()) {
            // permute each generator argument; linear expansion
            FockElement img = FockElement::one(ring) * (c * sgn);
            for (auto gcode : m.gens()) {
                Generator g = Generator::unpack(gcode);
                RingElement arg = permute_parabolic(ring, g.b, perm);
                img = fock_mul(img, FockElement::generator(ring, g.n, arg));
            }
            acc += img;
        }
        count += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc * (Rat(1) / count);
}

} // namespace surfw
