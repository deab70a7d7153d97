#include "surfw/oper.hpp"

#include <sstream>
#include <stdexcept>

namespace surfw {

FockElement OpEval::apply(const OpPtr& op, const FockElement& f)
{
    FockElement out(f.ring() ? f.ring() : &ctx_.ring());
    for (const auto& [m, c] : f.terms()) out += apply_mono(op.get(), m) * c;
    return out;
}

FockElement OpEval::apply_mono(const Op* op, const FockMonomial& m)
{
    auto key = std::make_pair(op, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    FockElement v = op->apply_mono(*this, m);
    return memo_.emplace(std::move(key), std::move(v)).first->second;
}

namespace {

struct PsiOp final : Op {
    int n;
    RingElement xi;
    FockElement apply_mono(OpEval& ev, const FockMonomial& m) const override
    {
        FockElement f(&ev.ctx().ring());
        f.add(m, Rat(1));
        return ev.ctx().psi_apply(n, xi, f);
    }
};

struct TOp final : Op {
    int n;
    RingElement xi;
    FockElement apply_mono(OpEval& ev, const FockMonomial& m) const override
    {
        FockElement out(&ev.ctx().ring());
        for (int b = 0; b < ev.ctx().ring().dim(); ++b)
            if (!surfw::is_zero(xi[b])) out += ev.ctx().T_apply_mono(n, b, m) * xi[b];
        return out;
    }
};

struct MulOp final : Op {
    FockElement f;
    FockElement apply_mono(OpEval& ev, const FockMonomial& m) const override
    {
        FockElement v(&ev.ctx().ring());
        v.add(m, Rat(1));
        return fock_mul(f, v);
    }
};

struct ScaleOp final : Op {
    Rat c;
    OpPtr a;
    FockElement apply_mono(OpEval& ev, const FockMonomial& m) const override
    {
        FockElement v(&ev.ctx().ring());
        v.add(m, Rat(1));
        return ev.apply(a, v) * c;
    }
};

struct AddOp final : Op {
    OpPtr a, b;
    FockElement apply_mono(OpEval& ev, const FockMonomial& m) const override
    {
        FockElement v(&ev.ctx().ring());
        v.add(m, Rat(1));
        return ev.apply(a, v) + ev.apply(b, v);
    }
};

struct ComposeOp final : Op {
    OpPtr a, b;
    FockElement apply_mono(OpEval& ev, const FockMonomial& m) const override
    {
        FockElement v(&ev.ctx().ring());
        v.add(m, Rat(1));
        return ev.apply(a, ev.apply(b, v));
    }
};

struct BracketOp final : Op {
    OpPtr a, b;
    bool anti = false; // true when both factors are odd
    FockElement apply_mono(OpEval& ev, const FockMonomial& m) const override
    {
        FockElement v(&ev.ctx().ring());
        v.add(m, Rat(1));
        FockElement ab = ev.apply(a, ev.apply(b, v));
        FockElement ba = ev.apply(b, ev.apply(a, v));
        return anti ? ab + ba : ab - ba;
    }
};

struct ZeroOp final : Op {
    FockElement apply_mono(OpEval& ev, const FockMonomial&) const override
    {
        return FockElement(&ev.ctx().ring());
    }
};

int homogeneous_degree(const RingElement& xi, const char* who)
{
    auto d = xi.degree();
    if (!d) {
        if (xi.is_zero()) return 0;
        throw std::invalid_argument(std::string(who) + ": argument must be homogeneous");
    }
    return *d;
}

int element_parity(const RingElement& xi)
{
    int p = xi.parity();
    return p == 1 ? 1 : 0;
}

} // namespace

OpPtr op_psi(int n, const RingElement& xi)
{
    auto op = std::make_shared<PsiOp>();
    op->n = n;
    op->xi = xi;
    op->shift = 2 * n - 2 + homogeneous_degree(xi, "op_psi");
    op->parity = element_parity(xi);
    op->name = "psi_" + std::to_string(n) + "(" + xi.str() + ")";
    return op;
}

OpPtr op_t(int n, const RingElement& xi)
{
    auto op = std::make_shared<TOp>();
    op->n = n;
    op->xi = xi;
    op->shift = 2 * n - 4 + homogeneous_degree(xi, "op_t");
    op->parity = element_parity(xi);
    op->name = "T_" + std::to_string(n) + "(" + xi.str() + ")";
    return op;
}

OpPtr op_mul(const FockElement& f)
{
    auto op = std::make_shared<MulOp>();
    op->f = f;
    int deg = 0;
    if (!f.is_zero()) {
        auto byd = f.by_degree();
        if (byd.size() != 1) throw std::invalid_argument("op_mul: element must be homogeneous");
        deg = byd.begin()->first;
    }
    op->shift = deg;
    int p = f.parity();
    op->parity = (p == 1) ? 1 : 0;
    op->name = "mul(" + f.str() + ")";
    return op;
}

OpPtr op_scale(const Rat& c, const OpPtr& a)
{
    auto op = std::make_shared<ScaleOp>();
    op->c = c;
    op->a = a;
    op->shift = a->shift;
    op->parity = a->parity;
    op->name = rat_str(c) + "*" + a->name;
    return op;
}

OpPtr op_add(const OpPtr& a, const OpPtr& b)
{
    if (a->shift != b->shift)
        throw std::invalid_argument("op_add: mismatched degree shifts");
    auto op = std::make_shared<AddOp>();
    op->a = a;
    op->b = b;
    op->shift = a->shift;
    op->parity = (a->parity == b->parity) ? a->parity : 0;
    op->name = "(" + a->name + " + " + b->name + ")";
    return op;
}

OpPtr op_compose(const OpPtr& a, const OpPtr& b)
{
    auto op = std::make_shared<ComposeOp>();
    op->a = a;
    op->b = b;
    op->shift = a->shift + b->shift;
    op->parity = (a->parity + b->parity) % 2;
    op->name = a->name + " o " + b->name;
    return op;
}

OpPtr op_bracket(const OpPtr& a, const OpPtr& b)
{
    auto op = std::make_shared<BracketOp>();
    op->a = a;
    op->b = b;
    op->anti = (a->parity == 1 && b->parity == 1);
    op->shift = a->shift + b->shift;
    op->parity = (a->parity + b->parity) % 2;
    op->name = "[" + a->name + ", " + b->name + "]";
    return op;
}

OpPtr op_zero(const RingSpec&)
{
    auto op = std::make_shared<ZeroOp>();
    op->name = "0";
    return op;
}

OpPtr op_d(int m, int n, const RingElement& xi, int t_base)
{
    if (m < 0 || n < 0) throw std::invalid_argument("op_d: indices must be >= 0");
    const RingSpec& R = *xi.ring();
    OpPtr w = op_psi(m + n, xi);
    OpPtr tb = op_t(t_base, R.one());
    for (int k = 0; k < m; ++k) w = op_bracket(w, tb); // (-Ad_T) X = [X, T]
    Rat c = factorial(unsigned(n)) / factorial(unsigned(m + n));
    OpPtr out = (c == Rat(1)) ? w : op_scale(c, w);
    std::ostringstream nm;
    nm << "D_{" << m << "," << n << "}(" << xi.str() << ")";
    auto named = std::const_pointer_cast<Op>(std::static_pointer_cast<const Op>(out));
    named->name = nm.str();
    return out;
}

} // namespace surfw
