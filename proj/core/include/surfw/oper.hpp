#ifndef SURFW_OPER_HPP
#define SURFW_OPER_HPP

#include "surfw/hecke.hpp"

#include <functional>
#include <memory>

namespace surfw {

class Op;
using OpPtr = std::shared_ptr<const Op>;

/// Lazy graded linear endomorphism of Lambda_S: an expression tree over the
/// generators psi_n(xi), T_n(xi) and multiplication operators, evaluated on
/// demand through a memoizing OpEval.
class Op {
public:
    virtual ~Op() = default;
    int shift = 0;   ///< degree shift of a homogeneous input
    int parity = 0;  ///< 0 even, 1 odd
    std::string name;

    virtual FockElement apply_mono(class OpEval& ev, const FockMonomial& m) const = 0;
};

/// Memoizing evaluator; one per worker thread.
class OpEval {
public:
    explicit OpEval(std::shared_ptr<const RingSpec> ring) : ctx_(std::move(ring)) {}
    explicit OpEval(HeckeContext ctx) : ctx_(std::move(ctx)) {}

    HeckeContext& ctx() { return ctx_; }
    FockElement apply(const OpPtr& op, const FockElement& f);

private:
    friend class Op;
    HeckeContext ctx_;
    std::map<std::pair<const Op*, FockMonomial>, FockElement> memo_;
    FockElement apply_mono(const Op* op, const FockMonomial& m);
};

/// multiplication by psi_n(xi); shift 2n-2+deg xi
OpPtr op_psi(int n, const RingElement& xi);
/// T_n(xi) (abstract index); shift 2n-4+deg xi
OpPtr op_t(int n, const RingElement& xi);
/// multiplication by a homogeneous Fock element
OpPtr op_mul(const FockElement& f);
OpPtr op_scale(const Rat& c, const OpPtr& a);
OpPtr op_add(const OpPtr& a, const OpPtr& b);
OpPtr op_compose(const OpPtr& a, const OpPtr& b); ///< a after b
/// graded commutator a b - (-1)^{|a||b|} b a
OpPtr op_bracket(const OpPtr& a, const OpPtr& b);
OpPtr op_zero(const RingSpec& ring);

/// D_{m,n}(xi) = n!/(m+n)! (-Ad_{T_base(1)})^m psi_{m+n}(xi), where t_base is
/// the abstract index acting as the presentation's T_0 (1 on open instances,
/// 0 on compact ones).
OpPtr op_d(int m, int n, const RingElement& xi, int t_base);

} // namespace surfw

#endif
