#ifndef SURFW_HECKE_HPP
#define SURFW_HECKE_HPP

#include "surfw/fock.hpp"
#include "surfw/symfunc.hpp"

#include <map>
#include <memory>
#include <tuple>
#include <vector>

namespace surfw {

/// Element of Lambda_S (x) H[u, u^-1]; keys are (fock monomial, basis, u-power).
class ExtendedElement {
public:
    struct Key {
        FockMonomial mono;
        int b = 0;
        int upow = 0;
        bool operator<(const Key& o) const
        {
            if (upow != o.upow) return upow < o.upow;
            if (b != o.b) return b < o.b;
            return mono < o.mono;
        }
    };
    using Terms = std::map<Key, Rat>;

    ExtendedElement() = default;
    explicit ExtendedElement(const RingSpec* ring) : ring_(ring) {}

    const RingSpec* ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Key& k, const Rat& c);
    ExtendedElement& operator+=(const ExtendedElement& o);

private:
    const RingSpec* ring_ = nullptr;
    Terms terms_;
};

/// Per-ring evaluation context for the Hecke calculus.  Owns every cache
/// (Todd data, divided differences, diagonal expansions, h-evaluations,
/// R images, T applications).  Not thread safe; use one per worker.
class HeckeContext {
public:
    explicit HeckeContext(std::shared_ptr<const RingSpec> ring);

    const RingSpec& ring() const { return *ring_; }
    std::shared_ptr<const RingSpec> ring_ptr() const { return ring_; }

    /// iterated diagonal of a basis element: tuples (b_1..b_k) with coefficients
    using DiagExpansion = std::vector<std::pair<std::vector<int>, Rat>>;
    const DiagExpansion& diag_expansion(int k, int b);

    /// f(xi) for a symmetric function in the power-sum basis
    FockElement eval_symfunc(const SymFunc& f, const RingElement& xi);
    /// h_n(xi); n = 0 needs a compact ring
    FockElement h_eval(int n, const RingElement& xi);
    /// psi_n(xi) as an element of Lambda_S
    FockElement psi_class(int n, const RingElement& xi);

    /// The ring homomorphism R, p_n(eta) -> p_n(eta) - DD_n(u) eta.
    const ExtendedElement& R_hom(const FockMonomial& m);
    ExtendedElement R_hom(const FockElement& f);

    /// Q: Lambda_S (x) H[u,u^-1] -> Lambda_S (u^n -> h_n, negative powers -> 0)
    FockElement Q_map(const ExtendedElement& e);

    /// T_n(xi)(f) = Q(xi u^n R(f)); n may be negative.
    FockElement T_apply(int n, const RingElement& xi, const FockElement& f);
    FockElement T_apply_mono(int n, int xi_basis, const FockMonomial& m);
    /// multiplication by psi_n(xi)
    FockElement psi_apply(int n, const RingElement& xi, const FockElement& f);

    /// index shift for the geometric normalization T(xi u^n) = T_{n+1-rank}
    int geom_shift() const { return 1 - ring_->sheaf_rank(); }
    /// lowest abstract T index that is defined on this instance
    int min_t_index() const { return ring_->compact() ? std::numeric_limits<int>::min() : 1; }

    /// divided difference as u-poly (coefficients in H), cached
    const std::vector<RingElement>& dd(int n);
    const RingElement& todd(int k);

private:
    std::shared_ptr<const RingSpec> ring_;
    std::vector<RingElement> todd_;
    std::vector<std::vector<RingElement>> dd_;
    std::map<std::pair<int, int>, DiagExpansion> diag_;
    std::map<std::pair<int, int>, FockElement> heval_;
    std::map<std::pair<int, int>, FockElement> psi_;
    std::map<FockMonomial, ExtendedElement> rmemo_;
    std::map<std::tuple<int, int, FockMonomial>, FockElement> tmemo_;
};

} // namespace surfw

#endif
