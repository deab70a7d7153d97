#ifndef SURFW_MODULE_HPP
#define SURFW_MODULE_HPP

#include "surfw/linalg.hpp"
#include "surfw/oper.hpp"

#include <functional>
#include <memory>

namespace surfw {

/// Scalar assignments for the degree <= 0 generators of a curve-family
/// instance.  Everything of negative degree dies; p1(w) becomes r, p2(1) is
/// tied to chi = psi_1(1); parabolic eigenvalue classes split r evenly.
struct SpecializationConfig {
    std::shared_ptr<const RingSpec> ring;
    Rat r{1};
    Rat chi{0};
    /// substitute p_n on eigenvalue arguments by powers of the degree-2
    /// generators (the tautological relation psi_n(p_i) = psi_1(p_i)^n);
    /// enabled automatically on parabolic instances
    bool taut_substitution = false;

    Rat p2_unit_scalar() const; ///< value of p2(1)
    Rat euler_e() const;        ///< e with c1 = e w
};

/// Finite truncation of the specialized Fock space: a graded polynomial ring
/// on the surviving positive-degree generators, materialized degree by degree
/// on [0, window].
class TruncatedModule {
public:
    TruncatedModule(SpecializationConfig cfg, int window);

    const RingSpec& ring() const { return *cfg_.ring; }
    std::shared_ptr<const RingSpec> ring_ptr() const { return cfg_.ring; }
    const SpecializationConfig& cfg() const { return cfg_; }
    int window() const { return window_; }

    const std::vector<FockMonomial>& slice(int d) const;
    int dim(int d) const;

    /// evaluation homomorphism sigma: free Lambda_S -> V
    FockElement specialize(const FockElement& f) const;
    /// coordinates of a V element concentrated in degree d
    std::vector<Rat> coords(int d, const FockElement& v) const;
    FockElement from_coords(int d, const std::vector<Rat>& c) const;

    bool generator_kept(int n, int b) const;
    /// psi_1 of the i-th eigenvalue class (1-based, i = rank allowed), as a
    /// specialized element; parabolic instances only
    FockElement eigenvalue_y(int point, int i) const;

private:
    SpecializationConfig cfg_;
    int window_;
    std::vector<std::vector<FockMonomial>> slices_;
    std::map<FockMonomial, int> index_; // position within its slice
    FockElement specialize_gen(int n, int b) const;
    mutable std::map<std::pair<int, int>, FockElement> gen_cache_;
};

/// Graded operator materialized on the truncation: per-source-degree exact
/// matrices plus the bookkeeping that keeps evaluation sound (the `rise` is
/// the largest intermediate degree excess over the source).
class ModOp {
public:
    using Provider = std::function<std::optional<Mat>(int)>;

    ModOp() = default;
    ModOp(std::shared_ptr<const TruncatedModule> mod, int shift, int rise, Provider provider,
          std::string name);

    int shift() const { return shift_; }
    int rise() const { return rise_; }
    const std::string& name() const { return name_; }
    const std::shared_ptr<const TruncatedModule>& module() const { return mod_; }

    /// source degrees whose evaluation stays inside the window
    bool sound(int d) const;
    /// matrix on slice d (dim(d+shift) x dim(d)); nullopt when not sound or
    /// the provider declines (e.g. singular slice of an inverse)
    std::optional<Mat> matrix(int d) const;

private:
    std::shared_ptr<const TruncatedModule> mod_;
    int shift_ = 0, rise_ = 0;
    Provider provider_;
    std::string name_;
    std::shared_ptr<std::map<int, std::optional<Mat>>> cache_;
};

/// shadow sigma . Op . lift of a lazy operator (exact, rise = max(shift,0))
ModOp mod_free(std::shared_ptr<const TruncatedModule> mod, std::shared_ptr<OpEval> ev, OpPtr op);
/// multiplication by sigma(f)
ModOp mod_mul(std::shared_ptr<const TruncatedModule> mod, const FockElement& free_elem,
              const std::string& name);
ModOp mod_identity(std::shared_ptr<const TruncatedModule> mod);
ModOp mod_zero(std::shared_ptr<const TruncatedModule> mod, int shift);
ModOp mod_compose(const ModOp& a, const ModOp& b); ///< a after b
ModOp mod_add(const ModOp& a, const ModOp& b);
ModOp mod_scale(const Rat& c, const ModOp& a);
ModOp mod_bracket(const ModOp& a, const ModOp& b, bool anti = false);
/// slice-wise inverse of a shift-0 operator; singular slices decline
ModOp mod_inverse(const ModOp& x);
/// integer power (k may be negative when inv is supplied)
ModOp mod_power(const ModOp& x, int k, const ModOp* inv = nullptr);

/// operators equal on every mutually sound slice? reports the first
/// difference; slices where either side is unsound are skipped and recorded
struct ModCompare {
    bool equal = true;
    std::vector<int> checked;
    std::vector<int> skipped;
    std::string detail;
};
ModCompare mod_equal(const ModOp& a, const ModOp& b);

} // namespace surfw

#endif
