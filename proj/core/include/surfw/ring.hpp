#ifndef SURFW_RING_HPP
#define SURFW_RING_HPP

#include "surfw/chern.hpp"
#include "surfw/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace surfw {

class RingSpec;

/// Element of the base ring H, dense over the (small) basis.
class RingElement {
public:
    RingElement() = default;
    RingElement(const RingSpec* ring, std::vector<Rat> coeffs)
        : ring_(ring), coeffs_(std::move(coeffs)) {}
    static RingElement zero(const RingSpec& ring);
    static RingElement basis(const RingSpec& ring, int i);

    const RingSpec* ring() const { return ring_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat& operator[](int i) { return coeffs_[size_t(i)]; }
    const Rat& operator[](int i) const { return coeffs_[size_t(i)]; }

    bool is_zero() const;
    /// Homogeneous of a single degree? Returns that degree, or nullopt for 0
    /// or mixed elements.
    std::optional<int> degree() const;
    /// -1: zero, 0: even, 1: odd, 2: mixed parity
    int parity() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement operator*(const Rat& c) const;
    friend RingElement operator+(RingElement a, const RingElement& b) { a += b; return a; }
    friend RingElement operator-(RingElement a, const RingElement& b) { a -= b; return a; }
    bool operator==(const RingElement& o) const;

    std::string str() const;

private:
    const RingSpec* ring_ = nullptr;
    std::vector<Rat> coeffs_;
};

/// Element of H (x) H, dense.
class TensorElement {
public:
    TensorElement() = default;
    explicit TensorElement(const RingSpec* ring);

    const RingSpec* ring() const { return ring_; }
    Rat& at(int i, int j);
    const Rat& at(int i, int j) const;
    bool is_zero() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement operator*(const Rat& c) const;
    bool operator==(const TensorElement& o) const;
    /// Graded flip a (x) b -> (-1)^{|a||b|} b (x) a.
    TensorElement flip() const;

private:
    const RingSpec* ring_ = nullptr;
    std::vector<Rat> entries_;
};

enum class RingKind { compact, open };

/// The abstract surface datum: a finite-basis graded super-commutative ring
/// with a diagonal class, Chern data and (for compact instances) an
/// augmentation of degree -4.
class RingSpec {
public:
    struct BasisInfo {
        std::string name;
        int degree = 0;
        bool odd = false;
    };
    /// Raw construction data; all elements are coefficient vectors over the
    /// basis so the spec can anchor them to itself.
    struct Data {
        std::string name;
        std::vector<BasisInfo> basis;
        /// mul[i][j] = coefficients of basis_i * basis_j
        std::vector<std::vector<std::vector<Rat>>> mul;
        std::vector<std::tuple<int, int, Rat>> diag;
        std::vector<Rat> c1, c2;
        std::optional<std::vector<Rat>> aug;
        RingKind kind = RingKind::open;
        int sheaf_rank = 0;
    };

    explicit RingSpec(Data d);

    const std::string& name() const { return name_; }
    int dim() const { return int(basis_.size()); }
    const BasisInfo& basis(int i) const { return basis_[size_t(i)]; }
    int basis_index(const std::string& name) const;
    RingKind kind() const { return kind_; }
    bool compact() const { return kind_ == RingKind::compact; }
    /// rank of the modelled universal sheaf; drives the geometric index shift
    int sheaf_rank() const { return sheaf_rank_; }

    const RingElement& one() const { return one_; }
    const RingElement& c1() const { return c1_; }
    const RingElement& c2() const { return c2_; }
    /// s2 = c1^2 - c2 (= t1^2 + t1 t2 + t2^2)
    const RingElement& s2() const { return s2_; }
    const TensorElement& diag() const { return diag_; }

    RingElement mul(const RingElement& a, const RingElement& b) const;
    const RingElement& mul_basis(int i, int j) const { return mul_[size_t(i)][size_t(j)]; }
    /// epsilon; throws on open instances.
    Rat aug(const RingElement& x) const;
    bool has_aug() const { return aug_.has_value(); }

    /// Delta * (xi (x) 1), equal to Delta * (1 (x) xi).
    TensorElement diagonal_mul(const RingElement& xi) const;
    TensorElement tensor_mul_left(const TensorElement& t, const RingElement& a) const;  // (a x 1) t
    TensorElement tensor_mul_right(const TensorElement& t, const RingElement& a) const; // t (1 x a)
    TensorElement tensor_mul(const TensorElement& s, const TensorElement& t) const;

    /// Evaluates a polynomial in c1, c2 inside H.
    RingElement eval_cpoly(const CPoly& p) const;
    /// Td_0 .. Td_kmax as elements of H.
    std::vector<RingElement> todd_coefficients(int kmax) const;
    /// [u^n - (u-t1)^n - (u-t2)^n + (u-t1-t2)^n] / (t1 t2) as a u-polynomial
    /// with coefficients in H (index = power of u).
    std::vector<RingElement> divided_difference(int n) const;

    /// Hard-checks every structural invariant; throws std::runtime_error with
    /// a description on the first violation.
    void validate() const;

    // optional structure tags used by the specialization layer
    int omega_index = -1;               ///< degree-2 fiber class (curve instances)
    std::vector<int> gamma_indices;     ///< odd degree-1 classes
    std::vector<int> parabolic_indices; ///< eigenvalue classes p_{q,i} kept in the basis
    int parabolic_rank = 0;             ///< r; 0 when not parabolic
    int parabolic_points = 0;

private:
    std::string name_;
    std::vector<BasisInfo> basis_;
    std::vector<std::vector<RingElement>> mul_;
    TensorElement diag_;
    RingElement one_, c1_, c2_, s2_;
    std::optional<std::vector<Rat>> aug_;
    RingKind kind_;
    int sheaf_rank_;
};

/// Built-in instances (validated on construction).
std::shared_ptr<const RingSpec> make_curve_ring(int g, int e);
std::shared_ptr<const RingSpec> make_projective_plane_ring();
std::shared_ptr<const RingSpec> make_parabolic_ring(int g, int e, int r, int points);
/// Resolves "curve:g=1,e=1", "p2", "parabolic:g=0,e=1,r=2,pts=1" or a path to
/// a JSON ring-spec file.
std::shared_ptr<const RingSpec> ring_by_name(const std::string& name);

std::shared_ptr<const RingSpec> ring_from_json(const std::string& text);
std::string ring_to_json(const RingSpec& ring);

/// S_r acting on a parabolic instance by permuting the eigenvalue labels of
/// every point simultaneously: image of basis element b under permutation
/// perm (perm has size r, values 0..r-1).
RingElement permute_parabolic(const RingSpec& ring, int b, const std::vector<int>& perm);
/// Antisymmetrization (1/r!) sum sgn(sigma) sigma over eigenvalue labels.
RingElement ring_asym(const RingElement& x);

} // namespace surfw

#endif
