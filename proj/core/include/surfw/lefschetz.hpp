#ifndef SURFW_LEFSCHETZ_HPP
#define SURFW_LEFSCHETZ_HPP

#include "surfw/linalg.hpp"
#include "surfw/report.hpp"

#include <map>
#include <random>

namespace surfw {

/// Finite increasing filtration of Q^dim by exact subspaces; steps outside
/// [lo, hi] stabilize at 0 and the full space.
class FiltSpace {
public:
    FiltSpace() = default;
    FiltSpace(int dim, std::map<int, Mat> steps);

    int dim() const { return dim_; }
    /// reduced column basis of P_k
    Mat P(int k) const;
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int gr_dim(int k) const { return rank(P(k)) - rank(P(k - 1)); }
    bool operator==(const FiltSpace& o) const;

private:
    int dim_ = 0;
    int lo_ = 0, hi_ = -1;
    std::map<int, Mat> steps_;
};

/// W_k = sum_{i >= max(0,k)} ker N^{i+1} n im N^{i-k}
FiltSpace weight_filtration(const Mat& N);

struct LefschetzStructure {
    FiltSpace filt;
    Mat omega;
};

struct CheckResult {
    bool ok = true;
    std::string detail;
};

/// omega P_i subset P_{i+2} and omega^k : Gr_{-k} -> Gr_k iso for k >= 0
CheckResult lefschetz_verify(const LefschetzStructure& L);

/// The induced sl2 on the associated graded: e = omega, h = grading, f by
/// primitive decomposition.  Matrices act on the concatenated Gr basis.
struct GradedSl2 {
    std::vector<int> degrees;  ///< degree of each Gr basis vector
    Mat e, h, f;
    /// change of basis: columns are representatives inside the ambient space
    Mat reps;
};
std::optional<GradedSl2> sl2_on_gr(const LefschetzStructure& L, std::string& err);

/// Gr-exactness of kernels and cokernels of a filtered omega-map.
CheckResult strictness_check(const Mat& phi, const LefschetzStructure& U, const LefschetzStructure& V);

/// P_i = span of h-eigenvectors with eigenvalue <= i (integer spectrum).
std::optional<FiltSpace> filtration_from_h(const Mat& h, std::string& err);
/// given two sl2-triples sharing e with commuting integral h's: h = h'
CheckResult compare_h(const Mat& e, const Mat& h, const Mat& h2);
/// exp(t x)-conjugation of a triple by a filtration-lowering nilpotent keeps
/// the h-filtration (t runs over a few rationals)
CheckResult exp_conjugation_filtration_check(const Mat& x, const Mat& e, const Mat& h, const Mat& f);

/// brute-force uniqueness of the weight filtration over Jordan-adapted
/// candidates (dimension <= 6)
CheckResult weight_filtration_unique(const Mat& N);

/// seeded random nilpotent of the given dimension
Mat random_nilpotent(std::mt19937_64& rng, int dim);

/// Direct sums of sl2 strings with a random equivariant filtered map between
/// them; used by the strictness sweep.
struct StringPair {
    LefschetzStructure U, V;
    Mat phi;
};
StringPair random_equivariant_pair(std::mt19937_64& rng, int max_dim);

/// {"dim": n, "entries": [["num/den", ...], ...]}
Mat mat_from_json(const std::string& text);
std::string mat_to_json(const Mat& m);
/// {"dim": n, "omega": ..., "steps": [[k, [[...column...], ...]], ...]}
LefschetzStructure space_from_json(const std::string& text);
std::string space_to_json(const LefschetzStructure& L);

} // namespace surfw

#endif
