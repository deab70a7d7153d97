#ifndef SURFW_DEGEN_HPP
#define SURFW_DEGEN_HPP

#include "surfw/module.hpp"
#include "surfw/report.hpp"

namespace surfw {

struct DegenOptions {
    Rat r{1};
    Rat chi{0};
    int window = 6;
    int probes = 0; ///< interpolation probe count; 0 = window/2 + 2
};

/// Exact integer eigendecomposition by kernel extraction; fails when the
/// spectrum is not integral within the probe bound or the matrix is not
/// diagonalizable.
struct EigenDecomp {
    std::vector<int> values;
    std::vector<Mat> spaces; ///< column bases, same order as values
    Mat basis;               ///< concatenated eigenbasis
    Mat basis_inv;
};
std::optional<EigenDecomp> integer_eigen(const Mat& h, int bound, std::string& err);

/// e = d + sum_i f_i/(i+2) where [h, d] - 2d = sum f_i with ad_h f_i = -i f_i;
/// h_src/h_tgt act on source and target of d.  Fails when a component has
/// positive ad_h weight or the spectra are not integral.
std::optional<Mat> sl2_correct(const Mat& h_src, const Mat& h_tgt, const Mat& d, std::string& err);

/// The whole degeneration pipeline on a specialized curve-family truncation.
class Degeneration {
public:
    Degeneration(std::shared_ptr<const RingSpec> ring, DegenOptions opt);

    const std::shared_ptr<const TruncatedModule>& module() const { return mod_; }
    const DegenOptions& options() const { return opt_; }

    /// shadow of D_{m,n}(xi) (geometric indexing)
    ModOp d_shadow(int m, int n, const RingElement& xi);
    ModOp x_op();                 ///< X = q_1(w)/r
    ModOp x_inv();
    /// u = X exp(theta/r); also exposes theta. Both are computed lazily and
    /// report "polynomiality not observed" slices.
    ModOp theta_op();
    ModOp u_op();
    ModOp u_inv();
    /// tilde D_{i,n}(xi) from Lagrange interpolation of u^{-m} D_{m,n}(xi);
    /// slices where the fitted polynomial misses the verification probe
    /// decline (and end up reported as skips)
    ModOp tilde_d(int i, int n, const RingElement& xi);

    ModOp y_op();  ///< multiplication by psi_1(w)/r
    ModOp dy_op(); ///< -tilde q_1(1)
    FockElement vector_red(const FockElement& v);
    /// brute-force decomposition V_d = (+)_i y^i ker(dy); nullopt when the
    /// Weyl structure fails on the slice
    std::optional<Mat> weyl_basis(int d);
    ModOp op_red(const ModOp& f);

    SuiteReport weyl_suite();
    SuiteReport tilde_suite();
    SuiteReport sl2_suite();
    SuiteReport reduced_suite();
    SuiteReport unred_suite();
    SuiteReport parabolic_suite();

    /// h-eigenvalue multiplicities per degree (after a successful sl2 run)
    std::string h_multiplicities_json();

private:
    DegenOptions opt_;
    std::shared_ptr<const TruncatedModule> mod_;
    std::shared_ptr<OpEval> ev_;
    std::map<std::tuple<int, int, int>, ModOp> dsh_cache_; // (m, n, basis or -1 for 1)
    std::map<std::tuple<int, int, std::string>, ModOp> tilde_cache_;
    std::optional<ModOp> x_, xinv_, theta_, u_, uinv_, y_, dy_;
    std::vector<std::string> notes_;
    int probes() const { return opt_.probes > 0 ? opt_.probes : opt_.window / 2 + 2; }
    ModOp interpolate_coeff(const std::function<ModOp(int)>& family, int i, int shift,
                            const std::string& name);
    std::string hmult_json_;
};

} // namespace surfw

#endif
