#ifndef SURFW_SERIES_HPP
#define SURFW_SERIES_HPP

#include "surfw/relations.hpp"

#include <map>
#include <optional>

namespace surfw {

/// Region expansion of Omega(x_small, x_big) = sum_P x_small^{2+P} S_P(z),
/// z = x_big^{-1}.  row(P)[A] is the z^A coefficient, an element of H.
/// The `plus_t` table is the re-expansion of Omega with the two arguments
/// swapped relative to the region order (t_i -> -t_i).
class OmegaTable {
public:
    OmegaTable(HeckeContext& ctx, bool plus_t, int pmax);
    const std::vector<RingElement>& row(int P) const { return rows_[size_t(P)]; }
    int pmax() const { return int(rows_.size()) - 1; }

private:
    std::vector<std::vector<RingElement>> rows_;
};

/// Omega(x, y) as a truncated series; key = (x power, y power <= 0).
std::map<std::pair<int, int>, RingElement> omega_series(HeckeContext& ctx, int order);

struct OracleValue {
    bool defined = true; ///< false when the coefficient needs eps on an open ring
    FockElement value;
};

/// Coefficient of x_len^{a_len} ... x_1^{a_1} in the closed product formula
/// (phi (x) ... (x) phi)(prod (1 - Delta_ij Omega(x_i,x_j)) (xi_len (x) ... (x) xi_1)).
/// Slot 1 is the innermost Hecke factor.  On open instances slots that would
/// evaluate h_0 are contracted through the diagonal; coefficients that still
/// need a bare eps come back undefined.
OracleValue oracle_coefficient(HeckeContext& ctx, const std::vector<int>& xi_basis,
                               const std::vector<int>& a, bool force_contraction = false);

/// Lengths 2 and 3: iterated T application against the closed formula.
SuiteReport oracle_report(std::shared_ptr<const RingSpec> ring, const SweepOptions& opt);

/// K'(x1,x2,x3) = sum_pi pi(x1^{-1} K) expanded in |x1| << |x2| << |x3|;
/// reports whether every coefficient within the window vanishes.
SuiteReport cubic_report(std::shared_ptr<const RingSpec> ring, const SweepOptions& opt);

} // namespace surfw

#endif
