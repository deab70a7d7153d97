#ifndef SURFW_RELATIONS_HPP
#define SURFW_RELATIONS_HPP

#include "surfw/hecke.hpp"
#include "surfw/report.hpp"

#include <memory>

namespace surfw {

struct SweepOptions {
    int max_degree = 8; ///< ring-degree cap on test monomials
    int max_weight = 4; ///< cap on the symmetric weight sum n_i of test monomials
    int max_index = 3;  ///< T/psi index sweep width
    int order = 4;      ///< series order for oracle/cubic checks
    int jobs = 1;
};

/// All Fock monomials with weight <= max_weight and degree <= max_degree.
/// The weight cap makes the graded sweep finite on instances with
/// non-positive-degree generators.
std::vector<FockMonomial> test_basis(const RingSpec& ring, int max_degree, int max_weight);

/// relation in {"Q0","Q1","Q2","Q3","oracle","cubic"}
SuiteReport check_relation(std::shared_ptr<const RingSpec> ring, const std::string& relation,
                           const SweepOptions& opt);

/// Koszul sign of reordering (xi_{src[0]}, xi_{src[1]}, ...) into
/// (xi_{dst[0]}, ...): -1 to the number of odd-odd inversions.
int koszul_reorder_sign(const std::vector<int>& src, const std::vector<int>& dst,
                        const std::vector<bool>& odd);

} // namespace surfw

#endif
