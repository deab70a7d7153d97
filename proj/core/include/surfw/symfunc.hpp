#ifndef SURFW_SYMFUNC_HPP
#define SURFW_SYMFUNC_HPP

#include "surfw/rational.hpp"

#include <map>
#include <vector>

namespace surfw {

/// Partition, parts descending.
using Partition = std::vector<int>;

/// Symmetric function written in the power-sum basis: map p_lambda -> coeff.
/// The empty partition is the constant term.
using SymFunc = std::map<Partition, Rat>;

const std::vector<Partition>& partitions(int n);

/// z_lambda = prod i^{m_i} m_i!
Rat z_lambda(const Partition& p);

/// Complete homogeneous h_n in the power-sum basis: sum over lambda |- n of
/// p_lambda / z_lambda.
const SymFunc& h_to_p(int n);

} // namespace surfw

#endif
