#ifndef SURFW_WALG_HPP
#define SURFW_WALG_HPP

#include "surfw/oper.hpp"
#include "surfw/relations.hpp"

namespace surfw {

struct WAlgOptions {
    int max_degree = 8;
    int max_weight = 4;
    int max_index = 4; ///< cap on m+n per D operator
    int jobs = 1;
};

/// [D_{m,n}(xi), D_{m',n'}(eta)] = (n m' - m n') D_{m+m', n+n'-1}(xi eta) on
/// the degree-bounded basis; undeformed instances only (s2 = 0, s1 Delta = 0).
SuiteReport check_undeformed(std::shared_ptr<const RingSpec> ring, const WAlgOptions& opt);

/// q_m = D_{m,0}, L_m = D_{m,1}, d = psi_2(1)/2 relations.
SuiteReport lehn_suite(std::shared_ptr<const RingSpec> ring, const WAlgOptions& opt);

/// Symbolic Lie words in the generators psi_n(xi), T_n(xi).
struct LieWord {
    // leaf
    bool is_leaf = true;
    bool is_t = false;
    int index = 0; ///< presentation index (geometric on open instances)
    int basis = 0;
    // bracket
    std::shared_ptr<const LieWord> left, right;

    static LieWord leaf(bool is_t, int index, int basis);
    static LieWord bracket(const LieWord& l, const LieWord& r);
    int weight() const;  ///< sum of generator indices minus number of brackets
    int t_degree() const;
    std::string str(const RingSpec& ring) const;
    OpPtr to_op(const RingSpec& ring, int t_base) const;
};

/// Product of Lie words; weight and degree are additive.
struct LieExpression {
    std::vector<LieWord> words;
    int weight() const;
    int t_degree() const;
    std::string str(const RingSpec& ring) const;
    OpPtr to_op(const RingSpec& ring, int t_base) const;
};

/// Enumerates expressions of degree m and weight <= -m (small index/depth
/// window) and verifies they act by zero; F_{0,-1} likewise for m = 0.
SuiteReport f_vanishing_probe(std::shared_ptr<const RingSpec> ring, int m, const WAlgOptions& opt);

} // namespace surfw

#endif
