#ifndef SURFW_HAMVEC_HPP
#define SURFW_HAMVEC_HPP

#include "surfw/report.hpp"
#include "surfw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace surfw {

/// Element of the Lie algebra of polynomial Hamiltonian vector fields on the
/// plane, in the basis V_{m,n} (Hamiltonian x^m y^n).  V_{0,0} is the zero
/// field and is never stored.
class HamElement {
public:
    using Terms = std::map<std::pair<int, int>, Rat>;

    HamElement() = default;
    static HamElement basis(int m, int n);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(int m, int n, const Rat& c);
    HamElement& operator+=(const HamElement& o);
    HamElement operator*(const Rat& c) const;
    friend HamElement operator-(HamElement a, const HamElement& b)
    {
        for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, -c);
        return a;
    }
    bool operator==(const HamElement& o) const { return terms_ == o.terms_; }
    std::string str() const;

private:
    Terms terms_;
};

/// [V_{m,n}, V_{m',n'}] = (m'n - m n') V_{m+m'-1, n+n'-1}
HamElement h2_bracket(const HamElement& a, const HamElement& b);

/// "V(2,3)" -> V_{2,3}
HamElement parse_ham(const std::string& text);

/// Multivariate polynomial in x_1..x_k, y_1..y_k; exponent vector of length 2k.
using Poly = std::map<std::vector<int>, Rat>;

/// First-order polynomial differential operator: sum of coef * monomial * d/d(var).
struct PolyDiffOp {
    int nvars = 0; // 2k
    struct Term {
        std::vector<int> mono;
        int var;
        Rat coef;
    };
    std::vector<Term> terms;

    void add(const std::vector<int>& mono, int var, const Rat& c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const PolyDiffOp& o) const;
};

Poly apply_diffop(const PolyDiffOp& op, const Poly& f);
PolyDiffOp diffop_bracket(const PolyDiffOp& A, const PolyDiffOp& B);
PolyDiffOp diffop_sub(const PolyDiffOp& A, const PolyDiffOp& B);

/// sum_i ( n y_i^{n-1} x_i^m d/dx_i - m x_i^{m-1} y_i^n d/dy_i )
PolyDiffOp vmn_as_diffop(int m, int n, int k);
PolyDiffOp ham_as_diffop(const HamElement& h, int k);

struct H2Options {
    int index_cap = 4;
    int degree_cap = 6;
    int jobs = 1;
};

/// Jacobi identity on all triples with indices <= index_cap.
SuiteReport h2_jacobi(const H2Options& opt);
/// structure constants against the differential-operator realization
SuiteReport h2_realization(const H2Options& opt);
/// S_n-equivariance (k <= 3) and preservation of the diagonal-vanishing ideal
/// J_2 for k = 2
SuiteReport h2_equivariance(const H2Options& opt);

} // namespace surfw

#endif
