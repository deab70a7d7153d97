#ifndef SURFW_CHERN_HPP
#define SURFW_CHERN_HPP

#include "surfw/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace surfw {

/// Polynomial in the Chern classes c1, c2 with rational coefficients.
/// Symmetric polynomials in the formal Chern roots t1, t2 are always kept in
/// this basis (c1 = t1 + t2, c2 = t1 t2), so nothing downstream ever sees a
/// bare root.
class CPoly {
public:
    // (a, b) -> coefficient of c1^a c2^b
    using Terms = std::map<std::pair<int, int>, Rat>;

    CPoly() = default;
    explicit CPoly(const Rat& c) { if (!surfw::is_zero(c)) terms_[{0, 0}] = c; }
    static CPoly c1() { CPoly p; p.terms_[{1, 0}] = 1; return p; }
    static CPoly c2() { CPoly p; p.terms_[{0, 1}] = 1; return p; }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    CPoly operator*(const CPoly& o) const;
    CPoly operator*(const Rat& c) const;
    friend CPoly operator+(CPoly a, const CPoly& b) { a += b; return a; }
    friend CPoly operator-(CPoly a, const CPoly& b) { a -= b; return a; }
    bool operator==(const CPoly& o) const { return terms_ == o.terms_; }

    /// Exact division by c2; throws if not divisible.
    CPoly div_c2() const;

private:
    Terms terms_;
};

/// tau_k = ((t1+t2)^k - t1^k - t2^k) / (t1 t2), the symmetric quotient behind
/// the divided-difference operator.  tau_2 = 2, tau_3 = 3 c1, ...
const CPoly& tau(int k);

/// Coefficients of the Todd series t1 t2 x^2 / ((1 - e^{-t1 x})(1 - e^{-t2 x}))
/// as polynomials in c1, c2; todd_cpoly(k) is the x^k coefficient.
const CPoly& todd_cpoly(int k);

} // namespace surfw

#endif
