#ifndef SURFW_FOCK_HPP
#define SURFW_FOCK_HPP

#include "surfw/ring.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace surfw {

/// One symbol p_n(b), b a basis index of the ring. Packed so that the natural
/// integer order is the canonical (n, basis) lexicographic generator order.
struct Generator {
    int n;
    int b;
    static std::uint32_t pack(int n, int b) { return (std::uint32_t(n) << 8) | std::uint32_t(b); }
    static Generator unpack(std::uint32_t g) { return {int(g >> 8), int(g & 0xff)}; }
};

/// Sorted product of generators; odd generators never repeat.
class FockMonomial {
public:
    FockMonomial() = default;
    explicit FockMonomial(std::vector<std::uint32_t> sorted) : gens_(std::move(sorted)) {}

    const std::vector<std::uint32_t>& gens() const { return gens_; }
    bool is_one() const { return gens_.empty(); }
    int length() const { return int(gens_.size()); }
    /// sum of the symmetric-function indices n_i
    int weight() const;
    int degree(const RingSpec& ring) const;
    bool odd(const RingSpec& ring) const;

    bool operator<(const FockMonomial& o) const { return gens_ < o.gens_; }
    bool operator==(const FockMonomial& o) const { return gens_ == o.gens_; }

    std::string str(const RingSpec& ring) const;

private:
    std::vector<std::uint32_t> gens_;
};

/// Sparse element of the Fock space Lambda_S.
class FockElement {
public:
    using Terms = std::map<FockMonomial, Rat>;

    FockElement() = default;
    explicit FockElement(const RingSpec* ring) : ring_(ring) {}
    static FockElement one(const RingSpec& ring);
    /// p_n(xi); linear in xi.
    static FockElement generator(const RingSpec& ring, int n, const RingElement& xi);

    const RingSpec* ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return int(terms_.size()); }

    void add(const FockMonomial& m, const Rat& c);
    FockElement& operator+=(const FockElement& o);
    FockElement& operator-=(const FockElement& o);
    FockElement operator*(const Rat& c) const;
    friend FockElement operator+(FockElement a, const FockElement& b) { a += b; return a; }
    friend FockElement operator-(FockElement a, const FockElement& b) { a -= b; return a; }
    bool operator==(const FockElement& o) const;

    /// graded pieces; key = degree
    std::map<int, FockElement> by_degree() const;
    /// -1 zero, 0 even, 1 odd, 2 mixed
    int parity() const;

    std::string str() const;

private:
    const RingSpec* ring_ = nullptr;
    Terms terms_;
};

/// Super-commutative product with Koszul signs; zero if an odd generator
/// repeats. Returns the canonical monomial and the sign into `sign`.
bool mul_monomials(const RingSpec& ring, const FockMonomial& a, const FockMonomial& b,
                   FockMonomial& out, int& sign);

FockElement fock_mul(const FockElement& f, const FockElement& g);

/// Canonicalizes an unsorted generator word (with sign), e.g. for parsers.
FockElement fock_word(const RingSpec& ring, const std::vector<Generator>& word, const Rat& coeff);

/// Lossless text form, e.g. "3/2 * p2(w)*p3(1) + -1 * p1(g1)".
std::string fock_to_text(const FockElement& f);
FockElement fock_from_text(const RingSpec& ring, const std::string& text);

/// Antisymmetrization over parabolic eigenvalue labels, acting through the
/// ring's S_r action on generator arguments.
FockElement fock_asym(const FockElement& f);

} // namespace surfw

#endif
