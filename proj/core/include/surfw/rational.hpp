#ifndef SURFW_RATIONAL_HPP
#define SURFW_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace surfw {

/// Exact rational coefficient type. All algebra in the library is exact;
/// there is no floating point anywhere in the core.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat_pow(const Rat& base, unsigned long e)
{
    Rat out(1);
    Rat b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

/// n! as an exact rational.
inline Rat factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

inline Rat binomial(long n, unsigned k)
{
    // generalized binomial, polynomial in n
    Rat num(1);
    for (unsigned i = 0; i < k; ++i) num *= Rat(n - long(i));
    return num / factorial(k);
}

/// Parses "num" or "num/den".
inline Rat parse_rat(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// 64-bit mixing for container hashes
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v)
{
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace surfw

#endif
