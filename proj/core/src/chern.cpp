#include "surfw/chern.hpp"

#include <mutex>
#include <stdexcept>

namespace surfw {

CPoly& CPoly::operator+=(const CPoly& o)
{
    for (const auto& [m, c] : o.terms_) {
        Rat& v = terms_[m];
        v += c;
        if (surfw::is_zero(v)) terms_.erase(m);
    }
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o)
{
    for (const auto& [m, c] : o.terms_) {
        Rat& v = terms_[m];
        v -= c;
        if (surfw::is_zero(v)) terms_.erase(m);
    }
    return *this;
}

CPoly CPoly::operator*(const CPoly& o) const
{
    CPoly out;
    for (const auto& [m1, c1v] : terms_)
        for (const auto& [m2, c2v] : o.terms_) {
            std::pair<int, int> m{m1.first + m2.first, m1.second + m2.second};
            Rat& v = out.terms_[m];
            v += c1v * c2v;
            if (surfw::is_zero(v)) out.terms_.erase(m);
        }
    return out;
}

CPoly CPoly::operator*(const Rat& c) const
{
    CPoly out;
    if (surfw::is_zero(c)) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

CPoly CPoly::div_c2() const
{
    CPoly out;
    for (const auto& [m, v] : terms_) {
        if (m.second < 1) throw std::logic_error("CPoly::div_c2: not divisible by c2");
        out.terms_[{m.first, m.second - 1}] = v;
    }
    return out;
}

namespace {

std::vector<CPoly> build_tau(int kmax)
{
    // power sums q_k = t1^k + t2^k obey q_k = c1 q_{k-1} - c2 q_{k-2};
    // tau_k = (c1^k - q_k)/c2 follows the same shape plus a c1-power term.
    std::vector<CPoly> t(size_t(kmax) + 1);
    if (kmax >= 2) t[2] = CPoly(Rat(2));
    CPoly c1p = CPoly::c1(), c2p = CPoly::c2();
    // tau_k = c1 tau_{k-1} - c2 tau_{k-2} + c1^{k-2}, from the power-sum
    // recurrence q_k = c1 q_{k-1} - c2 q_{k-2}
    CPoly c1pow = c1p; // c1^{k-2} while building t[k]
    for (int k = 3; k <= kmax; ++k) {
        t[k] = c1p * t[k - 1] - c2p * t[k - 2] + c1pow;
        c1pow = c1pow * c1p;
    }
    return t;
}

std::vector<CPoly> g_tau;
std::vector<CPoly> g_todd;
std::mutex g_mutex;

} // namespace

const CPoly& tau(int k)
{
    std::lock_guard<std::mutex> lock(g_mutex);
    if (k < 0) throw std::invalid_argument("tau: negative index");
    if (int(g_tau.size()) <= k) {
        int kmax = std::max(k, 16);
        auto fresh = build_tau(kmax);
        // direct definition as a cross-check on first build
        if (g_tau.empty()) {
            // (t1+t2)^3 - t1^3 - t2^3 = 3 t1 t2 (t1+t2)
            CPoly expect3 = CPoly::c1() * Rat(3);
            if (!(fresh[3] == expect3)) throw std::logic_error("tau recurrence broken");
        }
        g_tau = std::move(fresh);
    }
    return g_tau[size_t(k)];
}

const CPoly& todd_cpoly(int k)
{
    if (k < 0) throw std::invalid_argument("todd_cpoly: negative index");
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        if (int(g_todd.size()) > k) return g_todd[size_t(k)];
    }
    // (1-e^{-t1 x})(1-e^{-t2 x}) = c2 x^2 G(x) with
    // G(x) = sum_{j>=0} (-1)^j tau_{j+2} x^j / (j+2)!; Todd = 1/G.
    int kmax = std::max(k, 12);
    std::vector<CPoly> G(size_t(kmax) + 1);
    for (int j = 0; j <= kmax; ++j) {
        Rat c = Rat((j % 2 == 0) ? 1 : -1) / factorial(unsigned(j + 2));
        G[size_t(j)] = tau(j + 2) * c;
    }
    std::vector<CPoly> inv(size_t(kmax) + 1);
    inv[0] = CPoly(Rat(1)); // G(0) = tau_2/2 = 1
    for (int n = 1; n <= kmax; ++n) {
        CPoly acc;
        for (int j = 1; j <= n; ++j) acc += G[size_t(j)] * inv[size_t(n - j)];
        inv[size_t(n)] = CPoly() - acc;
    }
    std::lock_guard<std::mutex> lock(g_mutex);
    if (int(g_todd.size()) <= kmax) g_todd = std::move(inv);
    return g_todd[size_t(k)];
}

} // namespace surfw
