#include "surfw/symfunc.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace surfw {

namespace {

void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

// deques keep references stable while the caches grow
std::deque<std::vector<Partition>> g_partitions;
std::deque<SymFunc> g_h;
std::mutex g_mutex;

} // namespace

const std::vector<Partition>& partitions(int n)
{
    if (n < 0) throw std::invalid_argument("partitions: negative n");
    std::lock_guard<std::mutex> lock(g_mutex);
    while (int(g_partitions.size()) <= n) {
        int m = int(g_partitions.size());
        std::vector<Partition> out;
        Partition cur;
        gen_partitions(m, m, cur, out);
        g_partitions.push_back(std::move(out));
    }
    return g_partitions[size_t(n)];
}

Rat z_lambda(const Partition& p)
{
    Rat z(1);
    int run = 0;
    int prev = -1;
    for (int part : p) {
        if (part == prev) {
            ++run;
        } else {
            prev = part;
            run = 1;
        }
        z *= Rat(part) * Rat(run);
    }
    return z;
}

const SymFunc& h_to_p(int n)
{
    if (n < 0) throw std::invalid_argument("h_to_p: negative n");
    partitions(n); // warm the partition cache outside the loop below
    std::lock_guard<std::mutex> lock(g_mutex);
    while (int(g_h.size()) <= n) {
        int m = int(g_h.size());
        SymFunc f;
        for (const Partition& lam : g_partitions[size_t(m)])
            f[lam] = Rat(1) / z_lambda(lam);
        g_h.push_back(std::move(f));
    }
    return g_h[size_t(n)];
}

} // namespace surfw
