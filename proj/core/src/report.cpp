#include "surfw/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <sstream>
#include <thread>

namespace surfw {

std::string SuiteReport::summary() const
{
    std::ostringstream os;
    os << suite << " on " << instance << ": " << count("OK") << " ok";
    if (int f = count("FAIL")) os << ", " << f << " FAILED";
    if (int s = count("SKIP")) os << ", " << s << " skipped";
    return os.str();
}

std::string SuiteReport::to_json() const
{
    nlohmann::json j;
    j["suite"] = suite;
    j["instance"] = instance;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : cases)
        cs.push_back({{"id", c.id}, {"status", c.status}, {"detail", c.detail}});
    j["cases"] = cs;
    j["summary"] = summary();
    return j.dump(2);
}

std::string SuiteReport::to_text() const
{
    std::ostringstream os;
    for (const auto& c : cases) {
        os << c.id << " : " << c.status;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    os << summary() << "\n";
    return os.str();
}

void parallel_tasks(int jobs, int n, const std::function<void(int, int)>& fn)
{
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, std::max(1, n));
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) fn(0, i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(size_t(jobs), nullptr);
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w]() {
            try {
                for (int i = w; i < n; i += jobs) fn(w, i);
            } catch (...) {
                errors[size_t(w)] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

int default_jobs()
{
    if (const char* env = std::getenv("SURFW_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

} // namespace surfw
