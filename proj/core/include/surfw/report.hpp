#ifndef SURFW_REPORT_HPP
#define SURFW_REPORT_HPP

#include <functional>
#include <string>
#include <vector>

namespace surfw {

struct CaseResult {
    std::string id;
    std::string status; // "OK", "FAIL", "SKIP"
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::string instance;
    std::vector<CaseResult> cases;

    bool all_ok() const
    {
        for (const auto& c : cases)
            if (c.status == "FAIL") return false;
        return true;
    }
    int count(const std::string& status) const
    {
        int n = 0;
        for (const auto& c : cases)
            if (c.status == status) ++n;
        return n;
    }
    std::string summary() const;
    std::string to_json() const;
    std::string to_text() const;
};

/// Runs tasks 0..n-1 on `jobs` workers.  Worker w handles tasks w, w+jobs, ...
/// so result placement is deterministic; the callback gets (worker, task).
void parallel_tasks(int jobs, int n, const std::function<void(int, int)>& fn);

/// Default job count: SURFW_JOBS env var, else hardware concurrency.
int default_jobs();

} // namespace surfw

#endif
