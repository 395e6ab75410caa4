#include "topvert/report.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace topvert {

std::string status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

CheckStatus worst(CheckStatus a, CheckStatus b) {
    if (a == CheckStatus::fail || b == CheckStatus::fail) return CheckStatus::fail;
    if (a == CheckStatus::inconclusive || b == CheckStatus::inconclusive) return CheckStatus::inconclusive;
    return CheckStatus::pass;
}

void CheckReport::record(CheckStatus s, const std::string& where, const std::string& lhs, const std::string& rhs,
                         const std::string& detail) {
    ++pairs_checked;
    status = worst(status, s);
    if (s == CheckStatus::pass) return;
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) failures.push_back({where, lhs, rhs, detail});
}

void CheckReport::compare(const std::string& where, const QScalar& lhs, const QScalar& rhs, int min_width,
                          int window) {
    const auto c = compare_on_window(lhs, rhs, min_width, window);
    switch (c.status) {
    case WindowComparison::Status::equal: record(CheckStatus::pass, where); break;
    case WindowComparison::Status::different:
        record(CheckStatus::fail, where, lhs.str(), rhs.str(),
               "first difference at exponent " + std::to_string(*c.first_difference) + "/" +
                   std::to_string(2 * lhs.lattice()));
        break;
    case WindowComparison::Status::inconclusive:
        record(CheckStatus::inconclusive, where, lhs.str(), rhs.str(),
               "common window width " + std::to_string(c.width()) + " below " + std::to_string(min_width));
        break;
    }
}

void CheckReport::compare_exact(const std::string& where, const std::string& lhs, const std::string& rhs) {
    record(lhs == rhs ? CheckStatus::pass : CheckStatus::fail, where, lhs, rhs);
}

void CheckReport::merge(const CheckReport& other) {
    pairs_checked += other.pairs_checked;
    status = worst(status, other.status);
    failure_count += other.failure_count;
    for (const auto& f : other.failures)
        if (failures.size() < kMaxStoredFailures) failures.push_back(f);
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["pairs_checked"] = r.pairs_checked;
    j["status"] = status_name(r.status);
    j["failure_count"] = r.failure_count;
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : r.failures) {
        nlohmann::json fj{{"where", f.where}};
        if (!f.lhs.empty()) fj["lhs"] = f.lhs;
        if (!f.rhs.empty()) fj["rhs"] = f.rhs;
        if (!f.detail.empty()) fj["detail"] = f.detail;
        fs.push_back(std::move(fj));
    }
    j["failures"] = std::move(fs);
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

CheckStatus overall(const std::vector<CheckReport>& reports) {
    CheckStatus s = CheckStatus::pass;
    for (const auto& r : reports) s = worst(s, r.status);
    return s;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = n;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace topvert
