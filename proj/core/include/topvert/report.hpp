#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "topvert/qscalar.hpp"

namespace topvert {

enum class CheckStatus { pass, fail, inconclusive };

std::string status_name(CheckStatus s);
// fail dominates inconclusive, which dominates pass.
CheckStatus worst(CheckStatus a, CheckStatus b);

struct CheckFailure {
    std::string where;
    std::string lhs;
    std::string rhs;
    std::string detail;
};

struct CheckReport {
    std::string identity;
    nlohmann::json params = nlohmann::json::object();
    long long pairs_checked = 0;
    CheckStatus status = CheckStatus::pass;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes;

    // Failures beyond this many are counted but not stored.
    static constexpr std::size_t kMaxStoredFailures = 20;
    long long failure_count = 0;

    bool passed() const { return status == CheckStatus::pass; }
    void record(CheckStatus s, const std::string& where, const std::string& lhs = {}, const std::string& rhs = {},
                const std::string& detail = {});
    // Compares two series and records the outcome under `where`.
    void compare(const std::string& where, const QScalar& lhs, const QScalar& rhs, int min_width, int window);
    void compare_exact(const std::string& where, const std::string& lhs, const std::string& rhs);
    void merge(const CheckReport& other);
};

nlohmann::json to_json(const CheckReport& r);

// Combined status of several reports.
CheckStatus overall(const std::vector<CheckReport>& reports);

// Runs body(i) for i in [0, n) on `jobs` workers; exceptions are rethrown
// after all workers stop.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace topvert
