#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "topvert/fock_checks.hpp"
#include "topvert/hodge.hpp"
#include "topvert/kp.hpp"
#include "topvert/oracles.hpp"
#include "topvert/vertex.hpp"

namespace {

using namespace topvert;

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<std::vector<CheckReport>()> run;
};

std::string summarize(const std::vector<CheckReport>& reports) {
    long long pairs = 0, failures = 0;
    for (const auto& r : reports) {
        pairs += r.pairs_checked;
        failures += r.failure_count;
    }
    std::ostringstream os;
    os << reports.size() << " reports, " << pairs << " comparisons, " << failures << " failures";
    for (const auto& r : reports)
        if (r.status != CheckStatus::pass) {
            os << "; " << r.identity << " " << status_name(r.status);
            if (!r.failures.empty()) os << " at " << r.failures.front().where;
        }
    return os.str();
}

std::vector<CheckReport> theorem1() { return {verify_theorem1(4, VertexConfig{})}; }

std::vector<CheckReport> cyclic() { return {verify_cyclic(5, VertexConfig{}), verify_two_leg_chain(4, VertexConfig{})}; }

std::vector<CheckReport> shift() {
    FockContext ctx;
    ShiftSweep sweep;
    std::vector<CheckReport> out;
    for (auto kind : all_shift_kinds()) out.push_back(sweep_shift_symmetry(ctx, kind, sweep));
    out.push_back(check_quantum_torus(ctx, 2, 4));
    return out;
}

std::vector<CheckReport> factorization() {
    FockContext ctx;
    std::vector<CheckReport> out;
    for (int n : {1, 2, 3})
        for (bool primed : {false, true}) out.push_back(check_factorization(ctx, n, primed, 3, 3));
    return out;
}

std::vector<CheckReport> reductions() {
    const HodgeConfig cfg;
    return {verify_reduction_tau1({3, 3, 3}, cfg), verify_reduction_tauN(2, {3, 3, 3}, cfg)};
}

std::vector<CheckReport> quadratic() { return {verify_quadratic_expansion(6)}; }

std::vector<CheckReport> kp() {
    const KpConfig cfg;
    return {verify_kp(1, cfg), verify_kp(2, cfg)};
}

std::vector<CheckReport> oracles() { return run_oracles(OracleBounds{}); }

std::vector<CheckReport> controls() { return {mutation_controls()}; }

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "closed-form three-partition coefficient equals the vertex, total weight <= 4", 300, theorem1},
        {2, "cyclic symmetry of the vertex, total weight <= 5", 120, cyclic},
        {3, "generalized shift symmetries, |k|,|m| <= 2, |alpha| <= 3, |lambda|,|mu| <= 4", 300, shift},
        {4, "factorization at tau = 1, 1/2, 1/3, t-degree <= 3, |lambda|,|mu| <= 3", 600, factorization},
        {5, "reduction formulas at tau = 1 and tau = 2, per-family weight <= 3", 300, reductions},
        {6, "quadratic-exponential Schur expansion, total degree <= 6", 60, quadratic},
        {7, "KP reduction and Plucker certificate, N = 1, 2, t-degree 6", 600, kp},
        {8, "brute-force oracle suite", 900, oracles},
        {9, "every deliberate mutation fails at least one suite", 600, controls},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckReport> reports;
        std::string error;
        try {
            reports = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = seconds <= c.limit_seconds;
        const bool ok = error.empty() && overall(reports) == CheckStatus::pass && in_time;
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
                  << (error.empty() ? summarize(reports) : "error: " + error) << "; " << std::fixed
                  << std::setprecision(1) << seconds << "s of " << c.limit_seconds << "s"
                  << (in_time ? "" : ", over time limit") << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
