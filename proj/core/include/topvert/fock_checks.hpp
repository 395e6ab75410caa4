#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "topvert/fock.hpp"
#include "topvert/report.hpp"

namespace topvert {

// One FockEngine per exponent lattice, built lazily from a base config.
class FockContext {
public:
    explicit FockContext(FockConfig base = {}, int jobs = 1, int max_boost = 2)
        : base_(base), jobs_(jobs), max_boost_(max_boost) {}
    // boost b doubles the primitive and comparison windows b times.
    const FockEngine& engine(int lattice, int boost = 0);
    const FockConfig& base() const { return base_; }
    int jobs() const { return jobs_; }
    int max_boost() const { return max_boost_; }

    // Runs body(engine) and reruns it with larger windows while the outcome
    // is inconclusive.
    template <class Body>
    CheckReport retrying(int lattice, Body&& body) {
        CheckReport r = body(engine(lattice, 0));
        for (int b = 1; b <= max_boost_ && r.status == CheckStatus::inconclusive; ++b) {
            r = body(engine(lattice, b));
            r.notes.push_back("window boosted " + std::to_string(b) + "x");
        }
        return r;
    }

private:
    FockConfig base_;
    int jobs_;
    int max_boost_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, std::unique_ptr<FockEngine>> engines_;
};

struct OpTerm {
    QScalar coeff;
    Operator op;
};
using OpSum = std::vector<OpTerm>;

// Compares <lambda|lhs|mu> with <lambda|rhs|mu> for all |lambda|, |mu| <= max_weight.
void compare_operators(const FockEngine& e, CheckReport& report, const std::string& label, const OpSum& lhs,
                       const OpSum& rhs, int max_weight);

enum class ShiftKind { basic1, basic2, basic3, gen1, gen2, gen3, heis1, heis2, A_tau, B_tau };
std::string shift_kind_name(ShiftKind k);
std::vector<ShiftKind> all_shift_kinds();

struct ShiftParams {
    Partition alpha;
    int k = 1;
    int m = 0;
    Rational gamma = Rational(1, 2);
    Rational tau = Rational(1);
};

// Smallest lattice carrying every q-exponent a tau-dependent operator produces.
int lattice_for_tau(const Rational& tau);

// Single instance of an identity; throws std::invalid_argument when the
// parameters are outside the identity's range.
CheckReport check_shift_symmetry(FockContext& ctx, ShiftKind kind, const ShiftParams& p, int max_weight);

struct ShiftSweep {
    int max_alpha = 3;
    int max_k = 2;
    int max_m = 2;
    int max_weight = 4;
    std::vector<Rational> taus = {Rational(1), Rational(2), Rational(1, 2)};
};
// Every admissible parameter combination of one identity, merged.
CheckReport sweep_shift_symmetry(FockContext& ctx, ShiftKind kind, const ShiftSweep& sweep);

// [V^(k)_m, V^(l)_n] against its closed form for |k|,|l|,|m|,|n| <= bound.
CheckReport check_quantum_torus(FockContext& ctx, int bound, int max_weight);
// <lambda|Gamma_+(x)|mu> = <mu|Gamma_-(x)|lambda> for x = q^{-nu-rho}, |nu| <= 2.
CheckReport check_gamma_adjointness(FockContext& ctx, int max_weight);
// Gamma_-(q^{-rho}) Gamma_+(q^{-rho}) is symmetric on |alpha|, |beta| <= max_weight.
CheckReport check_self_adjoint(FockContext& ctx, int max_weight);
// q^{K/2} Gamma_- Gamma_+ |t alpha> = s_{t alpha}(q^{-rho}) Gamma'_-(q^{-alpha-rho})|0>.
CheckReport check_exchange_formula(FockContext& ctx, const Partition& alpha, int max_weight);
// <beta|G_alpha(-1/(1+tau))|gamma> = <gamma|G_{t alpha}(1/tau)|beta>.
CheckReport check_transpose_property(FockContext& ctx, const Rational& tau, int max_alpha, int max_weight);
// Generating function of G_alpha(tau) (or G') against its triple-product form, tau = 1/N.
CheckReport check_factorization(FockContext& ctx, int N, bool primed, int t_degree, int max_weight);
// G_0(1/N) J_{-m(N+1)} = (-1)^m J_{-mN} G_0(1/N).
CheckReport check_shifted_flow(FockContext& ctx, int N, int max_m, int max_weight);

}  // namespace topvert
