#pragma once

#include <climits>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"
#include "topvert/symmetric.hpp"

namespace topvert {

enum class OpKind {
    J,                // J_m
    K,                // cut-and-join
    L0,
    W0,
    V,                // V^{(k)}_m; V^{(0)}_m = J_m
    GammaPlus,
    GammaMinus,
    GammaPrimePlus,
    GammaPrimeMinus,
    QPowerK,          // q^{gamma K}
    QPowerJ0,         // q^{gamma J_0}: identity on charge 0
    QConst,           // coeff * q^{gamma}
    SchurConst,       // s_alpha(q^{-rho})
    Composite,        // factors applied right to left
};

struct Operator {
    OpKind kind = OpKind::Composite;
    int k = 0;
    int m = 0;
    Rational gamma;
    Rational coeff = Rational(1);
    Specialization spec;
    Partition alpha;
    std::vector<Operator> factors;  // leftmost first

    std::string key() const;
};

namespace op {
Operator J(int m);
Operator K();
Operator L0();
Operator W0();
Operator V(int k, int m);
Operator gamma_minus(const Specialization& s);
Operator gamma_plus(const Specialization& s);
Operator gamma_prime_minus(const Specialization& s);
Operator gamma_prime_plus(const Specialization& s);
Operator q_power_K(const Rational& gamma);
Operator q_power_J0(const Rational& gamma);
Operator q_const(const Rational& exponent, const Rational& coeff = Rational(1));
Operator schur_const(const Partition& alpha);
Operator product(std::vector<Operator> factors);
// Transpose with respect to the basis pairing <lambda|mu> = delta.
Operator transpose(const Operator& o);

// L_alpha = s_alpha(q^{-rho}) Gamma_-(q^{-alpha-rho}) Gamma_+(q^{-alpha'-rho}); primed analogue uses Gamma'.
Operator L(const Partition& alpha);
Operator L_prime(const Partition& alpha);
// G_alpha(tau) = q^{-kappa(alpha)/(2 tau)} q^{-tau K/2} L_alpha q^{tau K/(2(1+tau))}.
Operator G(const Partition& alpha, const Rational& tau);
// G'_alpha(tau) = q^{-kappa(alpha)/(2 tau)} q^{tau K/2} L'_alpha q^{-tau K/(2(1+tau))}.
Operator G_prime(const Partition& alpha, const Rational& tau);
}  // namespace op

// Finite combination of charge-0 basis states. Components of weight
// <= exact_upto are exact; heavier ones may be missing because an earlier
// step was truncated at `cutoff`. exact_upto == kComplete means nothing was
// dropped.
struct FockVector {
    static constexpr int kComplete = INT_MAX;

    std::map<Partition, QScalar> terms;
    int cutoff = 0;
    int exact_upto = kComplete;

    bool dropped() const { return exact_upto != kComplete; }
    bool component_exact(const Partition& lambda) const { return lambda.weight() <= exact_upto; }
    // Zero on `lattice` when absent.
    QScalar component(const Partition& lambda, int lattice) const;
    void add(const Partition& lambda, const QScalar& c);

    static FockVector basis(const Partition& mu, int cutoff, int lattice);
};

enum class Side { ket, bra };

struct FockConfig {
    int lattice = 1;
    int window = 80;      // relative precision requested from primitives, lattice units
    int compare_window = 40;
    int min_width = 20;
    int cutoff_margin = 2;
    int max_cutoff = 14;
};

class FockEngine {
public:
    explicit FockEngine(FockConfig cfg);

    const FockConfig& config() const { return cfg_; }
    int lattice() const { return cfg_.lattice; }

    FockVector apply(const Operator& o, const FockVector& v, Side side = Side::ket) const;
    FockVector apply_basis(const Operator& o, const Partition& mu, int cutoff) const;
    // <lambda|o|mu>, extending the intermediate cutoff until two successive
    // values agree on the comparison window. Throws InconclusiveComparison.
    QScalar matrix_element(const Operator& o, const Partition& lambda, const Partition& mu) const;
    QScalar matrix_element_at(const Operator& o, const Partition& lambda, const Partition& mu, int cutoff,
                              bool* exact) const;
    // All components of o|mu> with weight <= max_weight, stabilized like
    // matrix_element. Zero components are omitted.
    std::map<Partition, QScalar> column(const Operator& o, const Partition& mu, int max_weight) const;
    void clear_cache() const;

    QScalar q_pow(const Rational& exponent, const Rational& coeff = Rational(1)) const;
    QScalar one() const { return QScalar::constant(cfg_.lattice, Rational(1)); }
    QScalar zero() const { return QScalar(cfg_.lattice); }
    QScalar skew(const Partition& lam, const Partition& mu, const Specialization& s) const;
    QScalar schur_rho(const Partition& alpha) const;
    // Eigenvalue of V^{(k)}_0 on |lambda> from the Maya diagram.
    QScalar v0_eigenvalue(int k, const Partition& lambda) const;

private:
    FockVector apply_elementary(const Operator& o, const FockVector& v) const;
    FockVector gamma_basis(const Operator& o, const Partition& mu, int cutoff) const;

    FockConfig cfg_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<std::string, Partition, int>, FockVector> cache_;
};

// phi_k(mu) in closed form; k != 0.
QScalar phi_value(int k, const Partition& mu, int lattice, int window);

}  // namespace topvert
