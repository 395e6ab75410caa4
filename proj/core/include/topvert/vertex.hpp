#pragma once

#include <vector>

#include "topvert/fock_checks.hpp"
#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"
#include "topvert/rational.hpp"
#include "topvert/report.hpp"

namespace topvert {

// Series below live on lattice 1 (u = q^{1/2}); window and comparison
// widths are in those units.
struct VertexConfig {
    int window = 80;
    int compare_window = 40;
    int min_width = 20;
    int jobs = 1;
};

// C_mu(q) = q^{kappa(mu1)/2} s_{t mu2}(q^{-rho}) sum_eta s_{mu1/eta}(q^{-t mu2-rho}) s_{t mu3/eta}(q^{-mu2-rho}).
QScalar vertex_C(const PartitionTriple& mu, int window);
// q^{-sum kappa/2} C_mu.
QScalar vertex_C_tilde(const PartitionTriple& mu, int window);

// q^{(1+tau)k1/2 - k2/(2 tau) + tau k3/(2(1+tau))} <mu1|G_{t mu2}(tau)|t mu3>, on lattice_for_tau(tau).
QScalar vertex_C_via_fock(FockContext& ctx, const PartitionTriple& mu, const Rational& tau);

// sum_{|xi| = |eta1|} chi_{eta1}(xi) chi_{eta3}(2 xi) / z_xi; zero unless |eta3| = 2|eta1|.
Rational quadratic_character_sum(const Partition& eta1, const Partition& eta3);

// Closed-form three-partition coefficient as an LR-pruned quintuple sum.
QScalar lllz_coefficient(const PartitionTriple& mu, int window);

// tildeC_mu = q^{-sum kappa/2} C_mu for every triple of total weight <= bound.
CheckReport verify_theorem1(int weight_bound, const VertexConfig& cfg);
// C_{(mu1,mu2,mu3)} = C_{(mu2,mu3,mu1)} for every triple of total weight <= bound.
CheckReport verify_cyclic(int weight_bound, const VertexConfig& cfg);
// tau = 1 reduction of tildeC_mu to two-partition coefficients, both sides from vertex_C.
CheckReport verify_reduction_C(const PartitionTriple& mu, const VertexConfig& cfg);
CheckReport verify_reduction_C_all(int weight_bound, const VertexConfig& cfg);
// C_{(t nu+, 0, nu3)} = C_{(nu3, t nu+, 0)} = C_{(0, nu3, t nu+)} = q^{kappa(nu3)/2} s_{nu3}(q^{-nu+-rho}) s_{nu+}(q^{-rho}).
CheckReport verify_two_leg_chain(int weight_bound, const VertexConfig& cfg);
// vertex_C_via_fock(tau) = vertex_C for each tau and |mu| <= bound.
CheckReport verify_tau_independence(FockContext& ctx, int weight_bound, const std::vector<Rational>& taus);

}  // namespace topvert
