#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "topvert/fock_checks.hpp"
#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"
#include "topvert/rational.hpp"
#include "topvert/report.hpp"
#include "topvert/series_poly.hpp"

namespace topvert {

// Families p1, p2, p3; the monomial key of family a lists the indices k of
// the power sums p^{(a)}_k it contains.
using TriSeries = SeriesPoly<QScalar>;
using FamilyCutoffs = std::array<int, 3>;

// Windows are in lattice-1 units; series are moved to the lattice of tau.
struct HodgeConfig {
    int window = 80;
    int compare_window = 40;
    int min_width = 20;
    int jobs = 1;
};

TriSeries make_tri_series(const FamilyCutoffs& cutoffs);

// Exponent of q multiplying tildeC_mu in exp G at w = (1, tau, -1-tau):
// -(1/2) sum_a kappa(mu^a) w_{a+1}/w_a.
Rational expG_weight(const PartitionTriple& mu, const Rational& tau);
// Exponent of q multiplying C_mu in W: -(1/2) sum_a kappa(mu^a)(1 + w_{a+1}/w_a).
Rational W_weight(const PartitionTriple& mu, const Rational& tau);

// Coefficients of s_mu1(p1) s_mu2(p2) s_mu3(p3), on lattice_for_tau(tau).
QScalar expG_schur_coefficient(const PartitionTriple& mu, const Rational& tau, int window);
QScalar W_schur_coefficient(const PartitionTriple& mu, const Rational& tau, int window);

using SchurTable = std::map<PartitionTriple, QScalar>;
// Every triple with |mu^a| <= cutoffs[a] for which keep(mu) holds.
SchurTable schur_table(const FamilyCutoffs& cutoffs, const std::function<bool(const PartitionTriple&)>& keep,
                       const std::function<QScalar(const PartitionTriple&)>& coefficient, int jobs);
// Expands sum c_mu s_mu1 s_mu2 s_mu3 in power sums.
TriSeries schur_to_power_series(const SchurTable& table, const FamilyCutoffs& cutoffs);

TriSeries expG_coefficients(const Rational& tau, const FamilyCutoffs& cutoffs, const HodgeConfig& cfg);
TriSeries W_coefficients(const Rational& tau, const FamilyCutoffs& cutoffs, const HodgeConfig& cfg);

// Compares every coefficient present on either side.
void compare_series(CheckReport& report, const std::string& label, const TriSeries& a, const TriSeries& b,
                    int min_width, int window);

// W = exp G coefficientwise in power sums.
CheckReport verify_W_equals_expG(const Rational& tau, const FamilyCutoffs& cutoffs, const HodgeConfig& cfg);
// exp G(p1,p2,p3;N) = exp G(0,p+,p3;N) exp(sum (-1)^{m+1}/m p1_m p3_{m(N+1)}).
CheckReport verify_reduction_tauN(int N, const FamilyCutoffs& cutoffs, const HodgeConfig& cfg);
inline CheckReport verify_reduction_tau1(const FamilyCutoffs& cutoffs, const HodgeConfig& cfg) {
    return verify_reduction_tauN(1, cutoffs, cfg);
}
// exp(sum (-1)^{m+1}/m p_m(x) p_{2m}(z)) = sum s_{t eta1}(x) s_{eta3}(z) X(eta1, eta3), total degree <= degree.
CheckReport verify_quadratic_expansion(int degree);
// Schur expansion of <0|Gamma_+(x) Gamma'_+(y) G_0(1) Gamma_-(z)|0> with engine matrix elements against the
// closed two-leg form, then W(x,y,z;1) = that matrix element times the quadratic exponential.
CheckReport verify_schur_expansion_prop43(FockContext& ctx, int per_family, const HodgeConfig& cfg);

}  // namespace topvert
