#pragma once

#include <string>
#include <vector>

#include "topvert/hodge.hpp"
#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"
#include "topvert/report.hpp"
#include "topvert/series_poly.hpp"

namespace topvert {

// exp G(p1, p2, p3; N) with p3_k = k t_k. Families p1, p2 carry formal
// parameters; family t carries the times (weight of t_k is k).
struct TauSeries {
    int N = 1;
    int lattice = 1;
    SeriesPoly<QScalar> body;

    int degree() const { return body.cutoffs()[2]; }
    QScalar one() const { return QScalar::constant(lattice, Rational(1)); }
};

struct KpConfig {
    int p1_weight = 1;
    int p2_weight = 2;
    int degree = 6;
    HodgeConfig hodge;
};

TauSeries build_tau(int N, const KpConfig& cfg);
// Wraps a series in (p1, p2, t) as a tau series on lattice 1.
TauSeries tau_from_series(int N, SeriesPoly<QScalar> body, int lattice = 1);

// Coefficients c_lambda of T = sum c_lambda s_lambda[t], as series in (p1, p2), for |lambda| <= size_bound.
std::map<Partition, SeriesPoly<QScalar>> schur_coefficients(const TauSeries& T, int size_bound);

// d^2 log T / dt_k dt_{m(N+1)} = 0 for 1 <= k <= k_max, 1 <= m <= m_max. Throws std::out_of_range listing
// the feasible pairs when k + m(N+1) exceeds the degree. A note records whether dT/dt_{m(N+1)} = 0 also holds.
CheckReport check_reduction_condition(const TauSeries& T, int k_max, int m_max, int min_width, int window);
// c_0^{r-1} c_lambda = det(c_{(a_i|b_j)}) for every lambda of Frobenius rank r >= 2, |lambda| <= size_bound.
CheckReport check_plucker(const TauSeries& T, int size_bound, int min_width, int window);

// Deliberately damaged copies of T used as negative controls.
enum class TauCorruption { bump_t1_tN1, add_s22, bump_t2_squared };
std::string corruption_name(TauCorruption c);
std::vector<TauCorruption> all_corruptions();
TauSeries corrupt_tau(const TauSeries& T, TauCorruption c);

// Reduction condition for k <= 2, m = 1, Plucker certificate, and the requirement that every corruption is
// rejected by the certificate.
CheckReport verify_kp(int N, const KpConfig& cfg);

}  // namespace topvert
