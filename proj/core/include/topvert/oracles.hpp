#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"
#include "topvert/rational.hpp"
#include "topvert/report.hpp"

namespace topvert {

// Brute-force references that share no code with the engine paths they check.
namespace oracle {

// Integer polynomial in n variables, keyed by exponent vectors.
using Poly = std::map<std::vector<int>, long long>;

Poly power_sum_poly(const Partition& nu, int n);
// Schur polynomial in n variables by semistandard tableau enumeration.
Poly schur_poly(const Partition& mu, int n);
Poly multiply(const Poly& a, const Poly& b);
// Schur expansion of a symmetric polynomial by repeatedly peeling the lex-leading monomial x^eta with s_eta.
std::map<Partition, long long> schur_expand(Poly f, int n);

// chi_lambda(nu) from the expansion of p_nu in |nu| variables.
long long character(const Partition& lambda, const Partition& nu);
// c^eta_{mu nu} from the product s_mu s_nu in l(mu) + l(nu) variables.
long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& eta);

// Border strips of length k added to (adding) or removed from alpha, found geometrically: the skew diagram is
// edge-connected with no 2x2 block. The integer is (-1)^{rows - 1}.
std::vector<std::pair<Partition, int>> border_strips(const Partition& alpha, int k, bool adding);

// h_m(q^{-nu-rho}) from the explicit product prod_i (1 - x_i z)^{-1}, truncated below absolute exponent hi
// (lattice 1 units).
QScalar h_direct(int m, const Partition& prefix, int hi);

class WindowOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Charge-0 states on modes psi_j, jlo <= j <= jhi; modes above jhi are filled, modes below jlo are empty.
class FermionWindow {
public:
    static constexpr int kMaxSites = 24;
    FermionWindow(int jlo, int jhi);
    // Window that holds every partition of weight <= max_weight under mode shifts up to max_shift.
    static FermionWindow for_weight(int max_weight, int max_shift);

    int sites() const { return jhi_ - jlo_ + 1; }
    // <lambda| sum_n f(n) :psi_{m-n} psi*_n: |mu> with f(n) = q^{k n} (k = 0 gives J_m), times q^{-k(m+1)/2},
    // minus the constant q^{k/2}/(1-q^k) when m = 0 and k != 0.
    QScalar v_element(int k, int m, const Partition& lambda, const Partition& mu, int window) const;
    // <lambda| sum_n c(n) :psi_{-n} psi*_n: |lambda> for the weights of K, L_0 and W_0.
    Rational k_eigenvalue(const Partition& lambda) const;
    Rational l0_eigenvalue(const Partition& lambda) const;
    Rational w0_eigenvalue(const Partition& lambda) const;

private:
    struct State {
        std::vector<int> modes;  // occupied window modes, increasing
    };
    State state_of(const Partition& lambda) const;
    // psi_a psi*_b |s>, with sign; false when it vanishes.
    bool hop(const State& s, int from, int to, State& out, int& sign) const;
    Rational diagonal(const Partition& lambda, Rational (*weight)(int n)) const;

    int jlo_;
    int jhi_;
};

}  // namespace oracle

struct OracleBounds {
    int character_degree = 6;
    int ribbon_weight = 6;
    int lr_weight = 8;
    int h_degree = 10;
    int fock_weight = 5;
    int lllz_weight = 3;
    int window = 40;
    int min_width = 20;
    int jobs = 1;
};

CheckReport oracle_characters(const OracleBounds& b);
CheckReport oracle_ribbons(const OracleBounds& b);
CheckReport oracle_lr(const OracleBounds& b);
CheckReport oracle_h_tail(const OracleBounds& b);
CheckReport oracle_fock_window(const OracleBounds& b);
CheckReport oracle_lllz_unpruned(const OracleBounds& b);
std::vector<CheckReport> run_oracles(const OracleBounds& b);

// Runs a fast battery of suites under every mutant; a mutant passes the control when at least one suite fails.
// Notes list the suites that caught each mutant.
CheckReport mutation_controls(int jobs = 1);

// lllz_coefficient re-summed with unconstrained index loops over the oracle LR and character tables.
QScalar lllz_unpruned(const PartitionTriple& mu, int window);

}  // namespace topvert
