#pragma once

#include <map>

#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"

namespace topvert {

// Alphabet x_i = q^{-nu_i + i - 1/2}. `primed` only tells Fock-space code to
// use transposed skew Schur matrix elements; the alphabet itself is the same.
struct Specialization {
    Partition prefix;
    bool primed = false;

    static Specialization rho() { return {}; }
    static Specialization shifted(const Partition& nu, bool primed = false) { return {nu, primed}; }
    friend bool operator==(const Specialization&, const Specialization&) = default;
    friend auto operator<=>(const Specialization&, const Specialization&) = default;
};

// All specialized values below are returned on lattice 1 (u = q^{1/2}) with
// relative precision at least `window` lattice-1 units, or exactly.
QScalar h_spec(int m, const Specialization& spec, int window);
QScalar e_spec(int m, const Specialization& spec, int window);
QScalar schur_spec(const Partition& mu, const Specialization& spec, int window);
// s_{mu/nu}; 0 unless nu is inside mu.
QScalar skew_schur_spec(const Partition& mu, const Partition& nu, const Specialization& spec, int window);

// Same values moved onto lattice L, with window counted in lattice-L units.
QScalar skew_schur_spec_on(int lattice, const Partition& mu, const Partition& nu, const Specialization& spec,
                           int window);

// c^eta_{mu nu}.
long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& eta);

// s_mu = sum_nu chi_mu(nu)/z_nu p_nu.
std::map<Partition, Rational> schur_to_power_sums(const Partition& mu);

struct SymmetricCacheStats {
    std::size_t skew_entries = 0;
    std::size_t h_entries = 0;
};
SymmetricCacheStats symmetric_cache_stats();
void clear_symmetric_caches();

}  // namespace topvert
