#pragma once

#include <optional>
#include <string>
#include <vector>

namespace topvert {

// Deliberate defects used only by the negative-control suites. The active
// mutant is process-global; memo tables key on it, so switching mutants
// never serves stale values.
enum class Mutation {
    none,
    sign_flip,      // ribbon sign reported as -(-1)^ht
    drop_sign,      // ribbon sign reported as +1
    drop_framing,   // vertex_C loses q^{kappa(mu1)/2}
    no_transpose,   // Gamma' matrix elements use s_{l/m} instead of s_{l'/m'}
    mn_off_by_one,  // Murnaghan-Nakayama uses height+1
    perturb_tau,    // one tau-function coefficient shifted by 1
    wrong_pplus,    // p+ substitution loses its (-1)^{k+1}
};

Mutation active_mutation();
void set_active_mutation(Mutation m);
bool mutation_is(Mutation m);

std::string mutation_name(Mutation m);
std::optional<Mutation> parse_mutation(const std::string& name);
std::vector<Mutation> all_mutations();

class ScopedMutation {
public:
    explicit ScopedMutation(Mutation m) : prev_(active_mutation()) { set_active_mutation(m); }
    ~ScopedMutation() { set_active_mutation(prev_); }
    ScopedMutation(const ScopedMutation&) = delete;
    ScopedMutation& operator=(const ScopedMutation&) = delete;

private:
    Mutation prev_;
};

}  // namespace topvert
