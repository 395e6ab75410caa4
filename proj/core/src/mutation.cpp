#include "topvert/mutation.hpp"

#include <array>
#include <atomic>
#include <utility>

namespace topvert {

namespace {

std::atomic<Mutation> g_mutation{Mutation::none};

constexpr std::array<std::pair<Mutation, const char*>, 8> kNames{{
    {Mutation::none, "none"},
    {Mutation::sign_flip, "sign-flip"},
    {Mutation::drop_sign, "drop-sign"},
    {Mutation::drop_framing, "drop-framing"},
    {Mutation::no_transpose, "no-transpose"},
    {Mutation::mn_off_by_one, "mn-off-by-one"},
    {Mutation::perturb_tau, "perturb-tau"},
    {Mutation::wrong_pplus, "wrong-pplus"},
}};

}  // namespace

Mutation active_mutation() { return g_mutation.load(std::memory_order_relaxed); }
void set_active_mutation(Mutation m) { g_mutation.store(m, std::memory_order_relaxed); }
bool mutation_is(Mutation m) { return active_mutation() == m; }

std::string mutation_name(Mutation m) {
    for (const auto& [k, n] : kNames)
        if (k == m) return n;
    return "none";
}

std::optional<Mutation> parse_mutation(const std::string& name) {
    for (const auto& [k, n] : kNames)
        if (name == n) return k;
    return std::nullopt;
}

std::vector<Mutation> all_mutations() {
    std::vector<Mutation> out;
    for (const auto& [k, n] : kNames)
        if (k != Mutation::none) out.push_back(k);
    return out;
}

}  // namespace topvert
