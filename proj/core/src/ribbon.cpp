#include "topvert/ribbon.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "topvert/maya.hpp"
#include "topvert/mutation.hpp"

namespace topvert {

namespace {

int mutated_sign(int height) {
    const int s = height % 2 ? -1 : 1;
    if (mutation_is(Mutation::sign_flip)) return -s;
    if (mutation_is(Mutation::drop_sign)) return 1;
    return s;
}

std::vector<RibbonStep> steps(const Partition& alpha, int shift) {
    std::vector<RibbonStep> out;
    for (auto& mv : maya_moves(alpha, shift)) {
        MayaDiagram d(alpha);
        const int height = d.occupied_between(mv.from, mv.to);
        RibbonStep s;
        s.beta = mv.result;
        s.sign = mutated_sign(height);
        const bool removal = shift < 0;
        s.ribbon = {removal ? alpha : mv.result, removal ? mv.result : alpha, std::abs(shift), height};
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<RibbonStep> ribbons_removable(const Partition& alpha, int k) {
    if (k < 1) throw std::invalid_argument("ribbon length must be positive");
    return steps(alpha, -k);
}

std::vector<RibbonStep> ribbons_addable(const Partition& alpha, int k) {
    if (k < 1) throw std::invalid_argument("ribbon length must be positive");
    return steps(alpha, k);
}

std::vector<RibbonStep> ribbon_set(const Partition& alpha, int k) {
    if (k == 0) throw std::invalid_argument("ribbon set needs k != 0");
    return k > 0 ? ribbons_removable(alpha, k) : ribbons_addable(alpha, -k);
}

namespace {

std::mutex g_char_mutex;
std::map<std::tuple<Mutation, Partition, Partition>, long long> g_char_memo;

long long mn(const Partition& mu, const Partition& nu) {
    if (nu.empty()) return 1;
    const auto key = std::make_tuple(active_mutation(), mu, nu);
    {
        std::lock_guard lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) return it->second;
    }
    std::vector<int> rest(nu.parts().begin() + 1, nu.parts().end());
    const Partition tail(std::move(rest));
    long long v = 0;
    for (const auto& st : ribbons_removable(mu, nu[0])) {
        const int sign = mutation_is(Mutation::mn_off_by_one) ? -st.sign : st.sign;
        v += sign * mn(st.beta, tail);
    }
    std::lock_guard lock(g_char_mutex);
    g_char_memo.emplace(key, v);
    return v;
}

}  // namespace

long long character(const Partition& mu, const Partition& nu) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("character: |mu| != |nu| (" + mu.str() + " vs " + nu.str() + ")");
    return mn(mu, nu);
}

}  // namespace topvert
