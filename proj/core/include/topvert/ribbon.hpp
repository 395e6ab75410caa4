#pragma once

#include <vector>

#include "topvert/partition.hpp"

namespace topvert {

// outer/inner is a border strip of the given length; height = rows - 1.
struct Ribbon {
    Partition outer;
    Partition inner;
    int length = 0;
    int height = 0;
};

struct RibbonStep {
    Partition beta;
    int sign = 1;  // relative sign sgn(alpha, beta) = (-1)^height
    Ribbon ribbon;
};

// beta in R^{(-)}_{k,alpha}: alpha minus a ribbon of length k.
std::vector<RibbonStep> ribbons_removable(const Partition& alpha, int k);
// beta in R^{(+)}_{k,alpha}: alpha plus a ribbon of length k.
std::vector<RibbonStep> ribbons_addable(const Partition& alpha, int k);
// Signed ribbon set R_{k,alpha}: removal for k > 0, addition of |k| for k < 0.
std::vector<RibbonStep> ribbon_set(const Partition& alpha, int k);

// chi_mu(nu) by Murnaghan-Nakayama; throws std::invalid_argument on weight mismatch.
long long character(const Partition& mu, const Partition& nu);

}  // namespace topvert
