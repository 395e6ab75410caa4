#pragma once

#include <vector>

#include "topvert/partition.hpp"

namespace topvert {

// Charge-0 Maya diagram {lambda_i - i : i >= 1}. Sites below floor() are all
// occupied; explicit() lists the occupied sites >= floor() in increasing order.
class MayaDiagram {
public:
    explicit MayaDiagram(const Partition& lambda);

    int floor() const { return floor_; }
    const std::vector<int>& explicit_sites() const { return occupied_; }
    bool occupied(int p) const;
    // Number of occupied sites strictly between a and b (either order).
    int occupied_between(int a, int b) const;
    // Moves the particle at `from` to the empty site `to`.
    MayaDiagram moved(int from, int to) const;
    Partition to_partition() const;

private:
    MayaDiagram() = default;
    int floor_ = 0;
    std::vector<int> occupied_;
};

// Particle hop from -> to realized on a partition; sign = (-1)^{occupied
// sites strictly between}.
struct MayaMove {
    int from = 0;
    int to = 0;
    Partition result;
    int sign = 1;
};

// All hops by `shift` (to = from + shift) that land on an empty site.
std::vector<MayaMove> maya_moves(const Partition& lambda, int shift);

}  // namespace topvert
