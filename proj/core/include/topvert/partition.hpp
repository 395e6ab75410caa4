#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace topvert {

// Weakly decreasing positive parts; trailing zeros are never stored.
// Ordering: by weight, then descending lexicographic within a weight, so
// (3) < (2,1) < (1,1,1) and ordered containers list partitions canonically.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    // 0-based part access; 0 past the end.
    int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const;
    // Sum of mu_i (mu_i - 2i + 1).
    long long kappa() const;
    // Sum of (i-1) mu_i.
    long long n_statistic() const;
    int multiplicity(int part) const;
    // True when other is a subdiagram of *this.
    bool contains(const Partition& other) const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

long long z_mu(const Partition& mu);
long long aut_size(const Partition& mu);
Partition union_parts(const Partition& a, const Partition& b);
Partition double_parts(const Partition& xi);
// Partition of the multiset parts with every part scaled by factor.
Partition scale_parts(const Partition& mu, int factor);

// Canonical order (descending lexicographic).
std::vector<Partition> partitions_of(int n);
// All partitions of weight 0..n, weight-ascending.
std::vector<Partition> partitions_up_to(int n);
// All eta with eta inside mu.
std::vector<Partition> subdiagrams(const Partition& mu);
// All lambda containing mu with |lambda| <= max_weight.
std::vector<Partition> superdiagrams(const Partition& mu, int max_weight);

// Triples of partitions with total weight <= n.
struct PartitionTriple {
    Partition a, b, c;
    int weight() const { return a.weight() + b.weight() + c.weight(); }
    friend bool operator==(const PartitionTriple&, const PartitionTriple&) = default;
    friend auto operator<=>(const PartitionTriple&, const PartitionTriple&) = default;
};
std::vector<PartitionTriple> triples_up_to(int n);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace topvert

template <>
struct std::hash<topvert::Partition> : topvert::PartitionHash {};
