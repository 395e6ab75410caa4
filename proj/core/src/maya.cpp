#include "topvert/maya.hpp"

#include <algorithm>
#include <stdexcept>

namespace topvert {

MayaDiagram::MayaDiagram(const Partition& lambda) : floor_(-lambda.length()) {
    occupied_.reserve(static_cast<std::size_t>(lambda.length()));
    for (int i = lambda.length(); i >= 1; --i) occupied_.push_back(lambda[i - 1] - i);
}

bool MayaDiagram::occupied(int p) const {
    return p < floor_ || std::binary_search(occupied_.begin(), occupied_.end(), p);
}

int MayaDiagram::occupied_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (b - a <= 1) return 0;
    int count = 0;
    // implicit sea: sites a+1 .. min(b, floor_)-1
    const int sea_hi = std::min(b, floor_);
    if (sea_hi - 1 >= a + 1) count += sea_hi - 1 - a;
    auto lo = std::upper_bound(occupied_.begin(), occupied_.end(), a);
    auto hi = std::lower_bound(occupied_.begin(), occupied_.end(), b);
    if (hi > lo) count += static_cast<int>(hi - lo);
    return count;
}

MayaDiagram MayaDiagram::moved(int from, int to) const {
    if (!occupied(from) || occupied(to)) throw std::logic_error("invalid Maya move");
    MayaDiagram d;
    d.floor_ = std::min({floor_, from, to});
    for (int p = d.floor_; p < floor_; ++p) d.occupied_.push_back(p);
    d.occupied_.insert(d.occupied_.end(), occupied_.begin(), occupied_.end());
    d.occupied_.erase(std::find(d.occupied_.begin(), d.occupied_.end(), from));
    d.occupied_.insert(std::upper_bound(d.occupied_.begin(), d.occupied_.end(), to), to);
    return d;
}

Partition MayaDiagram::to_partition() const {
    // Skip the contiguous occupied run starting at floor_: it belongs to the sea.
    int base = floor_;
    std::size_t start = 0;
    while (start < occupied_.size() && occupied_[start] == base) {
        ++base;
        ++start;
    }
    const int n = static_cast<int>(occupied_.size() - start);
    if (base + n != 0) throw std::logic_error("Maya diagram is not in the charge-0 sector");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) parts.push_back(occupied_[occupied_.size() - static_cast<std::size_t>(i)] + i);
    return Partition(std::move(parts));
}

std::vector<MayaMove> maya_moves(const Partition& lambda, int shift) {
    std::vector<MayaMove> out;
    if (shift == 0) return out;
    MayaDiagram d(lambda);
    // Candidate sources: explicit sites plus the top |shift| sea sites.
    std::vector<int> sources = d.explicit_sites();
    for (int p = d.floor() - 1; p >= d.floor() - std::abs(shift); --p) sources.push_back(p);
    for (int from : sources) {
        const int to = from + shift;
        if (d.occupied(to)) continue;
        MayaDiagram m = d.moved(from, to);
        const int between = d.occupied_between(from, to);
        out.push_back({from, to, m.to_partition(), between % 2 ? -1 : 1});
    }
    std::sort(out.begin(), out.end(), [](const MayaMove& a, const MayaMove& b) { return a.result < b.result; });
    return out;
}

}  // namespace topvert
