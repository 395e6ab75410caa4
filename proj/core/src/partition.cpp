#include "topvert/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace topvert {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

long long Partition::kappa() const {
    long long k = 0;
    for (int i = 0; i < length(); ++i) {
        const long long m = parts_[static_cast<std::size_t>(i)];
        k += m * (m - 2 * (i + 1) + 1);
    }
    return k;
}

long long Partition::n_statistic() const {
    long long n = 0;
    for (int i = 0; i < length(); ++i) n += static_cast<long long>(i) * parts_[static_cast<std::size_t>(i)];
    return n;
}

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other[i] > (*this)[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.weight_ != b.weight_) return a.weight_ <=> b.weight_;
    // descending lexicographic: larger leading parts first
    return b.parts_ <=> a.parts_;
}

long long z_mu(const Partition& mu) {
    long long z = 1;
    const auto& p = mu.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        for (std::size_t m = 1; m <= j - i; ++m) z *= static_cast<long long>(m) * p[i];
        i = j;
    }
    return z;
}

long long aut_size(const Partition& mu) {
    long long a = 1;
    const auto& p = mu.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        for (std::size_t m = 2; m <= j - i; ++m) a *= static_cast<long long>(m);
        i = j;
    }
    return a;
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

Partition double_parts(const Partition& xi) { return scale_parts(xi, 2); }

Partition scale_parts(const Partition& mu, int factor) {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    std::vector<int> v = mu.parts();
    for (int& x : v) x *= factor;
    return Partition(std::move(v));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void gen_sub(const Partition& mu, std::size_t row, int bound, std::vector<int>& cur,
             std::vector<Partition>& out) {
    if (row == static_cast<std::size_t>(mu.length())) {
        out.emplace_back(cur);
        return;
    }
    const int hi = std::min(bound, mu[static_cast<int>(row)]);
    for (int p = hi; p >= 0; --p) {
        cur.push_back(p);
        if (p == 0) {
            out.emplace_back(cur);
        } else {
            gen_sub(mu, row + 1, p, cur, out);
        }
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) return {};
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto p = partitions_of(k);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

std::vector<Partition> subdiagrams(const Partition& mu) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (mu.empty()) return {Partition{}};
    gen_sub(mu, 0, mu[0], cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> superdiagrams(const Partition& mu, int max_weight) {
    std::vector<Partition> out;
    for (int w = mu.weight(); w <= max_weight; ++w)
        for (auto& p : partitions_of(w))
            if (p.contains(mu)) out.push_back(std::move(p));
    return out;
}

std::vector<PartitionTriple> triples_up_to(int n) {
    std::vector<PartitionTriple> out;
    const auto all = partitions_up_to(n);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.weight() + b.weight() > n) continue;
            for (const auto& c : all)
                if (a.weight() + b.weight() + c.weight() <= n) out.push_back({a, b, c});
        }
    return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

}  // namespace topvert
