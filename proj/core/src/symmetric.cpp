#include "topvert/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "topvert/ribbon.hpp"

namespace topvert {

namespace {

constexpr int kMaxRefinements = 16;

int x_exponent(const Partition& prefix, int i) {  // exponent of x_i in u = q^{1/2}
    return 2 * (i - prefix[i - 1]) - 1;
}

std::mutex g_mutex;
std::map<int, QScalar> g_inv_poch;  // 1/(q;q)_n
std::map<std::pair<bool, Partition>, std::vector<QScalar>> g_prefix;
std::map<std::tuple<bool, int, Partition>, QScalar> g_gen;
std::map<std::tuple<Partition, Partition, Partition>, QScalar> g_skew;

QScalar inv_qpoch(int n, int prec) {
    if (prec <= 0) return QScalar::big_o(1, 0);
    {
        std::lock_guard lock(g_mutex);
        auto it = g_inv_poch.find(n);
        if (it != g_inv_poch.end() && it->second.valid_upto() >= prec) return it->second.truncated(prec);
    }
    QScalar r = QScalar::constant(1, Rational(1));
    for (int k = 1; k <= n; ++k) r = r * QScalar::geometric_sum(1, Rational(0), Rational(k), prec);
    r = r.truncated(prec);
    std::lock_guard lock(g_mutex);
    auto& slot = g_inv_poch[n];
    if (slot.valid_upto() == QScalar::kExact || slot.valid_upto() < prec) slot = r;
    return r;
}

// h_j or e_j of the finite prefix alphabet, exact, for j = 0..m.
std::vector<QScalar> prefix_polys(bool elementary, const Partition& prefix, int m) {
    const auto key = std::make_pair(elementary, prefix);
    {
        std::lock_guard lock(g_mutex);
        auto it = g_prefix.find(key);
        if (it != g_prefix.end() && static_cast<int>(it->second.size()) > m) return it->second;
    }
    std::vector<QScalar> cur(static_cast<std::size_t>(m + 1), QScalar(1));
    cur[0] = QScalar::constant(1, Rational(1));
    for (int i = 1; i <= prefix.length(); ++i) {
        const QScalar x = QScalar::unit_term(1, x_exponent(prefix, i), Rational(1));
        std::vector<QScalar> next(cur.size(), QScalar(1));
        for (int j = 0; j <= m; ++j) {
            if (elementary) {
                next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j)];
                if (j > 0) next[static_cast<std::size_t>(j)] += x * cur[static_cast<std::size_t>(j - 1)];
            } else {
                // H_j = H'_j + x H_{j-1}
                next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j)];
                if (j > 0) next[static_cast<std::size_t>(j)] += x * next[static_cast<std::size_t>(j - 1)];
            }
        }
        cur = std::move(next);
    }
    std::lock_guard lock(g_mutex);
    auto& slot = g_prefix[key];
    if (slot.size() < cur.size()) slot = cur;
    return cur;
}

// h_m / e_m valid below the absolute exponent `need`.
QScalar gen_value(bool elementary, int m, const Partition& prefix, int need) {
    if (m < 0) return QScalar(1);
    if (m == 0) return QScalar::constant(1, Rational(1));
    const auto key = std::make_tuple(elementary, m, prefix);
    {
        std::lock_guard lock(g_mutex);
        auto it = g_gen.find(key);
        if (it != g_gen.end() && it->second.valid_upto() >= need) return it->second.truncated(need);
    }
    const int l = prefix.length();
    const auto polys = prefix_polys(elementary, prefix, m);
    QScalar sum = QScalar::constant(1, Rational(0));
    for (int j = 0; j <= m; ++j) {
        const QScalar& p = polys[static_cast<std::size_t>(j)];
        if (p.is_exact_zero()) continue;
        const int n = m - j;
        if (n == 0) {
            sum += p;
            continue;
        }
        // tail alphabet q^{l+1/2}, q^{l+3/2}, ...: h_n = q^{n(l+1/2)}/(q;q)_n,
        // e_n = q^{n(l+1/2) + n(n-1)/2}/(q;q)_n
        const int shift = n * (2 * l + 1) + (elementary ? n * (n - 1) : 0);
        const int rel = need - p.valuation() - shift;
        sum += p * inv_qpoch(n, rel).shifted(shift);
    }
    sum = sum.truncated(need);
    std::lock_guard lock(g_mutex);
    auto& slot = g_gen[key];
    if (slot.is_exact_zero() || slot.valid_upto() < sum.valid_upto()) slot = sum;
    return sum;
}

int gen_valuation(bool elementary, int m, const Partition& prefix) {
    if (m <= 0) return 0;
    if (!elementary) return m * x_exponent(prefix, 1);
    int v = 0;
    for (int i = 1; i <= m; ++i) v += x_exponent(prefix, i);
    return v;
}

QScalar determinant(std::vector<std::vector<QScalar>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return QScalar::constant(1, Rational(1));
    // minors over column subsets, rows taken from the bottom up
    std::vector<QScalar> minor(static_cast<std::size_t>(1) << n, QScalar(1));
    minor[0] = QScalar::constant(1, Rational(1));
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        const int k = __builtin_popcount(mask);
        const int row = n - k;
        QScalar acc(1);
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1U << c))) continue;
            const QScalar& entry = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            const QScalar& rest = minor[mask & ~(1U << c)];
            if (!entry.is_exact_zero() && !rest.is_exact_zero()) {
                if (pos % 2) {
                    acc -= entry * rest;
                } else {
                    acc += entry * rest;
                }
            }
            ++pos;
        }
        minor[mask] = std::move(acc);
    }
    return minor[(1U << n) - 1];
}

QScalar jacobi_trudi(const Partition& mu, const Partition& nu, const Partition& prefix, int window) {
    const Partition muc = mu.conjugate();
    const Partition nuc = nu.conjugate();
    const bool elementary = mu.length() > mu[0];
    const Partition& a = elementary ? muc : mu;
    const Partition& b = elementary ? nuc : nu;
    const int n = a.length();
    auto index = [&](int i, int j) { return a[i] - b[j] - i + j; };
    int diag = 0;
    for (int i = 0; i < n; ++i) diag += gen_valuation(elementary, index(i, i), prefix);
    int need = diag + window;
    for (int i = 0; i < n; ++i) need += std::max(0, -gen_valuation(elementary, index(i, i), prefix));
    QScalar det(1);
    for (int iter = 0; iter < kMaxRefinements; ++iter) {
        std::vector<std::vector<QScalar>> m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)].push_back(gen_value(elementary, index(i, j), prefix, need));
        det = determinant(m);
        const int target = det.valuation() + window;
        if (det.has_terms() && det.valid_upto() >= target) return det.truncated(target);
        need += std::max(target - det.valid_upto(), window);
    }
    return det;
}

}  // namespace

QScalar h_spec(int m, const Specialization& spec, int window) {
    return gen_value(false, m, spec.prefix, gen_valuation(false, m, spec.prefix) + window);
}

QScalar e_spec(int m, const Specialization& spec, int window) {
    return gen_value(true, m, spec.prefix, gen_valuation(true, m, spec.prefix) + window);
}

QScalar schur_spec(const Partition& mu, const Specialization& spec, int window) {
    return skew_schur_spec(mu, Partition{}, spec, window);
}

QScalar skew_schur_spec(const Partition& mu, const Partition& nu, const Specialization& spec, int window) {
    if (!mu.contains(nu)) return QScalar(1);
    if (mu == nu) return QScalar::constant(1, Rational(1));
    const auto key = std::make_tuple(mu, nu, spec.prefix);
    {
        std::lock_guard lock(g_mutex);
        auto it = g_skew.find(key);
        if (it != g_skew.end() && it->second.relative_precision() >= window)
            return it->second.with_relative_window(window);
    }
    QScalar v = jacobi_trudi(mu, nu, spec.prefix, window);
    std::lock_guard lock(g_mutex);
    auto& slot = g_skew[key];
    if (slot.is_exact_zero() || slot.relative_precision() < v.relative_precision()) slot = v;
    return v.with_relative_window(window);
}

QScalar skew_schur_spec_on(int lattice, const Partition& mu, const Partition& nu, const Specialization& spec,
                           int window) {
    const int w1 = (window + lattice - 1) / lattice;
    return skew_schur_spec(mu, nu, spec, w1).relattice(lattice);
}

namespace {

std::mutex g_lr_mutex;
std::map<std::tuple<Partition, Partition, Partition>, long long> g_lr;

struct LrSearch {
    const Partition& inner;
    const Partition& outer;
    const Partition& content;
    std::vector<std::pair<int, int>> cells;  // reading order: rows top-down, right to left
    std::vector<std::vector<int>> fill;
    std::vector<int> count;
    long long found = 0;

    int at(int r, int c) const {
        if (r < 0 || r >= outer.length() || c < inner[r] || c >= outer[r]) return -1;
        return fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    void run(std::size_t idx) {
        if (idx == cells.size()) {
            ++found;
            return;
        }
        const auto [r, c] = cells[idx];
        const int right = at(r, c + 1);  // already filled
        const int above = at(r - 1, c);  // already filled or outside
        const int hi = right > 0 ? right : content.length();
        for (int v = std::max(1, above + 1); v <= hi; ++v) {
            if (count[static_cast<std::size_t>(v)] >= content[v - 1]) continue;
            if (v > 1 && count[static_cast<std::size_t>(v)] + 1 > count[static_cast<std::size_t>(v - 1)]) continue;
            fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++count[static_cast<std::size_t>(v)];
            run(idx + 1);
            --count[static_cast<std::size_t>(v)];
            fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        }
    }
};

}  // namespace

long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& eta) {
    if (eta.weight() != mu.weight() + nu.weight() || !eta.contains(mu) || !eta.contains(nu)) return 0;
    if (nu.empty() || mu.empty()) return 1;
    const auto key = std::make_tuple(mu, nu, eta);
    {
        std::lock_guard lock(g_lr_mutex);
        auto it = g_lr.find(key);
        if (it != g_lr.end()) return it->second;
    }
    LrSearch s{mu, eta, nu, {}, {}, {}, 0};
    s.fill.resize(static_cast<std::size_t>(eta.length()));
    for (int r = 0; r < eta.length(); ++r) {
        s.fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(eta[r]), 0);
        for (int c = eta[r] - 1; c >= mu[r]; --c) s.cells.emplace_back(r, c);
    }
    s.count.assign(static_cast<std::size_t>(nu.length() + 1), 0);
    s.run(0);
    std::lock_guard lock(g_lr_mutex);
    g_lr.emplace(key, s.found);
    return s.found;
}

std::map<Partition, Rational> schur_to_power_sums(const Partition& mu) {
    std::map<Partition, Rational> out;
    for (const auto& nu : partitions_of(mu.weight())) {
        const long long c = character(mu, nu);
        if (c != 0) out.emplace(nu, Rational(c, z_mu(nu)));
    }
    return out;
}

SymmetricCacheStats symmetric_cache_stats() {
    std::lock_guard lock(g_mutex);
    return {g_skew.size(), g_gen.size()};
}

void clear_symmetric_caches() {
    {
        std::lock_guard lock(g_mutex);
        g_inv_poch.clear();
        g_prefix.clear();
        g_gen.clear();
        g_skew.clear();
    }
    std::lock_guard lock(g_lr_mutex);
    g_lr.clear();
}

}  // namespace topvert
