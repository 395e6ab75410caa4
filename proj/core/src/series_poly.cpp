#include "topvert/series_poly.hpp"

namespace topvert {

SeriesPoly<Rational> complete_in_times(int m, int cutoff) {
    SeriesPoly<Rational> h({"t"}, {cutoff});
    if (m < 0) return h;
    for (const auto& rho : partitions_of(m)) h.add({rho}, Rational(1, aut_size(rho)));
    return h;
}

SeriesPoly<Rational> schur_in_times(const Partition& alpha, int cutoff) {
    if (alpha.weight() > cutoff) throw std::invalid_argument("schur_in_times: |alpha| exceeds cutoff");
    const int n = alpha.length();
    SeriesPoly<Rational> one({"t"}, {cutoff});
    one.add({Partition{}}, Rational(1));
    if (n == 0) return one;
    std::vector<SeriesPoly<Rational>> minor(static_cast<std::size_t>(1) << n, one.same_shape());
    minor[0] = one;
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        const int row = n - __builtin_popcount(mask);
        SeriesPoly<Rational> acc = one.same_shape();
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (1U << c))) continue;
            const auto entry = complete_in_times(alpha[row] - row + c, cutoff);
            const auto& rest = minor[mask & ~(1U << c)];
            if (!entry.empty() && !rest.empty()) {
                auto prod = entry * rest;
                if (pos % 2) {
                    acc -= prod;
                } else {
                    acc += prod;
                }
            }
            ++pos;
        }
        minor[mask] = std::move(acc);
    }
    return minor[(1U << n) - 1];
}

}  // namespace topvert
