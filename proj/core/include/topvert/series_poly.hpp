#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"
#include "topvert/rational.hpp"

namespace topvert {

inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const QScalar& c) { return c.is_exact_zero(); }

// A monomial prod_f prod_i x^{(f)}_{key[f]_i}; the parts of key[f] are the
// variable indices of family f (weight of x_k is k), so the weight of the
// monomial in family f is key[f].weight().
using Monomial = std::vector<Partition>;

// Polynomial in several families of graded variables, truncated by a
// weight cutoff per family and an optional total cutoff. Exact zeros are
// never stored.
template <class C>
class SeriesPoly {
public:
    SeriesPoly() = default;
    SeriesPoly(std::vector<std::string> families, std::vector<int> cutoffs, int total_cutoff = -1)
        : families_(std::move(families)), cutoffs_(std::move(cutoffs)), total_cutoff_(total_cutoff) {
        if (families_.size() != cutoffs_.size()) throw std::invalid_argument("family/cutoff count mismatch");
    }

    const std::vector<std::string>& families() const { return families_; }
    const std::vector<int>& cutoffs() const { return cutoffs_; }
    int total_cutoff() const { return total_cutoff_; }
    std::size_t family_count() const { return families_.size(); }
    const std::map<Monomial, C>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    bool admits(const Monomial& m) const {
        int total = 0;
        for (std::size_t f = 0; f < m.size(); ++f) {
            if (m[f].weight() > cutoffs_[f]) return false;
            total += m[f].weight();
        }
        return total_cutoff_ < 0 || total <= total_cutoff_;
    }

    static int grade(const Monomial& m) {
        int g = 0;
        for (const auto& p : m) g += p.weight();
        return g;
    }

    int max_grade() const {
        int g = 0;
        for (int c : cutoffs_) g += c;
        return total_cutoff_ < 0 ? g : std::min(g, total_cutoff_);
    }

    // Adds c to the coefficient of m; silently ignores monomials past the cutoffs.
    void add(const Monomial& m, const C& c) {
        if (m.size() != families_.size()) throw std::invalid_argument("monomial arity mismatch");
        if (!admits(m) || coeff_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (coeff_is_zero(it->second)) terms_.erase(it);
    }

    const C* find(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    SeriesPoly same_shape() const { return SeriesPoly(families_, cutoffs_, total_cutoff_); }

    SeriesPoly& operator+=(const SeriesPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    SeriesPoly& operator-=(const SeriesPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
    friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }

    template <class S>
    SeriesPoly scaled(const S& s) const {
        SeriesPoly r = same_shape();
        for (const auto& [m, c] : terms_) r.add(m, c * s);
        return r;
    }

    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
        SeriesPoly r = a.same_shape();
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                bool ok = true;
                int total = 0;
                for (std::size_t f = 0; f < ma.size(); ++f) {
                    const int w = ma[f].weight() + mb[f].weight();
                    if (w > a.cutoffs_[f]) {
                        ok = false;
                        break;
                    }
                    total += w;
                }
                if (!ok || (a.total_cutoff_ >= 0 && total > a.total_cutoff_)) continue;
                for (std::size_t f = 0; f < ma.size(); ++f) m[f] = union_parts(ma[f], mb[f]);
                r.add(m, ca * cb);
            }
        return r;
    }

    // Homogeneous component of total grade g.
    SeriesPoly component(int g) const {
        SeriesPoly r = same_shape();
        for (const auto& [m, c] : terms_)
            if (grade(m) == g) r.terms_.emplace(m, c);
        return r;
    }

    // d/dx^{(family)}_k.
    SeriesPoly derivative(std::size_t family, int k) const {
        SeriesPoly r = same_shape();
        for (const auto& [m, c] : terms_) {
            const int mult = m[family].multiplicity(k);
            if (mult == 0) continue;
            std::vector<int> parts = m[family].parts();
            parts.erase(std::find(parts.begin(), parts.end(), k));
            Monomial d = m;
            d[family] = Partition(std::move(parts));
            r.add(d, c * Rational(mult));
        }
        return r;
    }

    Monomial unit_monomial() const { return Monomial(families_.size()); }

private:
    std::vector<std::string> families_;
    std::vector<int> cutoffs_;
    int total_cutoff_ = -1;
    std::map<Monomial, C> terms_;
};

// exp(x) for x without constant term, graded recurrence d E_d = sum_j j x_j E_{d-j}.
template <class C>
SeriesPoly<C> series_exp(const SeriesPoly<C>& x, const C& one) {
    const int top = x.max_grade();
    std::vector<SeriesPoly<C>> xs, es;
    for (int g = 0; g <= top; ++g) xs.push_back(x.component(g));
    if (!xs[0].empty()) throw std::invalid_argument("series_exp needs a zero constant term");
    es.push_back(x.same_shape());
    es[0].add(x.unit_monomial(), one);
    for (int d = 1; d <= top; ++d) {
        SeriesPoly<C> acc = x.same_shape();
        for (int j = 1; j <= d; ++j)
            if (!xs[static_cast<std::size_t>(j)].empty() && !es[static_cast<std::size_t>(d - j)].empty())
                acc += (xs[static_cast<std::size_t>(j)] * es[static_cast<std::size_t>(d - j)]).scaled(Rational(j));
        es.push_back(acc.scaled(Rational(1, d)));
    }
    SeriesPoly<C> r = x.same_shape();
    for (auto& e : es) r += e;
    return r;
}

// log(t) for t with constant term `one`: L_d = T_d - (1/d) sum_{j<d} j L_j T_{d-j}.
template <class C>
SeriesPoly<C> series_log(const SeriesPoly<C>& t, const C& one) {
    const int top = t.max_grade();
    const C* c0 = t.find(t.unit_monomial());
    if (!c0 || !(*c0 == one)) throw std::invalid_argument("series_log needs constant term 1");
    std::vector<SeriesPoly<C>> ts, ls;
    for (int g = 0; g <= top; ++g) ts.push_back(t.component(g));
    ls.push_back(t.same_shape());
    for (int d = 1; d <= top; ++d) {
        SeriesPoly<C> acc = t.same_shape();
        for (int j = 1; j < d; ++j)
            if (!ls[static_cast<std::size_t>(j)].empty() && !ts[static_cast<std::size_t>(d - j)].empty())
                acc += (ls[static_cast<std::size_t>(j)] * ts[static_cast<std::size_t>(d - j)]).scaled(Rational(j));
        ls.push_back(ts[static_cast<std::size_t>(d)] - acc.scaled(Rational(1, d)));
    }
    SeriesPoly<C> r = t.same_shape();
    for (auto& l : ls) r += l;
    return r;
}

// s_alpha[t] via Jacobi-Trudi over h_m[t], where sum h_m z^m = exp(sum t_k z^k).
SeriesPoly<Rational> schur_in_times(const Partition& alpha, int cutoff);
// h_m[t] as a single-family polynomial.
SeriesPoly<Rational> complete_in_times(int m, int cutoff);

}  // namespace topvert
