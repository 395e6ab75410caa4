#include "topvert/kp.hpp"

#include <stdexcept>

#include "topvert/fock_checks.hpp"
#include "topvert/mutation.hpp"
#include "topvert/ribbon.hpp"

namespace topvert {

namespace {

using ParamSeries = SeriesPoly<QScalar>;

ParamSeries param_series(const TauSeries& T) {
    return ParamSeries({"p1", "p2"}, {T.body.cutoffs()[0], T.body.cutoffs()[1]});
}

long long index_product(const Partition& nu) {
    long long p = 1;
    for (int k : nu.parts()) p *= k;
    return p;
}

// Every (p1, p2) monomial the parameter families admit.
std::vector<Monomial> parameter_monomials(const TauSeries& T) {
    std::vector<Monomial> out;
    for (const auto& a : partitions_up_to(T.body.cutoffs()[0]))
        for (const auto& b : partitions_up_to(T.body.cutoffs()[1])) out.push_back({a, b});
    return out;
}

QScalar coefficient_or_zero(const ParamSeries& s, const Monomial& m, int lattice) {
    const QScalar* c = s.find(m);
    return c ? *c : QScalar(lattice);
}

Partition hook(int arm, int leg) {
    std::vector<int> parts(static_cast<std::size_t>(leg) + 1, 1);
    parts[0] = arm + 1;
    return Partition(parts);
}

ParamSeries determinant(const std::vector<std::vector<ParamSeries>>& a, const ParamSeries& unit) {
    const std::size_t n = a.size();
    if (n == 0) return unit;
    if (n == 1) return a[0][0];
    ParamSeries det = unit.same_shape();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<ParamSeries>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<ParamSeries> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        const ParamSeries term = a[0][j] * determinant(minor, unit);
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

std::string monomial_label(const Monomial& m) {
    std::string s;
    const char* names[] = {"p1", "p2", "t"};
    for (std::size_t f = 0; f < m.size(); ++f)
        if (!m[f].empty()) s += names[f] + m[f].str();
    return s.empty() ? "1" : s;
}

}  // namespace

TauSeries tau_from_series(int N, SeriesPoly<QScalar> body, int lattice) {
    if (body.family_count() != 3) throw std::invalid_argument("tau series needs families p1, p2, t");
    TauSeries T;
    T.N = N;
    T.lattice = lattice;
    T.body = std::move(body);
    return T;
}

TauSeries build_tau(int N, const KpConfig& cfg) {
    if (N < 1) throw std::invalid_argument("tau function needs N >= 1");
    const Rational tau(N);
    const FamilyCutoffs cutoffs = {cfg.p1_weight, cfg.p2_weight, cfg.degree};
    const auto table = schur_table(
        cutoffs, nullptr,
        [&](const PartitionTriple& mu) { return expG_schur_coefficient(mu, tau, cfg.hodge.window); },
        cfg.hodge.jobs);
    const TriSeries p_series = schur_to_power_series(table, cutoffs);
    SeriesPoly<QScalar> body({"p1", "p2", "t"}, {cutoffs[0], cutoffs[1], cutoffs[2]});
    for (const auto& [m, c] : p_series.terms()) body.add(m, c * Rational(index_product(m[2])));
    const int lattice = lattice_for_tau(tau);
    if (mutation_is(Mutation::perturb_tau))
        body.add({Partition{}, Partition{}, Partition{N + 1, 1}}, QScalar::constant(lattice, Rational(1)));
    return tau_from_series(N, std::move(body), lattice);
}

std::map<Partition, SeriesPoly<QScalar>> schur_coefficients(const TauSeries& T, int size_bound) {
    std::map<Partition, ParamSeries> c;
    for (const auto& lam : partitions_up_to(size_bound)) c.emplace(lam, param_series(T));
    for (const auto& [m, a] : T.body.terms()) {
        const Partition& nu = m[2];
        if (nu.weight() > size_bound) continue;
        const QScalar p_coeff = a * Rational(1, index_product(nu));
        for (const auto& lam : partitions_of(nu.weight())) {
            const long long chi = character(lam, nu);
            if (chi != 0) c.at(lam).add({m[0], m[1]}, p_coeff * Rational(chi));
        }
    }
    return c;
}

CheckReport check_reduction_condition(const TauSeries& T, int k_max, int m_max, int min_width, int window) {
    const int step = T.N + 1;
    if (k_max + m_max * step > T.degree()) {
        std::string feasible;
        for (int k = 1; k <= k_max; ++k)
            for (int m = 1; m <= m_max; ++m)
                if (k + m * step <= T.degree())
                    feasible += " (" + std::to_string(k) + "," + std::to_string(m) + ")";
        throw std::out_of_range("degree " + std::to_string(T.degree()) + " too small; feasible (k,m):" +
                                (feasible.empty() ? std::string(" none") : feasible));
    }
    CheckReport r;
    r.identity = "kp_reduction";
    r.params = {{"N", T.N}, {"k_max", k_max}, {"m_max", m_max}, {"degree", T.degree()}};
    const SeriesPoly<QScalar> log_t = series_log(T.body, T.one());
    const QScalar zero(T.lattice);
    for (int m = 1; m <= m_max; ++m) {
        const int j = m * step;
        for (int k = 1; k <= k_max; ++k) {
            const auto d = log_t.derivative(2, k).derivative(2, j);
            const std::string label = "d2 logT/dt" + std::to_string(k) + "dt" + std::to_string(j);
            for (const auto& pm : parameter_monomials(T))
                for (const auto& tm : partitions_up_to(T.degree() - k - j)) {
                    const Monomial mono = {pm[0], pm[1], tm};
                    const QScalar* c = d.find(mono);
                    r.compare(label + " [" + monomial_label(mono) + "]", c ? *c : zero, zero, min_width, window);
                }
        }
        bool strong = true;
        const auto dt = T.body.derivative(2, j);
        for (const auto& [mono, c] : dt.terms())
            if (c.has_terms()) strong = false;
        r.notes.push_back("dT/dt" + std::to_string(j) + " = 0 " + (strong ? "holds" : "does not hold") +
                          " at truncated order");
    }
    return r;
}

CheckReport check_plucker(const TauSeries& T, int size_bound, int min_width, int window) {
    CheckReport r;
    r.identity = "kp_plucker";
    r.params = {{"N", T.N}, {"size_bound", size_bound}};
    const auto c = schur_coefficients(T, size_bound);
    const ParamSeries& c0 = c.at(Partition{});
    ParamSeries unit = param_series(T);
    unit.add(unit.unit_monomial(), T.one());
    const auto monomials = parameter_monomials(T);
    for (const auto& lam : partitions_up_to(size_bound)) {
        const Partition t = lam.conjugate();
        std::vector<int> arms, legs;
        for (int i = 0; lam[i] > i; ++i) {
            arms.push_back(lam[i] - i - 1);
            legs.push_back(t[i] - i - 1);
        }
        const std::size_t rank = arms.size();
        if (rank < 2) continue;
        std::vector<std::vector<ParamSeries>> m(rank);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j) m[i].push_back(c.at(hook(arms[i], legs[j])));
        ParamSeries lhs = c.at(lam);
        for (std::size_t i = 1; i < rank; ++i) lhs = lhs * c0;
        const ParamSeries rhs = determinant(m, unit);
        for (const auto& pm : monomials)
            r.compare("c" + lam.str() + " [" + monomial_label({pm[0], pm[1], Partition{}}) + "]",
                      coefficient_or_zero(lhs, pm, T.lattice), coefficient_or_zero(rhs, pm, T.lattice), min_width,
                      window);
    }
    return r;
}

std::string corruption_name(TauCorruption c) {
    switch (c) {
    case TauCorruption::bump_t1_tN1: return "bump-t1-tN1";
    case TauCorruption::add_s22: return "add-s22";
    case TauCorruption::bump_t2_squared: return "bump-t2-squared";
    }
    return "?";
}

std::vector<TauCorruption> all_corruptions() {
    return {TauCorruption::bump_t1_tN1, TauCorruption::add_s22, TauCorruption::bump_t2_squared};
}

TauSeries corrupt_tau(const TauSeries& T, TauCorruption c) {
    TauSeries out = T;
    const Partition none;
    const QScalar one = T.one();
    switch (c) {
    case TauCorruption::bump_t1_tN1: out.body.add({none, none, Partition{T.N + 1, 1}}, one); break;
    case TauCorruption::add_s22: {
        const auto s22 = schur_in_times(Partition{2, 2}, T.degree());
        for (const auto& [m, v] : s22.terms()) out.body.add({none, none, m[0]}, one * v);
        break;
    }
    case TauCorruption::bump_t2_squared: out.body.add({none, none, Partition{2, 2}}, one); break;
    }
    return out;
}

CheckReport verify_kp(int N, const KpConfig& cfg) {
    const HodgeConfig& h = cfg.hodge;
    const TauSeries T = build_tau(N, cfg);
    const int lattice = T.lattice;
    const int width = h.min_width * lattice;
    const int window = h.compare_window * lattice;
    CheckReport r;
    r.identity = "kp";
    r.params = {{"N", N}, {"degree", cfg.degree}, {"p1_weight", cfg.p1_weight}, {"p2_weight", cfg.p2_weight}};
    r.merge(check_reduction_condition(T, 2, 1, width, window));
    r.merge(check_plucker(T, cfg.degree, width, window));
    for (auto c : all_corruptions()) {
        const TauSeries bad = corrupt_tau(T, c);
        const CheckReport p = check_plucker(bad, cfg.degree, width, window);
        const std::string where = "control " + corruption_name(c);
        if (p.status == CheckStatus::fail) {
            r.record(CheckStatus::pass, where);
        } else {
            r.record(CheckStatus::fail, where, {}, {}, "certificate accepted a corrupted tau function");
        }
        if (c == TauCorruption::bump_t1_tN1) {
            const CheckReport red = check_reduction_condition(bad, 1, 1, width, window);
            r.record(red.status == CheckStatus::fail ? CheckStatus::pass : CheckStatus::fail, where + " reduction",
                     {}, {}, red.status == CheckStatus::fail ? "" : "reduction check accepted a corrupted tau");
        }
    }
    return r;
}

}  // namespace topvert
