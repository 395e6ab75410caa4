#include "topvert/hodge.hpp"

#include <mutex>

#include "topvert/mutation.hpp"
#include "topvert/symmetric.hpp"
#include "topvert/vertex.hpp"

namespace topvert {

namespace {

const std::vector<std::string> kFamilies = {"p1", "p2", "p3"};

std::string triple_label(const PartitionTriple& t) {
    return "(" + t.a.str() + "," + t.b.str() + "," + t.c.str() + ")";
}

std::string monomial_label(const Monomial& m) {
    std::string s = "p";
    for (const auto& p : m) s += p.str();
    return s;
}

int sign_pow(long long n) {
    return n % 2 == 0 ? 1 : -1;
}

int series_lattice(const TriSeries& a, const TriSeries& b) {
    if (!a.terms().empty()) return a.terms().begin()->second.lattice();
    if (!b.terms().empty()) return b.terms().begin()->second.lattice();
    return 1;
}

// Power-sum expansions of Schur functions, memoized per call site.
class PowerSumCache {
public:
    const std::map<Partition, Rational>& operator()(const Partition& mu) {
        auto it = memo_.find(mu);
        if (it == memo_.end()) it = memo_.emplace(mu, schur_to_power_sums(mu)).first;
        return it->second;
    }

private:
    std::map<Partition, std::map<Partition, Rational>> memo_;
};

// exp(sum_m (-1)^{m+1}/m p1_m p3_{m step}) on the given families.
TriSeries anomaly_exponential(int step, const FamilyCutoffs& cutoffs, int lattice) {
    TriSeries x = make_tri_series(cutoffs);
    for (int m = 1; m <= cutoffs[0] && m * step <= cutoffs[2]; ++m)
        x.add({Partition{m}, Partition{}, Partition{m * step}},
              QScalar::constant(lattice, Rational(sign_pow(m + 1), m)));
    return series_exp(x, QScalar::constant(lattice, Rational(1)));
}

// p+_nu expanded in p1, p2 (the p3 slot stays empty).
SeriesPoly<Rational> pplus_product(const Partition& nu, int N, const FamilyCutoffs& cutoffs) {
    const std::vector<int> c2 = {cutoffs[0], cutoffs[1]};
    SeriesPoly<Rational> r({"p1", "p2"}, c2);
    r.add(r.unit_monomial(), Rational(1));
    for (int k : nu.parts()) {
        SeriesPoly<Rational> lin({"p1", "p2"}, c2);
        lin.add({Partition{}, Partition{k}}, Rational(1));
        if (k % N == 0) {
            const int s = mutation_is(Mutation::wrong_pplus) ? 1 : sign_pow(k + 1);
            lin.add({Partition{k / N}, Partition{}}, Rational(s * N));
        }
        r = r * lin;
    }
    return r;
}

}  // namespace

TriSeries make_tri_series(const FamilyCutoffs& cutoffs) {
    return TriSeries(kFamilies, {cutoffs[0], cutoffs[1], cutoffs[2]});
}

Rational expG_weight(const PartitionTriple& mu, const Rational& tau) {
    const Rational one(1);
    const Rational w[3] = {one, tau, -one - tau};
    const long long k[3] = {mu.a.kappa(), mu.b.kappa(), mu.c.kappa()};
    Rational s(0);
    for (int a = 0; a < 3; ++a) s += Rational(k[a]) * w[(a + 1) % 3] / w[a];
    return -s / Rational(2);
}

Rational W_weight(const PartitionTriple& mu, const Rational& tau) {
    return expG_weight(mu, tau) - Rational(mu.a.kappa() + mu.b.kappa() + mu.c.kappa(), 2);
}

QScalar expG_schur_coefficient(const PartitionTriple& mu, const Rational& tau, int window) {
    const int lattice = lattice_for_tau(tau);
    return QScalar::q_power(lattice, expG_weight(mu, tau)) * lllz_coefficient(mu, window).relattice(lattice);
}

QScalar W_schur_coefficient(const PartitionTriple& mu, const Rational& tau, int window) {
    const int lattice = lattice_for_tau(tau);
    return QScalar::q_power(lattice, W_weight(mu, tau)) * vertex_C(mu, window).relattice(lattice);
}

SchurTable schur_table(const FamilyCutoffs& cutoffs, const std::function<bool(const PartitionTriple&)>& keep,
                       const std::function<QScalar(const PartitionTriple&)>& coefficient, int jobs) {
    std::vector<PartitionTriple> triples;
    for (const auto& a : partitions_up_to(cutoffs[0]))
        for (const auto& b : partitions_up_to(cutoffs[1]))
            for (const auto& c : partitions_up_to(cutoffs[2]))
                if (!keep || keep({a, b, c})) triples.push_back({a, b, c});
    std::vector<QScalar> values(triples.size());
    parallel_for(triples.size(), jobs, [&](std::size_t i) { values[i] = coefficient(triples[i]); });
    SchurTable t;
    for (std::size_t i = 0; i < triples.size(); ++i) t.emplace(triples[i], values[i]);
    return t;
}

TriSeries schur_to_power_series(const SchurTable& table, const FamilyCutoffs& cutoffs) {
    TriSeries r = make_tri_series(cutoffs);
    PowerSumCache ps;
    for (const auto& [mu, c] : table) {
        if (c.is_exact_zero()) continue;
        for (const auto& [n1, r1] : ps(mu.a))
            for (const auto& [n2, r2] : ps(mu.b))
                for (const auto& [n3, r3] : ps(mu.c)) r.add({n1, n2, n3}, c * (r1 * r2 * r3));
    }
    return r;
}

TriSeries expG_coefficients(const Rational& tau, const FamilyCutoffs& cutoffs, const HodgeConfig& cfg) {
    auto table = schur_table(
        cutoffs, nullptr, [&](const PartitionTriple& mu) { return expG_schur_coefficient(mu, tau, cfg.window); },
        cfg.jobs);
    return schur_to_power_series(table, cutoffs);
}

TriSeries W_coefficients(const Rational& tau, const FamilyCutoffs& cutoffs, const HodgeConfig& cfg) {
    auto table = schur_table(
        cutoffs, nullptr, [&](const PartitionTriple& mu) { return W_schur_coefficient(mu, tau, cfg.window); },
        cfg.jobs);
    return schur_to_power_series(table, cutoffs);
}

void compare_series(CheckReport& report, const std::string& label, const TriSeries& a, const TriSeries& b,
                    int min_width, int window) {
    const QScalar zero(series_lattice(a, b));
    std::map<Monomial, std::pair<QScalar, QScalar>> all;
    for (const auto& [m, c] : a.terms()) all.emplace(m, std::pair{c, zero});
    for (const auto& [m, c] : b.terms()) {
        auto it = all.find(m);
        if (it == all.end()) {
            all.emplace(m, std::pair{zero, c});
        } else {
            it->second.second = c;
        }
    }
    for (const auto& [m, lr] : all) report.compare(label + " " + monomial_label(m), lr.first, lr.second, min_width, window);
}

CheckReport verify_W_equals_expG(const Rational& tau, const FamilyCutoffs& cutoffs, const HodgeConfig& cfg) {
    const int lattice = lattice_for_tau(tau);
    CheckReport r;
    r.identity = "W_equals_expG";
    r.params = {{"tau", tau.str()}, {"cutoffs", cutoffs}};
    compare_series(r, "tau=" + tau.str(), W_coefficients(tau, cutoffs, cfg), expG_coefficients(tau, cutoffs, cfg),
                   cfg.min_width * lattice, cfg.compare_window * lattice);
    return r;
}

CheckReport verify_reduction_tauN(int N, const FamilyCutoffs& cutoffs, const HodgeConfig& cfg) {
    if (N < 1) throw std::invalid_argument("reduction needs N >= 1");
    const Rational tau(N);
    const int lattice = lattice_for_tau(tau);
    const TriSeries lhs = expG_coefficients(tau, cutoffs, cfg);

    // Two-partition coefficients of exp G(0, p+, p3).
    const FamilyCutoffs plus_cut = {0, N * cutoffs[0] + cutoffs[1], cutoffs[2]};
    auto table = schur_table(
        plus_cut, nullptr, [&](const PartitionTriple& mu) { return expG_schur_coefficient(mu, tau, cfg.window); },
        cfg.jobs);
    TriSeries reduced = make_tri_series(cutoffs);
    PowerSumCache ps;
    std::map<Partition, SeriesPoly<Rational>> plus_memo;
    for (const auto& [mu, c] : table) {
        if (c.is_exact_zero()) continue;
        for (const auto& [n2, r2] : ps(mu.b)) {
            auto it = plus_memo.find(n2);
            if (it == plus_memo.end()) it = plus_memo.emplace(n2, pplus_product(n2, N, cutoffs)).first;
            if (it->second.empty()) continue;
            for (const auto& [n3, r3] : ps(mu.c))
                for (const auto& [m12, r12] : it->second.terms()) reduced.add({m12[0], m12[1], n3}, c * (r2 * r3 * r12));
        }
    }
    const TriSeries rhs = reduced * anomaly_exponential(N + 1, cutoffs, lattice);

    CheckReport r;
    r.identity = "reduction_tauN";
    r.params = {{"N", N}, {"cutoffs", cutoffs}};
    compare_series(r, "N=" + std::to_string(N), lhs, rhs, cfg.min_width * lattice, cfg.compare_window * lattice);
    return r;
}

CheckReport verify_quadratic_expansion(int degree) {
    const std::vector<int> cut = {degree, degree};
    SeriesPoly<Rational> x({"x", "z"}, cut, degree);
    for (int m = 1; 3 * m <= degree; ++m) x.add({Partition{m}, Partition{2 * m}}, Rational(sign_pow(m + 1), m));
    const SeriesPoly<Rational> lhs = series_exp(x, Rational(1));

    SeriesPoly<Rational> rhs({"x", "z"}, cut, degree);
    PowerSumCache ps;
    for (int s = 0; 3 * s <= degree; ++s)
        for (const auto& eta1 : partitions_of(s))
            for (const auto& eta3 : partitions_of(2 * s)) {
                const Rational xs = quadratic_character_sum(eta1, eta3);
                if (xs.is_zero()) continue;
                for (const auto& [n1, r1] : ps(eta1.conjugate()))
                    for (const auto& [n3, r3] : ps(eta3)) rhs.add({n1, n3}, xs * r1 * r3);
            }

    CheckReport r;
    r.identity = "quadratic_expansion";
    r.params = {{"degree", degree}};
    std::map<Monomial, std::pair<Rational, Rational>> all;
    for (const auto& [m, c] : lhs.terms()) all[m].first = c;
    for (const auto& [m, c] : rhs.terms()) all[m].second = c;
    for (const auto& [m, lr] : all)
        r.compare_exact("x" + m[0].str() + " z" + m[1].str(), lr.first.str(), lr.second.str());
    return r;
}

CheckReport verify_schur_expansion_prop43(FockContext& ctx, int per_family, const HodgeConfig& cfg) {
    const FamilyCutoffs cutoffs = {per_family, per_family, per_family};
    const FockEngine& e = ctx.engine(1);
    const Operator g = op::G(Partition{}, Rational(1));
    CheckReport r;
    r.identity = "schur_expansion_prop43";
    r.params = {{"per_family", per_family}};

    // <theta|G_0(1)|kappa> for |kappa| <= per_family, |theta| <= 2 per_family.
    std::map<Partition, std::map<Partition, QScalar>> columns;
    for (const auto& kap : partitions_up_to(per_family)) columns[kap] = e.column(g, kap, 2 * per_family);
    auto element = [&](const Partition& theta, const Partition& kap) {
        const auto& col = columns.at(kap);
        auto it = col.find(theta);
        return it == col.end() ? e.zero() : it->second;
    };

    SchurTable engine_table;
    for (const auto& a : partitions_up_to(per_family))
        for (const auto& b : partitions_up_to(per_family))
            for (const auto& c : partitions_up_to(per_family)) {
                const Partition ta = a.conjugate();
                const Partition nu3 = c.conjugate();
                QScalar lhs = e.zero();
                QScalar rhs = e.zero();
                for (const auto& nup : partitions_of(a.weight() + b.weight())) {
                    const long long lr = lr_coefficient(ta, b, nup);
                    if (lr == 0) continue;
                    lhs += element(nup.conjugate(), c) * Rational(lr);
                    const Rational ex = Rational(nup.kappa()) + Rational(nu3.kappa(), 4);
                    rhs += QScalar::q_power(1, ex) * schur_spec(nup, Specialization::rho(), cfg.window) *
                           schur_spec(nu3, Specialization::shifted(nup), cfg.window) * Rational(lr);
                }
                r.compare("s" + a.str() + "(x)s" + b.str() + "(y)s" + c.str() + "(z)", lhs, rhs, cfg.min_width,
                          cfg.compare_window);
                engine_table.emplace(PartitionTriple{a, b, c}, lhs);
            }

    const TriSeries fermionic =
        schur_to_power_series(engine_table, cutoffs) * anomaly_exponential(2, cutoffs, 1);
    compare_series(r, "W(x,y,z;1)", W_coefficients(Rational(1), cutoffs, cfg), fermionic, cfg.min_width,
                   cfg.compare_window);
    return r;
}

}  // namespace topvert
