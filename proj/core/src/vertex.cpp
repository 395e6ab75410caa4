#include "topvert/vertex.hpp"

#include <map>
#include <string>

#include "topvert/mutation.hpp"
#include "topvert/ribbon.hpp"
#include "topvert/symmetric.hpp"

namespace topvert {

namespace {

std::string triple_label(const PartitionTriple& t) {
    return "(" + t.a.str() + "," + t.b.str() + "," + t.c.str() + ")";
}

QScalar q_half_power(const Rational& e) {
    return QScalar::q_power(1, e);
}

long long kappa_sum(const PartitionTriple& t) {
    return t.a.kappa() + t.b.kappa() + t.c.kappa();
}

// Partitions of weight n that contain `inner`.
std::vector<Partition> containing(const Partition& inner, int n) {
    std::vector<Partition> out;
    if (n < inner.weight()) return out;
    for (auto& p : partitions_of(n))
        if (p.contains(inner)) out.push_back(p);
    return out;
}

// Subdiagrams of mu of weight n.
std::vector<Partition> inside(const Partition& mu, int n) {
    std::vector<Partition> out;
    if (n < 0 || n > mu.weight()) return out;
    for (auto& p : partitions_of(n))
        if (mu.contains(p)) out.push_back(p);
    return out;
}

// Evaluates f on each triple in parallel; the merge is in triple order.
template <class F>
CheckReport per_triple(const std::string& identity, const std::vector<PartitionTriple>& triples, int jobs, F&& f) {
    std::vector<CheckReport> parts(triples.size());
    parallel_for(triples.size(), jobs, [&](std::size_t i) { parts[i] = f(triples[i]); });
    CheckReport r;
    r.identity = identity;
    for (const auto& p : parts) r.merge(p);
    return r;
}

}  // namespace

QScalar vertex_C(const PartitionTriple& mu, int window) {
    const Partition t2 = mu.b.conjugate();
    const Partition t3 = mu.c.conjugate();
    const Specialization x = Specialization::shifted(t2);
    const Specialization y = Specialization::shifted(mu.b);
    QScalar sum(1);
    for (const auto& eta : subdiagrams(mu.a)) {
        if (!t3.contains(eta)) continue;
        sum += skew_schur_spec(mu.a, eta, x, window) * skew_schur_spec(t3, eta, y, window);
    }
    QScalar c = schur_spec(t2, Specialization::rho(), window) * sum;
    if (mutation_is(Mutation::drop_framing)) return c;
    return q_half_power(Rational(mu.a.kappa(), 2)) * c;
}

QScalar vertex_C_tilde(const PartitionTriple& mu, int window) {
    return q_half_power(Rational(-kappa_sum(mu), 2)) * vertex_C(mu, window);
}

QScalar vertex_C_via_fock(FockContext& ctx, const PartitionTriple& mu, const Rational& tau) {
    const int lattice = lattice_for_tau(tau);
    const Rational one(1);
    const Rational pre = (one + tau) * Rational(mu.a.kappa(), 2) - Rational(mu.b.kappa()) / (Rational(2) * tau) +
                         tau * Rational(mu.c.kappa()) / (Rational(2) * (one + tau));
    const Operator g = op::G(mu.b.conjugate(), tau);
    for (int boost = 0;; ++boost) {
        const FockEngine& e = ctx.engine(lattice, boost);
        try {
            return e.q_pow(pre) * e.matrix_element(g, mu.a, mu.c.conjugate());
        } catch (const InconclusiveComparison&) {
            if (boost >= ctx.max_boost()) throw;
        }
    }
}

Rational quadratic_character_sum(const Partition& eta1, const Partition& eta3) {
    Rational s(0);
    if (eta3.weight() != 2 * eta1.weight()) return s;
    for (const auto& xi : partitions_of(eta1.weight())) {
        const long long c = character(eta1, xi) * character(eta3, double_parts(xi));
        if (c != 0) s += Rational(c, z_mu(xi));
    }
    return s;
}

QScalar lllz_coefficient(const PartitionTriple& mu, int window) {
    const Partition& m1 = mu.a;
    const Partition& m2 = mu.b;
    const Partition& m3 = mu.c;
    QScalar total(1);
    for (int s = 0; s <= m1.weight() && 2 * s <= m3.weight(); ++s) {
        for (const auto& eta1 : partitions_of(s)) {
            const Partition t_eta1 = eta1.conjugate();
            if (!m1.contains(t_eta1)) continue;
            for (const auto& eta3 : inside(m3, 2 * s)) {
                const Rational x = quadratic_character_sum(eta1, eta3);
                if (x.is_zero()) continue;
                for (const auto& nu1 : inside(m1, m1.weight() - s)) {
                    const long long c1 = lr_coefficient(t_eta1, nu1, m1);
                    if (c1 == 0) continue;
                    const Partition t_nu1 = nu1.conjugate();
                    for (const auto& nup : containing(m2, nu1.weight() + m2.weight())) {
                        const long long c2 = lr_coefficient(t_nu1, m2, nup);
                        if (c2 == 0) continue;
                        const QScalar s_plus = schur_spec(nup, Specialization::rho(), window);
                        const Specialization shifted = Specialization::shifted(nup);
                        for (const auto& t_nu3 : inside(m3, m3.weight() - 2 * s)) {
                            const long long c3 = lr_coefficient(eta3, t_nu3, m3);
                            if (c3 == 0) continue;
                            const Partition nu3 = t_nu3.conjugate();
                            const Rational e = Rational(nup.kappa()) + Rational(nu3.kappa(), 4);
                            total += q_half_power(e) * s_plus * schur_spec(nu3, shifted, window) *
                                     (x * Rational(c1 * c2 * c3));
                        }
                    }
                }
            }
        }
    }
    const Rational pre = Rational(m1.kappa(), 2) - Rational(m2.kappa()) - Rational(m3.kappa(), 4);
    return q_half_power(pre) * total;
}

CheckReport verify_theorem1(int weight_bound, const VertexConfig& cfg) {
    CheckReport r = per_triple("theorem1", triples_up_to(weight_bound), cfg.jobs, [&](const PartitionTriple& t) {
        CheckReport p;
        p.compare(triple_label(t), lllz_coefficient(t, cfg.window), vertex_C_tilde(t, cfg.window), cfg.min_width,
                  cfg.compare_window);
        return p;
    });
    r.params = {{"weight", weight_bound}};
    return r;
}

CheckReport verify_cyclic(int weight_bound, const VertexConfig& cfg) {
    CheckReport r = per_triple("cyclic", triples_up_to(weight_bound), cfg.jobs, [&](const PartitionTriple& t) {
        CheckReport p;
        const PartitionTriple rot{t.b, t.c, t.a};
        p.compare(triple_label(t) + " vs " + triple_label(rot), vertex_C(t, cfg.window), vertex_C(rot, cfg.window),
                  cfg.min_width, cfg.compare_window);
        return p;
    });
    r.params = {{"weight", weight_bound}};
    return r;
}

CheckReport verify_reduction_C(const PartitionTriple& mu, const VertexConfig& cfg) {
    const Partition& m1 = mu.a;
    const Partition& m2 = mu.b;
    const Partition& m3 = mu.c;
    const Partition none;
    QScalar rhs(1);
    for (int s = 0; s <= m1.weight() && 2 * s <= m3.weight(); ++s) {
        for (const auto& eta1 : partitions_of(s)) {
            const Partition t_eta1 = eta1.conjugate();
            if (!m1.contains(t_eta1)) continue;
            for (const auto& eta3 : inside(m3, 2 * s)) {
                const Rational x = quadratic_character_sum(eta1, eta3);
                if (x.is_zero()) continue;
                for (const auto& nu1 : inside(m1, m1.weight() - s)) {
                    const long long c1 = lr_coefficient(t_eta1, nu1, m1);
                    if (c1 == 0) continue;
                    for (const auto& nup : containing(m2, nu1.weight() + m2.weight())) {
                        const long long c2 = lr_coefficient(nu1.conjugate(), m2, nup);
                        if (c2 == 0) continue;
                        for (const auto& nu3 : inside(m3, m3.weight() - 2 * s)) {
                            const long long c3 = lr_coefficient(eta3, nu3, m3);
                            if (c3 == 0) continue;
                            const Rational e = Rational(nup.kappa()) + Rational(nu3.kappa(), 4);
                            rhs += q_half_power(e) * vertex_C_tilde({none, nup, nu3}, cfg.window) *
                                   (x * Rational(c1 * c2 * c3));
                        }
                    }
                }
            }
        }
    }
    const Rational pre = -Rational(m1.kappa(), 2) + Rational(m2.kappa()) + Rational(m3.kappa(), 4);
    CheckReport r;
    r.identity = "reduction_C";
    r.compare(triple_label(mu), q_half_power(pre) * vertex_C_tilde(mu, cfg.window), rhs, cfg.min_width,
              cfg.compare_window);
    return r;
}

CheckReport verify_reduction_C_all(int weight_bound, const VertexConfig& cfg) {
    CheckReport r = per_triple("reduction_C", triples_up_to(weight_bound), cfg.jobs,
                               [&](const PartitionTriple& t) { return verify_reduction_C(t, cfg); });
    r.params = {{"weight", weight_bound}};
    return r;
}

CheckReport verify_two_leg_chain(int weight_bound, const VertexConfig& cfg) {
    std::vector<PartitionTriple> pairs;
    for (const auto& t : triples_up_to(weight_bound))
        if (t.c.empty()) pairs.push_back(t);
    CheckReport r = per_triple("two_leg_chain", pairs, cfg.jobs, [&](const PartitionTriple& t) {
        const Partition& nup = t.a;
        const Partition& nu3 = t.b;
        const Partition tp = nup.conjugate();
        const Partition none;
        const QScalar closed = q_half_power(Rational(nu3.kappa(), 2)) *
                               schur_spec(nu3, Specialization::shifted(nup), cfg.window) *
                               schur_spec(nup, Specialization::rho(), cfg.window);
        const std::string label = "nu+=" + nup.str() + " nu3=" + nu3.str();
        CheckReport p;
        p.compare(label + " C(t nu+,0,nu3)", vertex_C({tp, none, nu3}, cfg.window), closed, cfg.min_width,
                  cfg.compare_window);
        p.compare(label + " C(nu3,t nu+,0)", vertex_C({nu3, tp, none}, cfg.window), closed, cfg.min_width,
                  cfg.compare_window);
        p.compare(label + " C(0,nu3,t nu+)", vertex_C({none, nu3, tp}, cfg.window), closed, cfg.min_width,
                  cfg.compare_window);
        return p;
    });
    r.params = {{"weight", weight_bound}};
    return r;
}

CheckReport verify_tau_independence(FockContext& ctx, int weight_bound, const std::vector<Rational>& taus) {
    std::vector<std::pair<PartitionTriple, Rational>> cases;
    for (const auto& t : triples_up_to(weight_bound))
        for (const auto& tau : taus) cases.emplace_back(t, tau);
    std::vector<CheckReport> parts(cases.size());
    parallel_for(cases.size(), ctx.jobs(), [&](std::size_t i) {
        const auto& [t, tau] = cases[i];
        const int lattice = lattice_for_tau(tau);
        const FockConfig& base = ctx.base();
        const std::string label = triple_label(t) + " tau=" + tau.str();
        try {
            const QScalar direct = vertex_C(t, base.window).relattice(lattice);
            parts[i].compare(label, vertex_C_via_fock(ctx, t, tau), direct, base.min_width, base.compare_window);
        } catch (const InconclusiveComparison& ex) {
            parts[i].record(CheckStatus::inconclusive, label, {}, {}, ex.what());
        }
    });
    CheckReport r;
    r.identity = "tau_independence";
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& tau : taus) ts.push_back(tau.str());
    r.params = {{"weight", weight_bound}, {"taus", ts}};
    for (const auto& p : parts) r.merge(p);
    return r;
}

}  // namespace topvert
