#include "topvert/fock_checks.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "topvert/ribbon.hpp"
#include "topvert/series_poly.hpp"

namespace topvert {

const FockEngine& FockContext::engine(int lattice, int boost) {
    std::lock_guard lock(mutex_);
    auto& slot = engines_[{lattice, boost}];
    if (!slot) {
        FockConfig c = base_;
        c.lattice = lattice;
        c.window <<= boost;
        slot = std::make_unique<FockEngine>(c);
    }
    return *slot;
}

namespace {

QScalar rat(const FockEngine& e, const Rational& c) {
    return QScalar::constant(e.lattice(), c);
}

int sign_pow(long long n) {
    return n % 2 == 0 ? 1 : -1;
}

std::string pair_label(const std::string& label, const Partition& lam, const Partition& mu) {
    return label + " <" + lam.str() + "|.|" + mu.str() + ">";
}

std::map<Partition, QScalar> sum_columns(const FockEngine& e, const OpSum& s, const Partition& mu, int max_weight) {
    std::map<Partition, QScalar> out;
    for (const auto& t : s) {
        if (t.coeff.is_exact_zero()) continue;
        for (const auto& [lam, c] : e.column(t.op, mu, max_weight)) {
            auto it = out.find(lam);
            if (it == out.end()) {
                out.emplace(lam, t.coeff * c);
            } else {
                it->second += t.coeff * c;
            }
        }
    }
    return out;
}

}  // namespace

void compare_operators(const FockEngine& e, CheckReport& report, const std::string& label, const OpSum& lhs,
                       const OpSum& rhs, int max_weight) {
    const auto basis = partitions_up_to(max_weight);
    const auto& cfg = e.config();
    for (const auto& mu : basis) {
        std::map<Partition, QScalar> l, r;
        try {
            l = sum_columns(e, lhs, mu, max_weight);
            r = sum_columns(e, rhs, mu, max_weight);
        } catch (const InconclusiveComparison& ex) {
            report.record(CheckStatus::inconclusive, label + " column |" + mu.str() + ">", {}, {}, ex.what());
            continue;
        }
        for (const auto& lam : basis) {
            auto il = l.find(lam);
            auto ir = r.find(lam);
            const QScalar a = il == l.end() ? e.zero() : il->second;
            const QScalar b = ir == r.end() ? e.zero() : ir->second;
            report.compare(pair_label(label, lam, mu), a, b, cfg.min_width, cfg.compare_window);
        }
    }
}

std::string shift_kind_name(ShiftKind k) {
    switch (k) {
    case ShiftKind::basic1:
        return "basic1";
    case ShiftKind::basic2:
        return "basic2";
    case ShiftKind::basic3:
        return "basic3";
    case ShiftKind::gen1:
        return "gen1";
    case ShiftKind::gen2:
        return "gen2";
    case ShiftKind::gen3:
        return "gen3";
    case ShiftKind::heis1:
        return "heis1";
    case ShiftKind::heis2:
        return "heis2";
    case ShiftKind::A_tau:
        return "A_tau";
    case ShiftKind::B_tau:
        return "B_tau";
    }
    return "?";
}

std::vector<ShiftKind> all_shift_kinds() {
    return {ShiftKind::basic1, ShiftKind::basic2, ShiftKind::basic3, ShiftKind::gen1,  ShiftKind::gen2,
            ShiftKind::gen3,   ShiftKind::heis1,  ShiftKind::heis2,  ShiftKind::A_tau, ShiftKind::B_tau};
}

int lattice_for_tau(const Rational& tau) {
    if (tau.is_zero() || tau == Rational(-1)) throw std::invalid_argument("tau must differ from 0 and -1");
    const Rational one(1);
    return QScalar::lattice_for({Rational(1, 2), tau, one / tau, tau / (one + tau), one / (one + tau)});
}

namespace {

nlohmann::json params_json(ShiftKind kind, const ShiftParams& p) {
    nlohmann::json j;
    switch (kind) {
    case ShiftKind::basic1:
    case ShiftKind::basic2:
    case ShiftKind::basic3:
        j["k"] = p.k;
        j["m"] = p.m;
        break;
    case ShiftKind::gen1:
    case ShiftKind::gen2:
        j["alpha"] = p.alpha.parts();
        j["k"] = p.k;
        j["m"] = p.m;
        break;
    case ShiftKind::heis1:
    case ShiftKind::heis2:
        j["alpha"] = p.alpha.parts();
        j["m"] = p.m;
        break;
    case ShiftKind::gen3:
        j["gamma"] = p.gamma.str();
        j["k"] = p.k;
        j["m"] = p.m;
        break;
    case ShiftKind::A_tau:
    case ShiftKind::B_tau:
        j["alpha"] = p.alpha.parts();
        j["m"] = p.m;
        j["tau"] = p.tau.str();
        break;
    }
    return j;
}

std::string params_label(ShiftKind kind, const ShiftParams& p) {
    return shift_kind_name(kind) + params_json(kind, p).dump();
}

// sum over beta in R_{k,alpha} of sgn(alpha,beta) q^{-m(kappa(alpha)-kappa(beta))/2k} L_beta (or L'_beta).
void add_ribbon_terms(const FockEngine& e, OpSum& out, const Partition& alpha, int k, int m, int overall, bool primed) {
    for (const auto& step : ribbon_set(alpha, k)) {
        const Rational ex = Rational(-m) * Rational(alpha.kappa() - step.beta.kappa()) / Rational(2 * k);
        out.push_back({e.q_pow(ex, Rational(overall * step.sign)), primed ? op::L_prime(step.beta) : op::L(step.beta)});
    }
}

}  // namespace

CheckReport check_shift_symmetry(FockContext& ctx, ShiftKind kind, const ShiftParams& p, int max_weight) {
    const Partition empty;
    auto need = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(what);
    };
    int lattice = 1;
    if (kind == ShiftKind::A_tau || kind == ShiftKind::B_tau) lattice = lattice_for_tau(p.tau);
    return ctx.retrying(lattice, [&](const FockEngine& e) {
        CheckReport report;
        report.identity = "shift_symmetry." + shift_kind_name(kind);
        report.params = params_json(kind, p);
        report.params["max_weight"] = max_weight;
        OpSum lhs, rhs;
        const QScalar one = e.one();
        switch (kind) {
        case ShiftKind::basic1:
            need(p.k >= 1, "basic1 needs k >= 1");
            lhs.push_back({one, op::product({op::V(p.k, p.m), op::L(empty)})});
            rhs.push_back({rat(e, Rational(sign_pow(p.k))), op::product({op::L(empty), op::V(p.k, p.m - p.k)})});
            break;
        case ShiftKind::basic2:
            need(p.k >= 1, "basic2 needs k >= 1");
            lhs.push_back({one, op::product({op::V(-p.k, p.m), op::L_prime(empty)})});
            rhs.push_back({one, op::product({op::L_prime(empty), op::V(-p.k, p.m - p.k)})});
            break;
        case ShiftKind::basic3:
            lhs.push_back(
                {one, op::product({op::q_power_K(Rational(1, 2)), op::V(p.k, p.m), op::q_power_K(Rational(-1, 2))})});
            rhs.push_back({one, op::V(p.k - p.m, p.m)});
            break;
        case ShiftKind::gen1:
            need(p.k != 0, "gen1 needs k != 0");
            lhs.push_back({one, op::product({op::V(p.k, p.m), op::L(p.alpha)})});
            rhs.push_back({rat(e, Rational(sign_pow(p.k))), op::product({op::L(p.alpha), op::V(p.k, p.m - p.k)})});
            add_ribbon_terms(e, rhs, p.alpha, p.k, p.m, 1, false);
            break;
        case ShiftKind::gen2:
            need(p.k != 0, "gen2 needs k != 0");
            lhs.push_back({one, op::product({op::V(-p.k, p.m), op::L_prime(p.alpha)})});
            rhs.push_back({one, op::product({op::L_prime(p.alpha), op::V(-p.k, p.m - p.k)})});
            add_ribbon_terms(e, rhs, p.alpha, p.k, p.m, -sign_pow(p.m), true);
            break;
        case ShiftKind::heis1:
        case ShiftKind::heis2: {
            need(p.m != 0, "Heisenberg identities need m != 0");
            const bool primed = kind == ShiftKind::heis2;
            const Operator La = primed ? op::L_prime(p.alpha) : op::L(p.alpha);
            QScalar phi = phi_value(-p.m, p.alpha, e.lattice(), e.config().window);
            if (primed) phi *= Rational(-sign_pow(p.m));
            lhs.push_back({one, op::product({op::J(p.m), La})});
            rhs.push_back({one, op::product({La, op::J(p.m)})});
            rhs.push_back({phi, La});
            break;
        }
        case ShiftKind::gen3: {
            const Rational shift = Rational(2 * p.m) * p.gamma;
            need(shift.is_integer(), "gen3 needs 2 m gamma integral");
            lhs.push_back({one, op::product({op::q_power_K(p.gamma), op::V(p.k, p.m), op::q_power_K(-p.gamma)})});
            rhs.push_back({one, op::V(p.k - static_cast<int>(shift.to_int()), p.m)});
            break;
        }
        case ShiftKind::A_tau:
        case ShiftKind::B_tau: {
            const Rational mt = Rational(p.m) * p.tau;
            need(p.m != 0 && mt.is_integer() && !mt.is_zero(), "A_tau/B_tau need m tau a nonzero integer");
            const int n = static_cast<int>(mt.to_int());
            const int shifted = p.m + n;  // m(1+tau)
            const bool primed = kind == ShiftKind::B_tau;
            auto G = [&](const Partition& a) { return primed ? op::G_prime(a, p.tau) : op::G(a, p.tau); };
            lhs.push_back({one, op::product({op::J(-p.m), G(p.alpha)})});
            rhs.push_back({rat(e, Rational(primed ? 1 : sign_pow(n))), op::product({G(p.alpha), op::J(-shifted)})});
            const int overall = primed ? -sign_pow(p.m) : 1;
            for (const auto& step : ribbon_set(p.alpha, n))
                rhs.push_back({rat(e, Rational(overall * step.sign)), G(step.beta)});
            break;
        }
        }
        compare_operators(e, report, params_label(kind, p), lhs, rhs, max_weight);
        return report;
    });
}

CheckReport sweep_shift_symmetry(FockContext& ctx, ShiftKind kind, const ShiftSweep& s) {
    std::vector<ShiftParams> combos;
    const auto alphas = partitions_up_to(s.max_alpha);
    auto ks = [&](bool nonzero) {
        std::vector<int> v;
        for (int k = -s.max_k; k <= s.max_k; ++k)
            if (!nonzero || k != 0) v.push_back(k);
        return v;
    };
    auto ms = [&](bool nonzero) {
        std::vector<int> v;
        for (int m = -s.max_m; m <= s.max_m; ++m)
            if (!nonzero || m != 0) v.push_back(m);
        return v;
    };
    ShiftParams p;
    switch (kind) {
    case ShiftKind::basic1:
    case ShiftKind::basic2:
        for (int k = 1; k <= s.max_k; ++k)
            for (int m : ms(false))
                combos.push_back({{}, k, m});
        break;
    case ShiftKind::basic3:
        for (int k : ks(false))
            for (int m : ms(false))
                combos.push_back({{}, k, m});
        break;
    case ShiftKind::gen1:
    case ShiftKind::gen2:
        for (const auto& a : alphas)
            for (int k : ks(true))
                for (int m : ms(false))
                    combos.push_back({a, k, m});
        break;
    case ShiftKind::heis1:
    case ShiftKind::heis2:
        for (const auto& a : alphas)
            for (int m : ms(true))
                combos.push_back({a, 0, m});
        break;
    case ShiftKind::gen3:
        for (const Rational& g : {Rational(-1), Rational(-1, 2), Rational(1, 4), Rational(1, 2), Rational(1)})
            for (int k : ks(false))
                for (int m : ms(false))
                    if ((Rational(2 * m) * g).is_integer()) combos.push_back({{}, k, m, g});
        break;
    case ShiftKind::A_tau:
    case ShiftKind::B_tau:
        for (const auto& a : alphas)
            for (int m : ms(true))
                for (const auto& t : s.taus) {
                    const Rational mt = Rational(m) * t;
                    if (mt.is_integer() && !mt.is_zero()) combos.push_back({a, 0, m, Rational(1, 2), t});
                }
        break;
    }
    std::vector<CheckReport> parts(combos.size());
    parallel_for(combos.size(), ctx.jobs(),
                 [&](std::size_t i) { parts[i] = check_shift_symmetry(ctx, kind, combos[i], s.max_weight); });
    CheckReport r;
    r.identity = "shift_symmetry." + shift_kind_name(kind);
    r.params = {{"max_alpha", s.max_alpha},
                {"max_k", s.max_k},
                {"max_m", s.max_m},
                {"max_weight", s.max_weight},
                {"combinations", combos.size()}};
    for (const auto& part : parts)
        r.merge(part);
    return r;
}

CheckReport check_quantum_torus(FockContext& ctx, int bound, int max_weight) {
    CheckReport proto;
    proto.identity = "quantum_torus_commutator";
    proto.params = {{"bound", bound}, {"max_weight", max_weight}};
    return ctx.retrying(1, [&](const FockEngine& e) {
        CheckReport r = proto;
        const QScalar one = e.one();
        for (int k = -bound; k <= bound; ++k)
            for (int l = -bound; l <= bound; ++l)
                for (int m = -bound; m <= bound; ++m)
                    for (int n = -bound; n <= bound; ++n) {
                        OpSum lhs{{one, op::product({op::V(k, m), op::V(l, n)})},
                                  {-one, op::product({op::V(l, n), op::V(k, m)})}};
                        OpSum rhs;
                        const Rational h(k * n - l * m, 2);
                        const QScalar c = e.q_pow(-h) - e.q_pow(h);
                        if (!(k + l == 0 && m + n == 0)) rhs.push_back({c, op::V(k + l, m + n)});
                        if (k + l == 0 && m + n == 0 && m != 0)
                            rhs.push_back({rat(e, Rational(m)), op::q_const(Rational(0))});
                        std::ostringstream label;
                        label << "[V(" << k << "," << m << "),V(" << l << "," << n << ")]";
                        compare_operators(e, r, label.str(), lhs, rhs, max_weight);
                    }
        return r;
    });
}

CheckReport check_gamma_adjointness(FockContext& ctx, int max_weight) {
    CheckReport proto;
    proto.identity = "gamma_adjointness";
    proto.params = {{"max_weight", max_weight}};
    return ctx.retrying(1, [&](const FockEngine& e) {
        CheckReport r = proto;
        const auto basis = partitions_up_to(max_weight);
        for (const auto& nu : partitions_up_to(2))
            for (bool primed : {false, true}) {
                const Specialization s = Specialization::shifted(nu, primed);
                const Operator plus = primed ? op::gamma_prime_plus(s) : op::gamma_plus(s);
                const Operator minus = primed ? op::gamma_prime_minus(s) : op::gamma_minus(s);
                for (const auto& lam : basis)
                    for (const auto& mu : basis)
                        r.compare(
                            std::string(primed ? "Gamma'" : "Gamma") + nu.str() + " " + lam.str() + "," + mu.str(),
                            e.matrix_element(plus, lam, mu), e.matrix_element(minus, mu, lam), e.config().min_width,
                            e.config().compare_window);
            }
        return r;
    });
}

CheckReport check_self_adjoint(FockContext& ctx, int max_weight) {
    CheckReport proto;
    proto.identity = "two_legged_self_adjoint";
    proto.params = {{"max_weight", max_weight}};
    return ctx.retrying(1, [&](const FockEngine& e) {
        CheckReport r = proto;
        const Operator o = op::product({op::gamma_minus(Specialization::rho()), op::gamma_plus(Specialization::rho())});
        const auto basis = partitions_up_to(max_weight);
        for (const auto& a : basis)
            for (const auto& b : basis)
                if (a < b)
                    r.compare("<" + a.str() + "|GG|" + b.str() + ">", e.matrix_element(o, a, b),
                              e.matrix_element(o, b, a), e.config().min_width, e.config().compare_window);
        return r;
    });
}

CheckReport check_exchange_formula(FockContext& ctx, const Partition& alpha, int max_weight) {
    CheckReport proto;
    proto.identity = "exchange_formula";
    proto.params = {{"alpha", alpha.parts()}, {"max_weight", max_weight}};
    return ctx.retrying(1, [&](const FockEngine& e) {
        CheckReport r = proto;
        const Operator lhs = op::product({op::q_power_K(Rational(1, 2)), op::gamma_minus(Specialization::rho()),
                                          op::gamma_plus(Specialization::rho())});
        const Operator rhs = op::gamma_prime_minus(Specialization::shifted(alpha, true));
        const QScalar s = e.schur_rho(alpha.conjugate());
        const auto l = e.column(lhs, alpha.conjugate(), max_weight);
        const auto rr = e.column(rhs, Partition{}, max_weight);
        for (const auto& lam : partitions_up_to(max_weight)) {
            auto il = l.find(lam);
            auto ir = rr.find(lam);
            r.compare("component " + lam.str(), il == l.end() ? e.zero() : il->second,
                      ir == rr.end() ? e.zero() : s * ir->second, e.config().min_width, e.config().compare_window);
        }
        return r;
    });
}

CheckReport check_transpose_property(FockContext& ctx, const Rational& tau, int max_alpha, int max_weight) {
    CheckReport proto;
    proto.identity = "G_transpose";
    proto.params = {{"tau", tau.str()}, {"max_alpha", max_alpha}, {"max_weight", max_weight}};
    const Rational one(1);
    const Rational t1 = -one / (one + tau);
    const Rational t2 = one / tau;
    const int L1 = lattice_for_tau(t1);
    const int L2 = lattice_for_tau(t2);
    const int L = std::lcm(L1, L2);
    return ctx.retrying(L, [&](const FockEngine& e) {
        CheckReport r = proto;
        const auto basis = partitions_up_to(max_weight);
        for (const auto& a : partitions_up_to(max_alpha)) {
            const Operator g1 = op::G(a, t1);
            const Operator g2 = op::G(a.conjugate(), t2);
            for (const auto& mu : basis) {
                const auto c1 = e.column(g1, mu, max_weight);  // <beta|g1|mu>
                for (const auto& beta : basis) {
                    auto it = c1.find(beta);
                    r.compare("alpha=" + a.str() + " <" + beta.str() + "|.|" + mu.str() + ">",
                              it == c1.end() ? e.zero() : it->second, e.matrix_element(g2, mu, beta),
                              e.config().min_width, e.config().compare_window);
                }
            }
        }
        return r;
    });
}

namespace {

// All sub-multisets of the parts of nu, paired with their complements.
std::vector<std::pair<Partition, Partition>> splits(const Partition& nu) {
    std::vector<std::pair<int, int>> mult;  // (part, multiplicity)
    for (int p : nu.parts()) {
        if (!mult.empty() && mult.back().first == p) {
            ++mult.back().second;
        } else {
            mult.push_back({p, 1});
        }
    }
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> pick(mult.size(), 0);
    for (;;) {
        std::vector<int> a, b;
        for (std::size_t i = 0; i < mult.size(); ++i) {
            a.insert(a.end(), static_cast<std::size_t>(pick[i]), mult[i].first);
            b.insert(b.end(), static_cast<std::size_t>(mult[i].second - pick[i]), mult[i].first);
        }
        out.push_back({Partition(a), Partition(b)});
        std::size_t i = 0;
        while (i < mult.size() && pick[i] == mult[i].second)
            pick[i++] = 0;
        if (i == mult.size()) break;
        ++pick[i];
    }
    return out;
}

// Coefficient of t^nu in exp(sum_k c_k t_k J_{k*scale}): prod_k (c_k J_{k scale})^{m_k}/m_k!.
std::pair<Rational, std::vector<Operator>> exp_coefficient(const Partition& nu, int scale,
                                                           const std::function<int(int)>& sign) {
    Rational c(1);
    std::vector<Operator> ops;
    int prev = 0, run = 0;
    for (int p : nu.parts()) {
        run = p == prev ? run + 1 : 1;
        prev = p;
        c = c * Rational(sign(p)) / Rational(run);
        ops.push_back(op::J(p * scale));
    }
    return {c, ops};
}

}  // namespace

CheckReport check_factorization(FockContext& ctx, int N, bool primed, int t_degree, int max_weight) {
    if (N < 1) throw std::invalid_argument("factorization needs N >= 1");
    CheckReport proto;
    proto.identity = primed ? "factorization_primed" : "factorization";
    proto.params = {{"tau", "1/" + std::to_string(N)}, {"t_degree", t_degree}, {"max_weight", max_weight}};
    const Rational tau(1, N);
    return ctx.retrying(lattice_for_tau(tau), [&](const FockEngine& e) {
        CheckReport r = proto;
        auto G = [&](const Partition& a) { return primed ? op::G_prime(a, tau) : op::G(a, tau); };
        std::map<Partition, SeriesPoly<Rational>> schur;
        for (const auto& a : partitions_up_to(t_degree))
            schur.emplace(a, schur_in_times(a, t_degree));
        const std::function<int(int)> left_sign = [&](int k) {
            return primed ? -sign_pow(static_cast<long long>(k) * N) : 1;
        };
        const std::function<int(int)> right_sign = [&](int k) {
            return primed ? sign_pow(static_cast<long long>(k) * N) : -sign_pow(k);
        };
        for (const auto& nu : partitions_up_to(t_degree)) {
            OpSum lhs, rhs;
            for (const auto& a : partitions_of(nu.weight())) {
                const Rational* c = schur.at(a).find(Monomial{nu});
                if (c) lhs.push_back({rat(e, *c), G(a)});
            }
            for (const auto& [left, right] : splits(nu)) {
                auto [cl, opl] = exp_coefficient(left, N, left_sign);
                auto [cr, opr] = exp_coefficient(right, N + 1, right_sign);
                std::vector<Operator> f = opl;
                f.push_back(G(Partition{}));
                f.insert(f.end(), opr.begin(), opr.end());
                rhs.push_back({rat(e, cl * cr), op::product(f)});
            }
            compare_operators(e, r, "t^" + nu.str(), lhs, rhs, max_weight);
        }
        return r;
    });
}

CheckReport check_shifted_flow(FockContext& ctx, int N, int max_m, int max_weight) {
    CheckReport proto;
    proto.identity = "shifted_flow";
    proto.params = {{"N", N}, {"max_m", max_m}, {"max_weight", max_weight}};
    const Rational tau(1, N);
    return ctx.retrying(lattice_for_tau(tau), [&](const FockEngine& e) {
        CheckReport r = proto;
        for (int m = 1; m <= max_m; ++m) {
            OpSum lhs{{e.one(), op::product({op::G(Partition{}, tau), op::J(-m * (N + 1))})}};
            OpSum rhs{{rat(e, Rational(sign_pow(m))), op::product({op::J(-m * N), op::G(Partition{}, tau)})}};
            compare_operators(e, r, "m=" + std::to_string(m), lhs, rhs, max_weight);
        }
        return r;
    });
}

}  // namespace topvert
