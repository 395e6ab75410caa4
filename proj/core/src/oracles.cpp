#include "topvert/oracles.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "topvert/fock.hpp"
#include "topvert/fock_checks.hpp"
#include "topvert/hodge.hpp"
#include "topvert/kp.hpp"
#include "topvert/mutation.hpp"
#include "topvert/ribbon.hpp"
#include "topvert/symmetric.hpp"
#include "topvert/vertex.hpp"

namespace topvert {
namespace oracle {

namespace {

// Fills row `row` of the tableau from column `col`; rows weakly increase, columns strictly increase.
void fill_tableau(const std::vector<int>& shape, int n, std::vector<std::vector<int>>& t, std::size_t row,
                  std::size_t col, std::vector<int>& exps, Poly& out) {
    if (row == shape.size()) {
        ++out[exps];
        return;
    }
    if (col == static_cast<std::size_t>(shape[row])) {
        fill_tableau(shape, n, t, row + 1, 0, exps, out);
        return;
    }
    int lo = col > 0 ? t[row][col - 1] : 0;
    if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
    for (int v = lo; v < n; ++v) {
        t[row][col] = v;
        ++exps[static_cast<std::size_t>(v)];
        fill_tableau(shape, n, t, row, col + 1, exps, out);
        --exps[static_cast<std::size_t>(v)];
    }
}

Partition from_exponents(const std::vector<int>& e) {
    std::vector<int> parts;
    for (int x : e)
        if (x > 0) parts.push_back(x);
    return Partition(parts);
}

std::mutex memo_mutex;

}  // namespace

Poly power_sum_poly(const Partition& nu, int n) {
    Poly out{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
    for (int k : nu.parts()) {
        Poly next;
        for (const auto& [e, c] : out)
            for (int i = 0; i < n; ++i) {
                auto f = e;
                f[static_cast<std::size_t>(i)] += k;
                next[f] += c;
            }
        out = std::move(next);
    }
    return out;
}

Poly schur_poly(const Partition& mu, int n) {
    Poly out;
    if (mu.length() > n) return out;
    std::vector<std::vector<int>> t;
    for (int p : mu.parts()) t.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    fill_tableau(mu.parts(), n, t, 0, 0, exps, out);
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            auto e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out[e] += ca * cb;
        }
    return out;
}

std::map<Partition, long long> schur_expand(Poly f, int n) {
    std::map<Partition, long long> out;
    for (;;) {
        while (!f.empty() && f.rbegin()->second == 0) f.erase(std::prev(f.end()));
        if (f.empty()) return out;
        const auto lead = f.rbegin()->first;
        const long long c = f.rbegin()->second;
        if (!std::is_sorted(lead.rbegin(), lead.rend()))
            throw std::logic_error("schur_expand: polynomial is not symmetric");
        const Partition eta = from_exponents(lead);
        out[eta] += c;
        for (const auto& [e, d] : schur_poly(eta, n)) f[e] -= c * d;
    }
}

long long character(const Partition& lambda, const Partition& nu) {
    if (lambda.weight() != nu.weight()) return 0;
    static std::map<Partition, std::map<Partition, long long>> memo;
    std::map<Partition, long long> expansion;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(nu);
        if (it != memo.end()) {
            auto c = it->second.find(lambda);
            return c == it->second.end() ? 0 : c->second;
        }
    }
    const int n = nu.weight();
    expansion = schur_expand(power_sum_poly(nu, n), n);
    std::lock_guard<std::mutex> lock(memo_mutex);
    const auto& e = memo.emplace(nu, std::move(expansion)).first->second;
    auto c = e.find(lambda);
    return c == e.end() ? 0 : c->second;
}

long long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& eta) {
    if (eta.weight() != mu.weight() + nu.weight()) return 0;
    static std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> memo;
    const auto key = std::make_pair(mu, nu);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) {
            auto c = it->second.find(eta);
            return c == it->second.end() ? 0 : c->second;
        }
    }
    const int n = std::max(1, mu.length() + nu.length());
    auto expansion = schur_expand(multiply(schur_poly(mu, n), schur_poly(nu, n)), n);
    std::lock_guard<std::mutex> lock(memo_mutex);
    const auto& e = memo.emplace(key, std::move(expansion)).first->second;
    auto c = e.find(eta);
    return c == e.end() ? 0 : c->second;
}

std::vector<std::pair<Partition, int>> border_strips(const Partition& alpha, int k, bool adding) {
    std::vector<std::pair<Partition, int>> out;
    const int target = alpha.weight() + (adding ? k : -k);
    if (target < 0) return out;
    for (const auto& other : partitions_of(target)) {
        const Partition& outer = adding ? other : alpha;
        const Partition& inner = adding ? alpha : other;
        if (!outer.contains(inner)) continue;
        std::set<std::pair<int, int>> cells;
        for (int i = 0; i < outer.length(); ++i)
            for (int j = inner[i]; j < outer[i]; ++j) cells.insert({i, j});
        bool block = false;
        for (const auto& [i, j] : cells)
            if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) block = true;
        if (block) continue;
        std::set<std::pair<int, int>> seen = {*cells.begin()};
        std::vector<std::pair<int, int>> stack = {*cells.begin()};
        while (!stack.empty()) {
            const auto [i, j] = stack.back();
            stack.pop_back();
            for (const auto& n : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
                if (cells.count(n) && seen.insert(n).second) stack.push_back(n);
        }
        if (seen.size() != cells.size()) continue;
        std::set<int> rows;
        for (const auto& c : cells) rows.insert(c.first);
        out.emplace_back(other, rows.size() % 2 == 1 ? 1 : -1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

QScalar h_direct(int m, const Partition& prefix, int hi) {
    // x_i = u^{e_i}, e_i = 2(i - nu_i) - 1.
    auto e = [&](int i) { return 2 * (i - prefix[i - 1]) - 1; };
    int e_min = e(1);
    for (int i = 1; i <= prefix.length() + 1; ++i) e_min = std::min(e_min, e(i));
    const int slack = m * std::max(0, -e_min);
    const int inner = hi + slack;
    std::vector<QScalar> z(static_cast<std::size_t>(m) + 1, QScalar(1));
    z[0] = QScalar::constant(1, Rational(1));
    for (int i = 1; i <= prefix.length() || e(i) + (m - 1) * e_min < hi; ++i) {
        std::vector<QScalar> next(z.size(), QScalar(1));
        for (std::size_t a = 0; a < z.size(); ++a)
            for (std::size_t b = 0; a + b < z.size(); ++b)
                next[a + b] += z[a] * QScalar::unit_term(1, static_cast<int>(b) * e(i), Rational(1));
        for (auto& c : next) c = c.truncated(inner);
        z = std::move(next);
    }
    return z[static_cast<std::size_t>(m)].truncated(hi);
}

FermionWindow::FermionWindow(int jlo, int jhi) : jlo_(jlo), jhi_(jhi) {
    if (jlo > 0 || jhi < 0) throw std::invalid_argument("fermion window must contain mode 0");
    if (sites() > kMaxSites)
        throw WindowOverflow("fermion window of " + std::to_string(sites()) + " sites exceeds " +
                             std::to_string(kMaxSites));
}

FermionWindow FermionWindow::for_weight(int max_weight, int max_shift) {
    return FermionWindow(-max_weight - max_shift, max_weight + max_shift - 1);
}

FermionWindow::State FermionWindow::state_of(const Partition& lambda) const {
    if (lambda.length() > jhi_ + 1) throw WindowOverflow("partition " + lambda.str() + " longer than window");
    State s;
    for (int i = 1; i <= jhi_ + 1; ++i) {
        const int j = -lambda[i - 1] + i - 1;
        if (j < jlo_) throw WindowOverflow("partition " + lambda.str() + " reaches below window");
        s.modes.push_back(j);
    }
    return s;
}

bool FermionWindow::hop(const State& s, int from, int to, State& out, int& sign) const {
    if (to > jhi_) return false;
    if (to < jlo_) throw WindowOverflow("mode " + std::to_string(to) + " below window");
    auto src = std::find(s.modes.begin(), s.modes.end(), from);
    if (src == s.modes.end()) return false;
    if (from != to && std::binary_search(s.modes.begin(), s.modes.end(), to)) return false;
    const auto p = src - s.modes.begin();
    out = s;
    out.modes.erase(out.modes.begin() + p);
    auto ins = std::lower_bound(out.modes.begin(), out.modes.end(), to);
    const auto p2 = ins - out.modes.begin();
    out.modes.insert(ins, to);
    sign = ((p + p2) % 2 == 0) ? 1 : -1;
    return true;
}

QScalar FermionWindow::v_element(int k, int m, const Partition& lambda, const Partition& mu, int window) const {
    const State ket = state_of(mu);
    const State bra = state_of(lambda);
    QScalar total(1);
    if (m < 0)
        for (int j = jhi_ + 1 + m; j <= jhi_; ++j)
            if (!std::binary_search(ket.modes.begin(), ket.modes.end(), j))
                throw WindowOverflow("filled modes above the window can hop into mode " + std::to_string(j));
    const Rational pre = -Rational(k * (m + 1), 2);
    if (m == 0) {
        if (!(bra.modes == ket.modes)) return total;
        // Normal ordering: occupation minus vacuum occupation, mode j = -n.
        for (int j = jlo_; j <= jhi_; ++j) {
            const int occ = std::binary_search(ket.modes.begin(), ket.modes.end(), j) ? 1 : 0;
            const int vac = j >= 0 ? 1 : 0;
            if (occ != vac) total += QScalar::q_power(1, pre + Rational(-k * j)) * Rational(occ - vac);
        }
        if (k != 0) {
            const QScalar denom = QScalar::constant(1, Rational(1)) - QScalar::q_power(1, Rational(k));
            total -= QScalar::q_power(1, Rational(k, 2)) * denom.inverse(window);
        }
        return total;
    }
    for (int from : ket.modes) {
        State out;
        int sign = 0;
        if (!hop(ket, from, from + m, out, sign)) continue;
        if (out.modes == bra.modes) total += QScalar::q_power(1, pre + Rational(-k * from), Rational(sign));
    }
    return total;
}

Rational FermionWindow::diagonal(const Partition& lambda, Rational (*weight)(int n)) const {
    const State s = state_of(lambda);
    Rational total(0);
    for (int j = jlo_; j <= jhi_; ++j) {
        const int occ = std::binary_search(s.modes.begin(), s.modes.end(), j) ? 1 : 0;
        const int vac = j >= 0 ? 1 : 0;
        if (occ != vac) total += weight(-j) * Rational(occ - vac);
    }
    return total;
}

Rational FermionWindow::k_eigenvalue(const Partition& lambda) const {
    return diagonal(lambda, [](int n) { return (Rational(n) - Rational(1, 2)) * (Rational(n) - Rational(1, 2)); });
}

Rational FermionWindow::l0_eigenvalue(const Partition& lambda) const {
    return diagonal(lambda, [](int n) { return Rational(n); });
}

Rational FermionWindow::w0_eigenvalue(const Partition& lambda) const {
    return diagonal(lambda, [](int n) { return Rational(n) * Rational(n); });
}

}  // namespace oracle

namespace {

QScalar constant(const Rational& c) { return QScalar::constant(1, c); }

}  // namespace

CheckReport oracle_characters(const OracleBounds& b) {
    CheckReport r;
    r.identity = "oracle_characters";
    r.params = {{"degree", b.character_degree}};
    for (int d = 0; d <= b.character_degree; ++d)
        for (const auto& lam : partitions_of(d))
            for (const auto& nu : partitions_of(d))
                r.compare_exact("chi" + lam.str() + nu.str(), std::to_string(character(lam, nu)),
                                std::to_string(oracle::character(lam, nu)));
    return r;
}

CheckReport oracle_ribbons(const OracleBounds& b) {
    CheckReport r;
    r.identity = "oracle_ribbons";
    r.params = {{"weight", b.ribbon_weight}};
    auto render = [](std::vector<std::pair<Partition, int>> v) {
        std::sort(v.begin(), v.end());
        std::string s;
        for (const auto& [p, sign] : v) s += p.str() + (sign > 0 ? "+ " : "- ");
        return s;
    };
    for (const auto& alpha : partitions_up_to(b.ribbon_weight))
        for (int k = 1; k <= 4; ++k)
            for (bool adding : {false, true}) {
                std::vector<std::pair<Partition, int>> engine;
                for (const auto& st : adding ? ribbons_addable(alpha, k) : ribbons_removable(alpha, k))
                    engine.emplace_back(st.beta, st.sign);
                r.compare_exact(std::string(adding ? "add " : "remove ") + std::to_string(k) + " at " + alpha.str(),
                                render(engine), render(oracle::border_strips(alpha, k, adding)));
            }
    return r;
}

CheckReport oracle_lr(const OracleBounds& b) {
    CheckReport r;
    r.identity = "oracle_lr";
    r.params = {{"weight", b.lr_weight}};
    for (const auto& mu : partitions_up_to(b.lr_weight))
        for (const auto& nu : partitions_up_to(b.lr_weight - mu.weight()))
            for (const auto& eta : partitions_of(mu.weight() + nu.weight()))
                r.compare_exact("c" + eta.str() + "_" + mu.str() + nu.str(),
                                std::to_string(lr_coefficient(mu, nu, eta)),
                                std::to_string(oracle::lr_coefficient(mu, nu, eta)));
    return r;
}

CheckReport oracle_h_tail(const OracleBounds& b) {
    CheckReport r;
    r.identity = "oracle_h_tail";
    r.params = {{"degree", b.h_degree}, {"window", b.window}};
    const std::vector<Partition> prefixes = {Partition{}, Partition{1}, Partition{2, 1}, Partition{3, 1},
                                             Partition{2, 2}};
    for (const auto& nu : prefixes)
        for (int m = 0; m <= b.h_degree; ++m) {
            const QScalar engine = h_spec(m, Specialization::shifted(nu), b.window);
            int hi = engine.valuation() + b.window;
            if (!engine.is_exact()) hi = std::min(hi, engine.valid_upto());
            r.compare("h" + std::to_string(m) + " at " + nu.str(), engine, oracle::h_direct(m, nu, hi), b.min_width,
                      b.window);
        }
    return r;
}

CheckReport oracle_fock_window(const OracleBounds& b) {
    constexpr int kShift = 3;
    CheckReport r;
    r.identity = "oracle_fock_window";
    r.params = {{"weight", b.fock_weight}, {"max_shift", kShift}};
    const auto win = oracle::FermionWindow::for_weight(b.fock_weight, kShift);
    FockConfig fc;
    fc.window = b.window;
    fc.compare_window = b.window;
    fc.min_width = b.min_width;
    const FockEngine engine(fc);
    const auto parts = partitions_up_to(b.fock_weight);
    for (const auto& lam : parts) {
        const std::string at = " at " + lam.str();
        r.compare("K" + at, engine.matrix_element(op::K(), lam, lam), constant(win.k_eigenvalue(lam)),
                  b.min_width, b.window);
        r.compare("L0" + at, engine.matrix_element(op::L0(), lam, lam), constant(win.l0_eigenvalue(lam)),
                  b.min_width, b.window);
        r.compare("W0" + at, engine.matrix_element(op::W0(), lam, lam), constant(win.w0_eigenvalue(lam)),
                  b.min_width, b.window);
    }
    for (int m = -kShift; m <= kShift; ++m)
        for (const auto& mu : parts)
            for (const auto& lam : parts) {
                if (lam.weight() != mu.weight() - m) continue;
                const std::string where = "<" + lam.str() + "|" + "%|" + mu.str() + ">";
                auto label = [&](const std::string& name) {
                    std::string w = where;
                    w.replace(w.find('%'), 1, name);
                    return w;
                };
                r.compare(label("J" + std::to_string(m)), engine.matrix_element(op::J(m), lam, mu),
                          win.v_element(0, m, lam, mu, b.window), b.min_width, b.window);
                for (int k : {-2, -1, 1, 2})
                    r.compare(label("V(" + std::to_string(k) + ")" + std::to_string(m)),
                              engine.matrix_element(op::V(k, m), lam, mu), win.v_element(k, m, lam, mu, b.window),
                              b.min_width, b.window);
            }
    return r;
}

QScalar lllz_unpruned(const PartitionTriple& mu, int window) {
    const Partition& m1 = mu.a;
    const Partition& m2 = mu.b;
    const Partition& m3 = mu.c;
    const auto small1 = partitions_up_to(m1.weight());
    const auto small3 = partitions_up_to(m3.weight());
    const auto plus = partitions_up_to(m1.weight() + m2.weight());
    auto x_sum = [](const Partition& eta1, const Partition& eta3) {
        Rational s(0);
        for (const auto& xi : partitions_of(eta1.weight())) {
            const long long c = oracle::character(eta1, xi) * oracle::character(eta3, double_parts(xi));
            if (c != 0) s += Rational(c, z_mu(xi));
        }
        return s;
    };
    QScalar total(1);
    for (const auto& eta1 : small1)
        for (const auto& eta3 : small3) {
            const Rational x = x_sum(eta1, eta3);
            if (x.is_zero()) continue;
            for (const auto& nu1 : small1) {
                const long long c1 = oracle::lr_coefficient(eta1.conjugate(), nu1, m1);
                if (c1 == 0) continue;
                for (const auto& nup : plus) {
                    const long long c2 = oracle::lr_coefficient(nu1.conjugate(), m2, nup);
                    if (c2 == 0) continue;
                    for (const auto& nu3 : small3) {
                        const long long c3 = oracle::lr_coefficient(eta3, nu3.conjugate(), m3);
                        if (c3 == 0) continue;
                        const Rational e = Rational(nup.kappa()) + Rational(nu3.kappa(), 4);
                        total += QScalar::q_power(1, e) * schur_spec(nup, Specialization::rho(), window) *
                                 schur_spec(nu3, Specialization::shifted(nup), window) * (x * Rational(c1 * c2 * c3));
                    }
                }
            }
        }
    const Rational pre = Rational(m1.kappa(), 2) - Rational(m2.kappa()) - Rational(m3.kappa(), 4);
    return QScalar::q_power(1, pre) * total;
}

CheckReport oracle_lllz_unpruned(const OracleBounds& b) {
    CheckReport r;
    r.identity = "oracle_lllz_unpruned";
    r.params = {{"weight", b.lllz_weight}};
    for (const auto& t : triples_up_to(b.lllz_weight))
        r.compare("(" + t.a.str() + "," + t.b.str() + "," + t.c.str() + ")", lllz_coefficient(t, b.window),
                  lllz_unpruned(t, b.window), b.min_width, b.window);
    return r;
}

std::vector<CheckReport> run_oracles(const OracleBounds& b) {
    return {oracle_characters(b), oracle_ribbons(b), oracle_lr(b), oracle_h_tail(b), oracle_fock_window(b), oracle_lllz_unpruned(b)};
}

CheckReport mutation_controls(int jobs) {
    CheckReport r;
    r.identity = "mutation_controls";
    using Suite = std::pair<std::string, std::function<CheckReport(FockContext&)>>;
    VertexConfig vc;
    vc.jobs = jobs;
    HodgeConfig hc;
    hc.jobs = jobs;
    KpConfig kc;
    kc.hodge = hc;
    OracleBounds ob;
    ob.character_degree = 5;
    const std::vector<Suite> suites = {
        {"oracle_characters", [&](FockContext&) { return oracle_characters(ob); }},
        {"theorem1", [&](FockContext&) { return verify_theorem1(3, vc); }},
        {"cyclic", [&](FockContext&) { return verify_cyclic(3, vc); }},
        {"exchange_formula", [&](FockContext& ctx) { return check_exchange_formula(ctx, Partition{2, 1}, 3); }},
        {"reduction_tau1", [&](FockContext&) { return verify_reduction_tau1({2, 2, 2}, hc); }},
        {"kp", [&](FockContext&) { return verify_kp(1, kc); }},
    };
    for (Mutation m : all_mutations()) {
        if (m == Mutation::none) continue;
        const ScopedMutation scope(m);
        FockContext ctx(FockConfig{}, jobs);
        std::string caught_by;
        for (const auto& [name, run] : suites) {
            CheckStatus s = CheckStatus::pass;
            try {
                s = run(ctx).status;
            } catch (const std::exception&) {
                s = CheckStatus::fail;
            }
            if (s == CheckStatus::fail) caught_by += (caught_by.empty() ? "" : ",") + name;
        }
        const std::string mname = mutation_name(m);
        r.notes.push_back(mname + ": " + (caught_by.empty() ? std::string("not caught") : "caught by " + caught_by));
        r.record(caught_by.empty() ? CheckStatus::fail : CheckStatus::pass, mname, {}, {},
                 caught_by.empty() ? "no suite failed under this mutant" : "");
    }
    return r;
}

}  // namespace topvert
