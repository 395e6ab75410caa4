#include "topvert/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "topvert/maya.hpp"
#include "topvert/mutation.hpp"

namespace topvert {

std::string Operator::key() const {
    std::ostringstream os;
    switch (kind) {
    case OpKind::J: os << "J(" << m << ")"; break;
    case OpKind::K: os << "K"; break;
    case OpKind::L0: os << "L0"; break;
    case OpKind::W0: os << "W0"; break;
    case OpKind::V: os << "V(" << k << "," << m << ")"; break;
    case OpKind::GammaPlus: os << "G+" << spec.prefix.str(); break;
    case OpKind::GammaMinus: os << "G-" << spec.prefix.str(); break;
    case OpKind::GammaPrimePlus: os << "G'+" << spec.prefix.str(); break;
    case OpKind::GammaPrimeMinus: os << "G'-" << spec.prefix.str(); break;
    case OpKind::QPowerK: os << "qK(" << gamma << ")"; break;
    case OpKind::QPowerJ0: os << "qJ0(" << gamma << ")"; break;
    case OpKind::QConst: os << "c(" << coeff << ",q^" << gamma << ")"; break;
    case OpKind::SchurConst: os << "s" << alpha.str(); break;
    case OpKind::Composite:
        os << "[";
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << factors[i].key();
        os << "]";
        break;
    }
    return os.str();
}

namespace op {

namespace {
Operator make(OpKind kind) {
    Operator o;
    o.kind = kind;
    return o;
}
Operator with_spec(OpKind kind, const Specialization& s) {
    Operator o = make(kind);
    o.spec = s;
    return o;
}
}  // namespace

Operator J(int m) {
    Operator o = make(OpKind::J);
    o.m = m;
    return o;
}
Operator K() { return make(OpKind::K); }
Operator L0() { return make(OpKind::L0); }
Operator W0() { return make(OpKind::W0); }
Operator V(int k, int m) {
    if (k == 0) return J(m);
    Operator o = make(OpKind::V);
    o.k = k;
    o.m = m;
    return o;
}
Operator gamma_minus(const Specialization& s) { return with_spec(OpKind::GammaMinus, s); }
Operator gamma_plus(const Specialization& s) { return with_spec(OpKind::GammaPlus, s); }
Operator gamma_prime_minus(const Specialization& s) { return with_spec(OpKind::GammaPrimeMinus, s); }
Operator gamma_prime_plus(const Specialization& s) { return with_spec(OpKind::GammaPrimePlus, s); }
Operator q_power_K(const Rational& gamma) {
    Operator o = make(OpKind::QPowerK);
    o.gamma = gamma;
    return o;
}
Operator q_power_J0(const Rational& gamma) {
    Operator o = make(OpKind::QPowerJ0);
    o.gamma = gamma;
    return o;
}
Operator q_const(const Rational& exponent, const Rational& coeff) {
    Operator o = make(OpKind::QConst);
    o.gamma = exponent;
    o.coeff = coeff;
    return o;
}
Operator schur_const(const Partition& alpha) {
    Operator o = make(OpKind::SchurConst);
    o.alpha = alpha;
    return o;
}
Operator product(std::vector<Operator> factors) {
    Operator o = make(OpKind::Composite);
    for (auto& f : factors) {
        if (f.kind == OpKind::Composite) {
            o.factors.insert(o.factors.end(), f.factors.begin(), f.factors.end());
        } else {
            o.factors.push_back(std::move(f));
        }
    }
    return o;
}

Operator transpose(const Operator& o) {
    switch (o.kind) {
    case OpKind::J: return J(-o.m);
    case OpKind::V: return o.m == 0 ? o : V(o.k, -o.m);
    case OpKind::GammaPlus: return gamma_minus(o.spec);
    case OpKind::GammaMinus: return gamma_plus(o.spec);
    case OpKind::GammaPrimePlus: return gamma_prime_minus(o.spec);
    case OpKind::GammaPrimeMinus: return gamma_prime_plus(o.spec);
    case OpKind::Composite: {
        Operator r = make(OpKind::Composite);
        for (auto it = o.factors.rbegin(); it != o.factors.rend(); ++it) r.factors.push_back(transpose(*it));
        return r;
    }
    default: return o;
    }
}

Operator L(const Partition& alpha) {
    return product({schur_const(alpha), gamma_minus(Specialization::shifted(alpha)),
                    gamma_plus(Specialization::shifted(alpha.conjugate()))});
}

Operator L_prime(const Partition& alpha) {
    return product({schur_const(alpha), gamma_prime_minus(Specialization::shifted(alpha, true)),
                    gamma_prime_plus(Specialization::shifted(alpha.conjugate(), true))});
}

Operator G(const Partition& alpha, const Rational& tau) {
    if (tau.is_zero() || tau == Rational(-1)) throw std::invalid_argument("G_alpha(tau) needs tau != 0, -1");
    const Rational kap(alpha.kappa());
    return product({q_const(-kap / (Rational(2) * tau)), q_power_K(-tau / Rational(2)), L(alpha),
                    q_power_K(tau / (Rational(2) * (Rational(1) + tau)))});
}

Operator G_prime(const Partition& alpha, const Rational& tau) {
    if (tau.is_zero() || tau == Rational(-1)) throw std::invalid_argument("G'_alpha(tau) needs tau != 0, -1");
    const Rational kap(alpha.kappa());
    return product({q_const(-kap / (Rational(2) * tau)), q_power_K(tau / Rational(2)), L_prime(alpha),
                    q_power_K(-tau / (Rational(2) * (Rational(1) + tau)))});
}

}  // namespace op

QScalar FockVector::component(const Partition& lambda, int lattice) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? QScalar(lattice) : it->second;
}

void FockVector::add(const Partition& lambda, const QScalar& c) {
    if (c.is_exact_zero()) return;
    auto it = terms.find(lambda);
    if (it == terms.end()) {
        terms.emplace(lambda, c);
    } else {
        it->second += c;
        if (it->second.is_exact_zero()) terms.erase(it);
    }
}

FockVector FockVector::basis(const Partition& mu, int cutoff, int lattice) {
    FockVector v;
    v.cutoff = cutoff;
    if (mu.weight() <= cutoff) v.terms.emplace(mu, QScalar::constant(lattice, Rational(1)));
    return v;
}

FockEngine::FockEngine(FockConfig cfg) : cfg_(cfg) {
    if (cfg_.min_width > cfg_.compare_window) throw std::invalid_argument("min_width exceeds the comparison window");
}

QScalar FockEngine::q_pow(const Rational& exponent, const Rational& coeff) const {
    return QScalar::q_power(cfg_.lattice, exponent, coeff);
}

QScalar FockEngine::skew(const Partition& lam, const Partition& mu, const Specialization& s) const {
    return skew_schur_spec_on(cfg_.lattice, lam, mu, s, cfg_.window);
}

QScalar FockEngine::schur_rho(const Partition& alpha) const { return skew(alpha, Partition{}, Specialization::rho()); }

QScalar FockEngine::v0_eigenvalue(int k, const Partition& lambda) const {
    if (k == 0) return zero();
    const int L = cfg_.lattice;
    // q^{-k/2} sum_p q^{k(p+1)} (occ_lambda(p) - occ_vacuum(p))
    QScalar finite(L);
    const MayaDiagram d(lambda);
    const MayaDiagram vac{Partition{}};
    const int lo = std::min(d.floor(), -1) - 1;
    const int hi = lambda.empty() ? 0 : lambda[0];
    for (int p = lo; p <= hi; ++p) {
        const int diff = static_cast<int>(d.occupied(p)) - static_cast<int>(vac.occupied(p));
        if (diff != 0) finite += QScalar::unit_term(L, L * (-k + 2 * k * (p + 1)), Rational(diff));
    }
    const int a = std::abs(k);
    const int c0 = L * a;  // q^{|k|/2}
    const int floor_units = std::min(finite.valuation(), c0);
    const int window = std::max(floor_units + cfg_.window - c0, cfg_.window);
    QScalar geo = QScalar::geometric_sum(L, Rational(a, 2), Rational(a), window);
    // k > 0: -q^{k/2}/(1-q^k);  k < 0: -q^{k/2}/(1-q^k) = q^{|k|/2}/(1-q^{|k|})
    return k > 0 ? finite - geo : finite + geo;
}

QScalar phi_value(int k, const Partition& mu, int lattice, int window) {
    if (k == 0) throw std::invalid_argument("phi_k needs k != 0");
    const int a = std::abs(k);
    const Partition part = k > 0 ? mu.conjugate() : mu;
    QScalar finite(lattice);
    const int l = part.length();
    for (int i = 1; i <= l; ++i)
        finite += QScalar::unit_term(lattice, lattice * a * (2 * (i - part[i - 1]) - 1), Rational(1));
    // tail i > l: sum q^{a(i - 1/2)}
    const Rational e0 = Rational(a) * Rational(2 * l + 1, 2);
    const int e0u = QScalar::lattice_units(lattice, e0);
    const int floor_units = std::min(finite.valuation(), e0u);
    QScalar tail = QScalar::geometric_sum(lattice, e0, Rational(a), std::max(floor_units + window - e0u, window));
    QScalar total = finite + tail;
    return k > 0 ? -total : total;
}

FockVector FockEngine::gamma_basis(const Operator& o, const Partition& mu, int cutoff) const {
    const bool primed = o.kind == OpKind::GammaPrimePlus || o.kind == OpKind::GammaPrimeMinus;
    const bool transpose = primed && !mutation_is(Mutation::no_transpose);
    FockVector out;
    out.cutoff = cutoff;
    if (o.kind == OpKind::GammaMinus || o.kind == OpKind::GammaPrimeMinus) {
        for (const auto& lam : superdiagrams(mu, cutoff)) {
            QScalar c = transpose ? skew(lam.conjugate(), mu.conjugate(), o.spec) : skew(lam, mu, o.spec);
            out.add(lam, c);
        }
        out.exact_upto = cutoff;
    } else {
        for (const auto& lam : subdiagrams(mu)) {
            if (lam.weight() > cutoff) continue;
            QScalar c = transpose ? skew(mu.conjugate(), lam.conjugate(), o.spec) : skew(mu, lam, o.spec);
            out.add(lam, c);
        }
        if (mu.weight() > cutoff) out.exact_upto = cutoff;
    }
    return out;
}

namespace {
bool is_mode(const Operator& o) { return o.kind == OpKind::J || o.kind == OpKind::V; }
bool is_gamma(const Operator& o) {
    return o.kind == OpKind::GammaPlus || o.kind == OpKind::GammaMinus || o.kind == OpKind::GammaPrimePlus ||
           o.kind == OpKind::GammaPrimeMinus;
}
// Composites built only from vertex operators and diagonal factors are
// reused across many checks; anything containing modes is cheap to rebuild.
bool worth_caching(const Operator& o) {
    if (is_gamma(o)) return true;
    if (o.kind != OpKind::Composite) return false;
    bool has_gamma = false;
    for (const auto& f : o.factors) {
        if (is_mode(f)) return false;
        has_gamma = has_gamma || is_gamma(f);
    }
    return has_gamma;
}
}  // namespace

void FockEngine::clear_cache() const {
    std::lock_guard lock(mutex_);
    cache_.clear();
}

FockVector FockEngine::apply_basis(const Operator& o, const Partition& mu, int cutoff) const {
    const bool cacheable = worth_caching(o);
    if (!cacheable) return apply(o, FockVector::basis(mu, cutoff, cfg_.lattice));
    auto key = std::make_tuple(mutation_name(active_mutation()) + ":" + o.key(), mu, cutoff);
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    FockVector r;
    if (o.kind == OpKind::Composite) {
        r = FockVector::basis(mu, cutoff, cfg_.lattice);
        for (auto it = o.factors.rbegin(); it != o.factors.rend(); ++it) r = apply_elementary(*it, r);
    } else {
        r = gamma_basis(o, mu, cutoff);
    }
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), r);
    return r;
}

FockVector FockEngine::apply(const Operator& o, const FockVector& v, Side side) const {
    if (side == Side::bra) return apply(op::transpose(o), v, Side::ket);
    if (o.kind != OpKind::Composite) return apply_elementary(o, v);
    if (!worth_caching(o)) {
        // Split into maximal runs between modes so the runs hit the cache.
        FockVector r = v;
        std::size_t end = o.factors.size();
        while (end > 0) {
            if (is_mode(o.factors[end - 1])) {
                r = apply_elementary(o.factors[end - 1], r);
                --end;
                continue;
            }
            std::size_t begin = end;
            while (begin > 0 && !is_mode(o.factors[begin - 1])) --begin;
            Operator run;
            run.kind = OpKind::Composite;
            run.factors.assign(o.factors.begin() + static_cast<std::ptrdiff_t>(begin),
                               o.factors.begin() + static_cast<std::ptrdiff_t>(end));
            r = run.factors.size() == 1 ? apply_elementary(run.factors[0], r) : apply(run, r);
            end = begin;
        }
        return r;
    }
    if (!v.dropped()) {
        FockVector out;
        out.cutoff = v.cutoff;
        for (const auto& [mu, c] : v.terms) {
            const FockVector part = apply_basis(o, mu, v.cutoff);
            for (const auto& [lam, d] : part.terms) out.add(lam, c * d);
            out.exact_upto = std::min(out.exact_upto, part.exact_upto);
        }
        return out;
    }
    FockVector r = v;
    for (auto it = o.factors.rbegin(); it != o.factors.rend(); ++it) r = apply_elementary(*it, r);
    return r;
}

FockVector FockEngine::apply_elementary(const Operator& o, const FockVector& v) const {
    const int L = cfg_.lattice;
    FockVector out;
    out.cutoff = v.cutoff;
    out.exact_upto = v.exact_upto;
    auto scale_all = [&](auto&& factor) {
        for (const auto& [lam, c] : v.terms) out.add(lam, c * factor(lam));
        return out;
    };
    switch (o.kind) {
    case OpKind::K: return scale_all([&](const Partition& l) { return QScalar::constant(L, Rational(l.kappa())); });
    case OpKind::L0: return scale_all([&](const Partition& l) { return QScalar::constant(L, Rational(l.weight())); });
    case OpKind::W0:
        return scale_all([&](const Partition& l) { return QScalar::constant(L, Rational(l.kappa() + l.weight())); });
    case OpKind::QPowerK:
        return scale_all([&](const Partition& l) { return q_pow(o.gamma * Rational(l.kappa())); });
    case OpKind::QPowerJ0: return v;  // J_0 vanishes on the charge-0 sector
    case OpKind::QConst: {
        const QScalar f = q_pow(o.gamma, o.coeff);
        return scale_all([&](const Partition&) { return f; });
    }
    case OpKind::SchurConst: {
        const QScalar f = schur_rho(o.alpha);
        return scale_all([&](const Partition&) { return f; });
    }
    case OpKind::J:
    case OpKind::V: {
        const int k = o.kind == OpKind::J ? 0 : o.k;
        const int m = o.m;
        if (m == 0) {
            if (k == 0) {
                out.terms.clear();
                return out;
            }
            return scale_all([&](const Partition& l) { return v0_eigenvalue(k, l); });
        }
        bool dropped = false;
        for (const auto& [mu, c] : v.terms) {
            for (const auto& mv : maya_moves(mu, -m)) {
                if (mv.result.weight() > v.cutoff) {
                    dropped = true;
                    continue;
                }
                // q^{-k(m+1)/2 + k(p+1)} with p the source site
                const int units = L * (-k * (m + 1) + 2 * k * (mv.from + 1));
                out.add(mv.result, c * QScalar::unit_term(L, units, Rational(mv.sign)));
            }
        }
        if (v.exact_upto != FockVector::kComplete) out.exact_upto = v.exact_upto - m;
        if (dropped) out.exact_upto = std::min(out.exact_upto, v.cutoff);
        return out;
    }
    case OpKind::GammaPlus:
    case OpKind::GammaMinus:
    case OpKind::GammaPrimePlus:
    case OpKind::GammaPrimeMinus: {
        const bool raising = o.kind == OpKind::GammaMinus || o.kind == OpKind::GammaPrimeMinus;
        for (const auto& [mu, c] : v.terms) {
            const FockVector part = apply_basis(o, mu, v.cutoff);
            for (const auto& [lam, d] : part.terms) out.add(lam, c * d);
        }
        if (raising) {
            out.exact_upto = std::min(v.exact_upto, v.cutoff);
        } else if (v.dropped()) {
            out.exact_upto = -1;
        }
        return out;
    }
    case OpKind::Composite: return apply(o, v);
    }
    return out;
}

QScalar FockEngine::matrix_element_at(const Operator& o, const Partition& lambda, const Partition& mu, int cutoff,
                                      bool* exact) const {
    const FockVector v = apply_basis(o, mu, cutoff);
    if (exact) *exact = v.component_exact(lambda);
    return v.component(lambda, cfg_.lattice);
}

QScalar FockEngine::matrix_element(const Operator& o, const Partition& lambda, const Partition& mu) const {
    const auto col = column(o, mu, lambda.weight());
    auto it = col.find(lambda);
    return it == col.end() ? zero() : it->second;
}

std::map<Partition, QScalar> FockEngine::column(const Operator& o, const Partition& mu, int max_weight) const {
    auto restrict = [&](const FockVector& v) {
        std::map<Partition, QScalar> r;
        for (const auto& [lam, c] : v.terms)
            if (lam.weight() <= max_weight) r.emplace(lam, c);
        return r;
    };
    // Intermediate states can exceed the target weight by what the modes
    // lower and the source weight by what they raise.
    int raise = 0, lower = 0;
    auto count = [&](const Operator& f) {
        if (!is_mode(f)) return;
        (f.m < 0 ? raise : lower) += std::abs(f.m);
    };
    count(o);
    for (const auto& f : o.factors) count(f);
    int cutoff = std::max(max_weight + lower, mu.weight() + raise) + cfg_.cutoff_margin;
    FockVector prev = apply_basis(o, mu, cutoff);
    if (prev.exact_upto >= max_weight) return restrict(prev);
    int agreements = 0;
    const int limit = std::max(cfg_.max_cutoff, cutoff + 4);
    while (++cutoff <= limit) {
        FockVector cur = apply_basis(o, mu, cutoff);
        if (cur.exact_upto >= max_weight) return restrict(cur);
        bool stable = true;
        for (const auto& lam : partitions_up_to(max_weight)) {
            const auto c = compare_on_window(prev.component(lam, cfg_.lattice), cur.component(lam, cfg_.lattice),
                                             cfg_.min_width, cfg_.compare_window);
            if (c.status != WindowComparison::Status::equal) {
                stable = false;
                break;
            }
        }
        // Two agreements in a row guard against a contribution that first
        // appears one step later.
        agreements = stable ? agreements + 1 : 0;
        if (agreements >= 2) return restrict(cur);
        prev = std::move(cur);
    }
    throw InconclusiveComparison("intermediate sums for " + o.key() + "|" + mu.str() +
                                 "> did not stabilize by cutoff " + std::to_string(limit));
}

}  // namespace topvert
