#include "topvert/qscalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace topvert {

namespace {

int sat_add(int a, int b) {
    if (a == QScalar::kExact || b == QScalar::kExact) return QScalar::kExact;
    const long long s = static_cast<long long>(a) + b;
    if (s >= QScalar::kExact) return QScalar::kExact - 1;
    if (s <= INT_MIN) return INT_MIN + 1;
    return static_cast<int>(s);
}

std::string exponent_str(int exp, int lattice) {
    Rational e(exp, 2LL * lattice);
    return e.is_integer() ? e.numerator_str() : e.str();
}

}  // namespace

int QScalar::check_lattice(int lattice) {
    if (lattice < 1) throw LatticeError("lattice denominator must be positive");
    return lattice;
}

void QScalar::require_same_lattice(const QScalar& o) const {
    if (lattice_ != o.lattice_)
        throw LatticeError("lattice mismatch: " + std::to_string(lattice_) + " vs " + std::to_string(o.lattice_));
}

void QScalar::normalize() {
    auto out = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->coeff.is_zero() || it->exp >= hi_) continue;
        if (out != it) *out = std::move(*it);
        ++out;
    }
    terms_.erase(out, terms_.end());
}

QScalar QScalar::constant(int lattice, const Rational& c) { return unit_term(lattice, 0, c); }

QScalar QScalar::unit_term(int lattice, int exp, const Rational& c) {
    QScalar r(lattice);
    if (!c.is_zero()) r.terms_.push_back({exp, c});
    return r;
}

int QScalar::lattice_units(int lattice, const Rational& q_exp) {
    const Rational u = q_exp * Rational(2LL * lattice);
    if (!u.is_integer())
        throw LatticeError("q-exponent " + q_exp.str() + " is off the lattice 1/(2*" + std::to_string(lattice) +
                           "); use a lattice denominator that is a multiple of " +
                           std::to_string(lattice_for({q_exp})));
    return static_cast<int>(u.to_int());
}

int QScalar::lattice_for(const std::vector<Rational>& exps) {
    long long l = 1;
    for (const auto& e : exps) {
        const long long b = std::stoll(e.denominator_str());
        const long long need = b % 2 == 0 ? b / 2 : b;
        l = std::lcm(l, need);
    }
    return static_cast<int>(l);
}

QScalar QScalar::q_power(int lattice, const Rational& q_exp, const Rational& c) {
    return unit_term(lattice, lattice_units(lattice, q_exp), c);
}

QScalar QScalar::geometric_sum(int lattice, const Rational& e0, const Rational& step, int window) {
    const int a = lattice_units(lattice, e0);
    const int s = lattice_units(lattice, step);
    if (s <= 0) throw std::invalid_argument("geometric_sum needs a positive step");
    QScalar r(lattice);
    r.hi_ = sat_add(a, window);
    for (int e = a; e < r.hi_; e += s) r.terms_.push_back({e, Rational(1)});
    return r;
}

QScalar QScalar::big_o(int lattice, int hi) {
    QScalar r(lattice);
    r.hi_ = hi;
    return r;
}

int QScalar::relative_precision() const {
    if (is_exact()) return kExact;
    return hi_ - valuation();
}

Rational QScalar::coeff(int exp) const {
    if (exp >= hi_) throw std::out_of_range("coefficient beyond validity bound");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const QTerm& t, int e) { return t.exp < e; });
    return it != terms_.end() && it->exp == exp ? it->coeff : Rational(0);
}

QScalar QScalar::truncated(int hi) const {
    if (hi >= hi_) return *this;
    QScalar r(lattice_);
    r.hi_ = hi;
    for (const auto& t : terms_)
        if (t.exp < hi) r.terms_.push_back(t);
    return r;
}

QScalar QScalar::with_relative_window(int window) const { return truncated(sat_add(valuation(), window)); }

QScalar QScalar::relattice(int lattice2) const {
    if (lattice2 == lattice_) return *this;
    if (lattice2 % lattice_ != 0)
        throw LatticeError("cannot move lattice " + std::to_string(lattice_) + " to " + std::to_string(lattice2));
    const int f = lattice2 / lattice_;
    QScalar r(lattice2);
    r.hi_ = is_exact() ? kExact : hi_ * f;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exp * f, t.coeff});
    return r;
}

QScalar QScalar::shifted(int units) const {
    QScalar r(*this);
    r.hi_ = sat_add(hi_, units);
    for (auto& t : r.terms_) t.exp += units;
    return r;
}

QScalar QScalar::operator-() const {
    QScalar r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    require_same_lattice(o);
    const int hi = std::min(hi_, o.hi_);
    std::vector<QTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
            if (a->exp < hi) merged.push_back(std::move(*a));
            ++a;
        } else if (a == terms_.end() || b->exp < a->exp) {
            if (b->exp < hi) merged.push_back(*b);
            ++b;
        } else {
            if (a->exp < hi) {
                Rational c = a->coeff + b->coeff;
                if (!c.is_zero()) merged.push_back({a->exp, std::move(c)});
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    hi_ = hi;
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    a.require_same_lattice(b);
    QScalar r(a.lattice_);
    const int va = a.valuation();
    const int vb = b.valuation();
    r.hi_ = std::min(sat_add(va, b.hi_), sat_add(vb, a.hi_));
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 && a.is_exact()) {
        for (const auto& t : b.terms_)
            if (t.exp + va < r.hi_) r.terms_.push_back({t.exp + va, t.coeff * a.terms_[0].coeff});
        return r;
    }
    if (b.terms_.size() == 1 && b.is_exact()) {
        for (const auto& t : a.terms_)
            if (t.exp + vb < r.hi_) r.terms_.push_back({t.exp + vb, t.coeff * b.terms_[0].coeff});
        return r;
    }
    const int lo = va + vb;
    const long long top = static_cast<long long>(a.terms_.back().exp) + b.terms_.back().exp + 1;
    const long long end = std::min<long long>(top, r.hi_);
    if (end <= lo) return r;
    std::vector<Rational> acc(static_cast<std::size_t>(end - lo));
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            const long long e = static_cast<long long>(x.exp) + y.exp;
            if (e >= end) break;
            acc[static_cast<std::size_t>(e - lo)] += x.coeff * y.coeff;
        }
    }
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!acc[i].is_zero()) r.terms_.push_back({lo + static_cast<int>(i), std::move(acc[i])});
    return r;
}

QScalar& QScalar::operator*=(const QScalar& o) { return *this = *this * o; }

QScalar QScalar::inverse(int window) const {
    if (terms_.empty()) throw NonUnitError("inverse of a series with no known leading term");
    const int v = valuation();
    const int p = std::min(relative_precision(), window);
    if (terms_.size() == 1 && is_exact()) return unit_term(lattice_, -v, terms_[0].coeff.inverse());
    std::vector<Rational> a(static_cast<std::size_t>(p));
    for (const auto& t : terms_)
        if (t.exp - v < p) a[static_cast<std::size_t>(t.exp - v)] = t.coeff;
    const Rational inv0 = a[0].inverse();
    std::vector<Rational> b(static_cast<std::size_t>(p));
    b[0] = inv0;
    for (int n = 1; n < p; ++n) {
        Rational s;
        for (int j = 1; j <= n; ++j)
            if (!a[static_cast<std::size_t>(j)].is_zero())
                s += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)];
        b[static_cast<std::size_t>(n)] = -(s * inv0);
    }
    QScalar r(lattice_);
    r.hi_ = -v + p;
    for (int n = 0; n < p; ++n)
        if (!b[static_cast<std::size_t>(n)].is_zero()) r.terms_.push_back({n - v, b[static_cast<std::size_t>(n)]});
    return r;
}

QScalar QScalar::pow(unsigned n) const {
    QScalar r = constant(lattice_, Rational(1));
    QScalar base = *this;
    while (n) {
        if (n & 1U) r = r * base;
        n >>= 1U;
        if (n) base = base * base;
    }
    return r;
}

bool operator==(const QScalar& a, const QScalar& b) {
    if (a.lattice_ != b.lattice_ || a.hi_ != b.hi_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

std::string QScalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff.str();
        if (t.exp != 0) os << "*q^(" << exponent_str(t.exp, lattice_) << ")";
    }
    if (!is_exact()) {
        if (!first) os << " + ";
        first = false;
        os << "O(q^(" << exponent_str(hi_, lattice_) << "))";
    }
    if (first) os << "0";
    return os.str();
}

WindowComparison compare_on_window(const QScalar& a, const QScalar& b, int min_width, int window) {
    if (a.lattice() != b.lattice())
        throw LatticeError("comparison across lattices " + std::to_string(a.lattice()) + " and " +
                           std::to_string(b.lattice()));
    WindowComparison c;
    const int m = std::min(a.valuation(), b.valuation());
    const bool both_exact = a.is_exact() && b.is_exact();
    if (m == QScalar::kExact) {  // both exact zero
        c.status = WindowComparison::Status::equal;
        c.from = 0;
        c.to = window;
        return c;
    }
    if (!a.has_terms() && !b.has_terms()) {
        // Both vanish below their bounds; measure the window from exponent 0.
        c.from = std::min(0, m);
        c.to = std::min(a.valid_upto(), b.valid_upto());
        c.status = c.width() >= min_width ? WindowComparison::Status::equal : WindowComparison::Status::inconclusive;
        return c;
    }
    c.from = m;
    c.to = std::min({a.valid_upto(), b.valid_upto(), sat_add(m, window)});
    if (!both_exact && c.width() < min_width) {
        c.status = WindowComparison::Status::inconclusive;
        return c;
    }
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    std::optional<int> diff;
    std::optional<int> diff_beyond;
    while (ia != a.terms().end() || ib != b.terms().end()) {
        int e;
        bool same;
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->exp < ib->exp)) {
            e = ia->exp;
            same = false;
            ++ia;
        } else if (ia == a.terms().end() || ib->exp < ia->exp) {
            e = ib->exp;
            same = false;
            ++ib;
        } else {
            e = ia->exp;
            same = ia->coeff == ib->coeff;
            ++ia;
            ++ib;
        }
        if (same) continue;
        if (e < c.to) {
            if (!diff) diff = e;
        } else if (e < std::min(a.valid_upto(), b.valid_upto()) && !diff_beyond) {
            diff_beyond = e;
        }
    }
    c.first_difference = diff;
    c.unchecked_beyond = diff_beyond.has_value();
    c.status = diff ? WindowComparison::Status::different : WindowComparison::Status::equal;
    return c;
}

bool agree_on_common_window(const QScalar& a, const QScalar& b, int min_width, int window) {
    const auto c = compare_on_window(a, b, min_width, window);
    if (c.status == WindowComparison::Status::inconclusive)
        throw InconclusiveComparison("common validity window of width " + std::to_string(c.width()) +
                                     " is narrower than " + std::to_string(min_width));
    return c.status == WindowComparison::Status::equal;
}

}  // namespace topvert
