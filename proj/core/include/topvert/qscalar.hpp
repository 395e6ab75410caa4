#pragma once

#include <climits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "topvert/rational.hpp"

namespace topvert {

// Raised for exponents that miss the lattice, lattice mismatches and
// similar configuration faults.
class LatticeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonUnitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InconclusiveComparison : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QTerm {
    int exp;  // in lattice units: u^exp with u = q^{1/(2L)}
    Rational coeff;
};

// Truncated Laurent series in u = q^{1/(2L)} with rational coefficients.
// Every coefficient of u^e with e < valid_upto() is exact; nothing is known
// at or above it. valid_upto() == kExact marks an exact Laurent polynomial.
// Terms are sorted by exponent, nonzero, and all below valid_upto().
class QScalar {
public:
    static constexpr int kExact = INT_MAX;

    explicit QScalar(int lattice = 1) : lattice_(check_lattice(lattice)) {}

    static QScalar constant(int lattice, const Rational& c);
    static QScalar unit_term(int lattice, int exp, const Rational& c);
    static QScalar q_power(int lattice, const Rational& q_exp, const Rational& c = Rational(1));
    // Sum over n >= 0 of q^{e0 + n step}, valid below units(e0) + window.
    static QScalar geometric_sum(int lattice, const Rational& e0, const Rational& step, int window);
    // Zero plus O(u^hi).
    static QScalar big_o(int lattice, int hi);
    static int lattice_units(int lattice, const Rational& q_exp);
    // Smallest lattice on which every q-exponent in `exps` is representable.
    static int lattice_for(const std::vector<Rational>& exps);

    int lattice() const { return lattice_; }
    int valid_upto() const { return hi_; }
    bool is_exact() const { return hi_ == kExact; }
    const std::vector<QTerm>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }
    bool is_exact_zero() const { return is_exact() && terms_.empty(); }
    // First nonzero exponent, or valid_upto() when none is known.
    int valuation() const { return terms_.empty() ? hi_ : terms_.front().exp; }
    // valid_upto() - valuation(), or kExact.
    int relative_precision() const;
    Rational coeff(int exp) const;
    // Highest stored exponent; valuation() when empty.
    int top_exponent() const { return terms_.empty() ? valuation() : terms_.back().exp; }

    QScalar truncated(int hi) const;
    QScalar with_relative_window(int window) const;
    // Re-expresses the series on lattice L2, a multiple of lattice().
    QScalar relattice(int lattice2) const;
    QScalar shifted(int units) const;

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator*=(const Rational& c);
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator*(QScalar a, const Rational& c) { return a *= c; }
    friend QScalar operator*(const Rational& c, QScalar a) { return a *= c; }

    // Inverse valid to relative precision min(relative_precision(), window).
    QScalar inverse(int window) const;
    QScalar pow(unsigned n) const;

    // Structural equality, including validity bound.
    friend bool operator==(const QScalar& a, const QScalar& b);

    std::string str() const;

private:
    static int check_lattice(int lattice);
    void require_same_lattice(const QScalar& o) const;
    void normalize();

    int lattice_ = 1;
    int hi_ = kExact;
    std::vector<QTerm> terms_;
};

struct WindowComparison {
    enum class Status { equal, different, inconclusive };
    Status status = Status::inconclusive;
    int from = 0;      // compared exponents [from, to)
    int to = 0;
    bool unchecked_beyond = false;  // terms at or above `to` were not compared
    std::optional<int> first_difference;
    int width() const { return to - from; }
};

// Compares on [m, min(hi_a, hi_b, m + window)) with m the smaller valuation.
// Width below min_width yields inconclusive.
WindowComparison compare_on_window(const QScalar& a, const QScalar& b, int min_width, int window);
// Throws InconclusiveComparison when the comparable window is too narrow.
bool agree_on_common_window(const QScalar& a, const QScalar& b, int min_width, int window = 40);

}  // namespace topvert
