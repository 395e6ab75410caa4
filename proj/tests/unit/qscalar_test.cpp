#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace topvert;
using topvert::testing::one;
using topvert::testing::q;
using topvert::testing::same;

namespace {

// Random series on lattice 1 with exponents in [lo, lo + span) and O(u^{lo + span}).
QScalar random_series(std::mt19937& rng, int lo, int span, bool unit) {
    std::uniform_int_distribution<int> c(-5, 5);
    QScalar s = QScalar::big_o(1, lo + span);
    for (int e = lo; e < lo + span; ++e) {
        int v = c(rng);
        if (e == lo && unit && v == 0) v = 1;
        if (v != 0) s += QScalar::unit_term(1, e, Rational(v, 1 + (e & 1)));
    }
    return s;
}

}  // namespace

TEST_SUITE("qscalar") {
    TEST_CASE("monomials and sums") {
        CHECK(q(Rational(1, 2)) * q(Rational(1, 2)) == q(Rational(1)));
        const QScalar s = q(Rational(-1)) + q(Rational(1));
        CHECK(s.valuation() == -2);
        CHECK(s.terms().size() == 2);
        CHECK(s.is_exact());
    }

    TEST_CASE("geometric inverse") {
        const QScalar g = QScalar::geometric_sum(1, Rational(0), Rational(1), 40);
        const QScalar p = (one() - q(Rational(1))) * g;
        CHECK(p.coeff(0) == Rational(1));
        for (int e = 1; e < p.valid_upto(); ++e) CHECK(p.coeff(e).is_zero());
        CHECK(same((one() - q(Rational(1))).inverse(40), g));
        CHECK(q(Rational(1, 2)).inverse(40) == q(Rational(-1, 2)));
    }

    TEST_CASE("(q;q)_2 inverse multiplies back to one") {
        const QScalar poch = (one() - q(Rational(1))) * (one() - q(Rational(2)));
        const QScalar prod = poch * poch.inverse(40);
        CHECK(same(prod, one()));
        CHECK(prod.valid_upto() >= 40);
    }

    TEST_CASE("geometric sums") {
        const QScalar a = QScalar::geometric_sum(1, Rational(1, 2), Rational(1), 40);
        CHECK(same(a, q(Rational(1, 2)) * (one() - q(Rational(1))).inverse(40)));
        const QScalar b = QScalar::geometric_sum(1, Rational(1), Rational(2), 40);
        CHECK(same(b, q(Rational(1)) * (one() - q(Rational(2))).inverse(40)));
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(QScalar::q_power(1, Rational(1, 3)), LatticeError);
        CHECK_THROWS_AS(QScalar(1) + QScalar(2), LatticeError);
        CHECK_THROWS_AS(QScalar::big_o(1, 5).inverse(10), NonUnitError);
        CHECK_NOTHROW(QScalar::q_power(3, Rational(1, 3)));
    }

    TEST_CASE("window comparison") {
        const QScalar a = QScalar::geometric_sum(1, Rational(1, 2), Rational(1), 40);
        CHECK(agree_on_common_window(a, a, 10));
        const int W = 40;
        const auto c = compare_on_window(one(), one() + q(Rational(W + 5)), 20, W);
        CHECK(c.status == WindowComparison::Status::equal);
        CHECK(c.unchecked_beyond);
        CHECK_FALSE(agree_on_common_window(one(), one() + q(Rational(1)), 1));
        CHECK_THROWS_AS(agree_on_common_window(QScalar::big_o(1, 3), one(), 20), InconclusiveComparison);
    }

    TEST_CASE("ring axioms on random series") {
        std::mt19937 rng(12345);
        for (int i = 0; i < 100; ++i) {
            const QScalar a = random_series(rng, -3, 25, false);
            const QScalar b = random_series(rng, 0, 25, false);
            const QScalar c = random_series(rng, 2, 25, false);
            CHECK(same((a * b) * c, a * (b * c), 10));
            CHECK(same(a * (b + c), a * b + a * c, 10));
            CHECK(same(a + b, b + a, 10));
            CHECK(same(a * b, b * a, 10));
        }
    }

    TEST_CASE("inverse is two-sided on random units") {
        std::mt19937 rng(777);
        for (int i = 0; i < 200; ++i) {
            const QScalar a = random_series(rng, -4 + i % 9, 30, true);
            const QScalar inv = a.inverse(30);
            CHECK(same(a * inv, one(), 20));
            CHECK(same(inv * a, one(), 20));
        }
    }

    TEST_CASE("truncation monotonicity") {
        const QScalar small = QScalar::geometric_sum(1, Rational(1, 2), Rational(3, 2), 20);
        const QScalar large = QScalar::geometric_sum(1, Rational(1, 2), Rational(3, 2), 60);
        CHECK(large.truncated(small.valid_upto()) == small);
        const QScalar r = small.relattice(3);
        CHECK(r.lattice() == 3);
        CHECK(r.valid_upto() == 3 * small.valid_upto());
    }
}
