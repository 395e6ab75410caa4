#include <doctest.h>

#include "helpers.hpp"
#include "topvert/oracles.hpp"
#include "topvert/partition.hpp"
#include "topvert/series_poly.hpp"
#include "topvert/symmetric.hpp"

using namespace topvert;
using topvert::testing::one;
using topvert::testing::q;
using topvert::testing::same;

namespace {

const int kWindow = 40;

QScalar geometric(const Rational& e0) { return QScalar::geometric_sum(1, e0, Rational(1), kWindow); }

}  // namespace

TEST_SUITE("symmetric") {
    TEST_CASE("h at principal specializations") {
        CHECK(h_spec(0, Specialization::rho(), kWindow) == one());
        CHECK(same(h_spec(1, Specialization::rho(), kWindow), geometric(Rational(1, 2))));
        CHECK(same(h_spec(1, Specialization::shifted(Partition{1}), kWindow),
                   q(Rational(-1, 2)) + geometric(Rational(3, 2))));
    }

    TEST_CASE("h tail agrees with the direct product") {
        for (const auto& nu : {Partition{}, Partition{2}, Partition{2, 1}})
            for (int m = 0; m <= 10; ++m) {
                const QScalar e = h_spec(m, Specialization::shifted(nu), kWindow);
                const int hi = e.is_exact() ? e.valuation() + kWindow : e.valid_upto();
                CHECK(same(e, oracle::h_direct(m, nu, hi)));
            }
    }

    TEST_CASE("Schur values") {
        CHECK(schur_spec(Partition{}, Specialization::shifted(Partition{3}), kWindow) == one());
        CHECK(same(schur_spec(Partition{1}, Specialization::rho(), kWindow), geometric(Rational(1, 2))));
        for (const auto& mu : partitions_up_to(6)) {
            const QScalar lhs = schur_spec(mu.conjugate(), Specialization::rho(), kWindow);
            const QScalar rhs = q(Rational(mu.kappa(), 2)) * schur_spec(mu, Specialization::rho(), kWindow);
            CHECK(same(lhs, rhs));
        }
    }

    TEST_CASE("skew Schur reduces to LR sums") {
        for (const auto& spec : {Specialization::rho(), Specialization::shifted(Partition{2, 1})})
            for (const auto& mu : partitions_up_to(5))
                for (const auto& nu : partitions_up_to(mu.weight())) {
                    QScalar sum(1);
                    for (const auto& eta : partitions_of(mu.weight() - nu.weight())) {
                        const long long c = lr_coefficient(nu, eta, mu);
                        if (c != 0) sum += schur_spec(eta, spec, kWindow) * Rational(c);
                    }
                    const QScalar skew = skew_schur_spec(mu, nu, spec, kWindow);
                    if (!mu.contains(nu)) {
                        CHECK(skew.is_exact_zero());
                        CHECK_FALSE(sum.has_terms());
                    } else {
                        CHECK(same(skew, sum));
                    }
                }
        CHECK(skew_schur_spec(Partition{2, 1}, Partition{2, 1}, Specialization::rho(), kWindow) == one());
        CHECK(same(skew_schur_spec(Partition{3, 1}, Partition{}, Specialization::rho(), kWindow),
                   schur_spec(Partition{3, 1}, Specialization::rho(), kWindow)));
    }

    TEST_CASE("LR coefficients") {
        CHECK(lr_coefficient(Partition{2, 1}, Partition{}, Partition{2, 1}) == 1);
        CHECK(lr_coefficient(Partition{1}, Partition{1, 1}, Partition{2, 1}) == 1);
        CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
        CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}) == 1);
        CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
        CHECK(oracle::lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    }

    TEST_CASE("power sums in Schur polynomials") {
        const auto p1 = oracle::schur_expand(oracle::power_sum_poly(Partition{1}, 1), 1);
        CHECK(p1 == std::map<Partition, long long>{{Partition{1}, 1}});
        const auto p2 = oracle::schur_expand(oracle::power_sum_poly(Partition{2}, 2), 2);
        CHECK(p2 == std::map<Partition, long long>{{Partition{2}, 1}, {Partition{1, 1}, -1}});
        const auto s11 = oracle::schur_expand(oracle::multiply(oracle::schur_poly(Partition{1}, 2),
                                                               oracle::schur_poly(Partition{1}, 2)),
                                              2);
        CHECK(s11 == std::map<Partition, long long>{{Partition{2}, 1}, {Partition{1, 1}, 1}});
        const auto s = schur_to_power_sums(Partition{2});
        CHECK(s.at(Partition{2}) == Rational(1, 2));
        CHECK(s.at(Partition{1, 1}) == Rational(1, 2));
    }

    TEST_CASE("Schur polynomials in times") {
        const auto s0 = schur_in_times(Partition{}, 4);
        REQUIRE(s0.terms().size() == 1);
        CHECK(s0.terms().begin()->second == Rational(1));
        const auto s1 = schur_in_times(Partition{1}, 4);
        REQUIRE(s1.terms().size() == 1);
        CHECK(s1.terms().begin()->first[0] == Partition{1});
        const auto s21 = schur_in_times(Partition{2, 1}, 4);
        CHECK(*s21.find({Partition{3}}) == Rational(-1));
        CHECK(*s21.find({Partition{1, 1, 1}}) == Rational(1, 3));
        // d/dt_2 s_{(2,1)}[t] is the signed sum over two-ribbon removals, which is empty for (2,1).
        CHECK(s21.derivative(0, 2).empty());
    }
}
