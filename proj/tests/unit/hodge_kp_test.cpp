#include <doctest.h>

#include "helpers.hpp"
#include "topvert/fock_checks.hpp"
#include "topvert/hodge.hpp"
#include "topvert/kp.hpp"
#include "topvert/mutation.hpp"
#include "topvert/vertex.hpp"

using namespace topvert;
using topvert::testing::one;
using topvert::testing::q;
using topvert::testing::require_pass;
using topvert::testing::same;

namespace {

QScalar coefficient(const SeriesPoly<QScalar>& s, const Monomial& m, int lattice) {
    const QScalar* c = s.find(m);
    return c ? *c : QScalar(lattice);
}

}  // namespace

TEST_SUITE("hodge") {
    TEST_CASE("constant terms") {
        const HodgeConfig cfg;
        for (const auto& tau : {Rational(1), Rational(2)}) {
            const TriSeries e = expG_coefficients(tau, {0, 0, 0}, cfg);
            const TriSeries w = W_coefficients(tau, {0, 0, 0}, cfg);
            const int L = lattice_for_tau(tau);
            REQUIRE(e.terms().size() == 1);
            CHECK(e.terms().begin()->second == QScalar::constant(L, Rational(1)));
            REQUIRE(w.terms().size() == 1);
            CHECK(w.terms().begin()->second == QScalar::constant(L, Rational(1)));
        }
    }

    TEST_CASE("single-box coefficient") {
        const HodgeConfig cfg;
        const TriSeries e = expG_coefficients(Rational(1), {1, 1, 1}, cfg);
        const QScalar box = QScalar::geometric_sum(1, Rational(1, 2), Rational(1), 80);
        CHECK(same(coefficient(e, {Partition{}, Partition{1}, Partition{}}, 1), box));
        const TriSeries w = W_coefficients(Rational(1), {1, 1, 1}, cfg);
        for (const auto& [m, c] : e.terms()) CHECK(same(c, coefficient(w, m, 1)));
    }

    TEST_CASE("anomaly coefficient of the tau = 1 reduction") {
        const HodgeConfig cfg;
        const TriSeries e = expG_coefficients(Rational(1), {1, 0, 2}, cfg);
        const TriSeries e0 = expG_coefficients(Rational(1), {0, 1, 2}, cfg);
        const QScalar lhs = coefficient(e, {Partition{1}, Partition{}, Partition{2}}, 1);
        // With p1 -> 0 and p+_1 = p1_1 the single anomaly term p1_1 p3_2 enters with coefficient +1.
        const QScalar rhs = coefficient(e0, {Partition{}, Partition{1}, Partition{2}}, 1) + one();
        CHECK(same(lhs, rhs));
    }

    TEST_CASE("Theorem 1 and reductions at small cutoffs") {
        const HodgeConfig cfg;
        require_pass(verify_W_equals_expG(Rational(1), {2, 2, 2}, cfg));
        require_pass(verify_W_equals_expG(Rational(2), {1, 1, 1}, cfg));
        require_pass(verify_reduction_tau1({0, 0, 0}, cfg));
        require_pass(verify_reduction_tau1({1, 1, 2}, cfg));
        require_pass(verify_reduction_tauN(2, {1, 1, 3}, cfg));
        require_pass(verify_quadratic_expansion(0));
        require_pass(verify_quadratic_expansion(4));
        FockContext ctx;
        require_pass(verify_schur_expansion_prop43(ctx, 1, cfg));
    }

    TEST_CASE("wrong p+ rule breaks the reduction") {
        const ScopedMutation m(Mutation::wrong_pplus);
        CHECK(verify_reduction_tau1({2, 2, 2}, HodgeConfig{}).status == CheckStatus::fail);
    }
}

TEST_SUITE("kp") {
    TEST_CASE("tau function basics") {
        KpConfig cfg;
        cfg.degree = 4;
        const TauSeries T = build_tau(1, cfg);
        CHECK(*T.body.find({Partition{}, Partition{}, Partition{}}) == T.one());
        // With p1 = p2 = 0 the Schur coefficients in t are the expG coefficients of (0, 0, lambda).
        const auto c = schur_coefficients(T, 4);
        for (const auto& lam : partitions_up_to(4)) {
            const QScalar expected = expG_schur_coefficient({Partition{}, Partition{}, lam}, Rational(1), 80);
            CHECK(same(coefficient(c.at(lam), {Partition{}, Partition{}}, 1), expected));
        }
    }

    TEST_CASE("degree guard lists feasible pairs") {
        KpConfig cfg;
        cfg.degree = 4;
        const TauSeries T = build_tau(2, cfg);
        CHECK_THROWS_AS(check_reduction_condition(T, 2, 1, 20, 40), std::out_of_range);
        require_pass(check_reduction_condition(T, 1, 1, 20, 40));
    }

    TEST_CASE("trivial tau function satisfies the Plucker relations") {
        SeriesPoly<QScalar> body({"p1", "p2", "t"}, {0, 0, 5});
        Rational fact(1);
        for (int n = 0; n <= 5; ++n) {
            if (n > 0) fact = fact * Rational(n);
            std::vector<int> ones(static_cast<std::size_t>(n), 1);
            body.add({Partition{}, Partition{}, Partition(ones)}, QScalar::constant(1, Rational(1) / fact));
        }
        const TauSeries T = tau_from_series(1, body);
        require_pass(check_plucker(T, 5, 20, 40));
        for (auto c : all_corruptions())
            CHECK(check_plucker(corrupt_tau(T, c), 5, 20, 40).status == CheckStatus::fail);
    }

    TEST_CASE("reduction and certificate at N = 1") {
        KpConfig cfg;
        require_pass(verify_kp(1, cfg));
        const ScopedMutation m(Mutation::perturb_tau);
        CHECK(verify_kp(1, cfg).status == CheckStatus::fail);
    }
}
