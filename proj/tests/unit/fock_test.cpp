#include <doctest.h>

#include "helpers.hpp"
#include "topvert/fock.hpp"
#include "topvert/fock_checks.hpp"
#include "topvert/oracles.hpp"
#include "topvert/symmetric.hpp"

using namespace topvert;
using topvert::testing::one;
using topvert::testing::q;
using topvert::testing::require_pass;
using topvert::testing::same;

TEST_SUITE("fock") {
    TEST_CASE("elementary actions") {
        const FockEngine e(FockConfig{});
        const FockVector v = e.apply_basis(op::J(-1), Partition{}, 4);
        REQUIRE(v.terms.size() == 1);
        CHECK(v.terms.begin()->first == Partition{1});
        CHECK(v.terms.begin()->second == one());
        const FockVector k = e.apply_basis(op::K(), Partition{2}, 4);
        REQUIRE(k.terms.size() == 1);
        CHECK(k.component(Partition{2}, 1) == QScalar::constant(1, Rational(2)));
        for (const auto& lam : partitions_up_to(5)) {
            CHECK(e.matrix_element(op::L0(), lam, lam) == QScalar::constant(1, Rational(lam.weight())));
            CHECK(e.matrix_element(op::W0(), lam, lam) ==
                  QScalar::constant(1, Rational(lam.kappa() + lam.weight())));
        }
    }

    TEST_CASE("vacuum expectation of V_0") {
        const FockEngine e(FockConfig{});
        for (int k = 1; k <= 3; ++k) {
            const QScalar expected = -q(Rational(k, 2)) * (one() - q(Rational(k))).inverse(80);
            const QScalar v = e.matrix_element(op::V(k, 0), Partition{}, Partition{});
            CHECK(same(v, expected));
            CHECK(same(v, phi_value(k, Partition{}, 1, 80)));
        }
    }

    TEST_CASE("Gamma matrix elements are skew Schur values") {
        const FockEngine e(FockConfig{});
        for (const auto& mu : partitions_up_to(2))
            for (const auto& lam : partitions_up_to(4)) {
                const QScalar m = e.matrix_element(op::gamma_minus(Specialization::rho()), lam, mu);
                const QScalar s = skew_schur_spec(lam, mu, Specialization::rho(), 80);
                if (s.is_exact_zero()) {
                    CHECK_FALSE(m.has_terms());
                } else {
                    CHECK(same(m, s));
                }
            }
    }

    TEST_CASE("vacuum expectation of G_0 is one") {
        FockContext ctx;
        for (const auto& tau : {Rational(1), Rational(2), Rational(1, 2)}) {
            const int L = lattice_for_tau(tau);
            const FockEngine& e = ctx.engine(L);
            const QScalar v = e.matrix_element(op::G(Partition{}, tau), Partition{}, Partition{});
            CHECK(same(v, QScalar::constant(L, Rational(1)), 20 * L, 40 * L));
        }
    }

    TEST_CASE("fermion window examples") {
        const auto w = oracle::FermionWindow::for_weight(5, 3);
        const FockEngine e(FockConfig{});
        CHECK(w.k_eigenvalue(Partition{2, 1}) == Rational(0));
        for (const auto& lam : partitions_of(1))
            CHECK(same(e.matrix_element(op::J(2), lam, Partition{2, 1}), w.v_element(0, 2, lam, Partition{2, 1}, 40)));
        CHECK(w.v_element(0, 2, Partition{1}, Partition{2, 1}, 40) == QScalar(1));
        for (const auto& lam : {Partition{2}, Partition{1, 1}}) {
            const QScalar oracle = w.v_element(1, -1, lam, Partition{1}, 40);
            CHECK(same(e.matrix_element(op::V(1, -1), lam, Partition{1}), oracle));
        }
        CHECK(w.v_element(1, 1, Partition{}, Partition{1}, 40) == QScalar::constant(1, Rational(1)));
        CHECK_THROWS_AS(oracle::FermionWindow(-13, 12), oracle::WindowOverflow);
        const oracle::FermionWindow tiny(-1, 1);
        CHECK_THROWS_AS(tiny.v_element(0, -3, Partition{3}, Partition{}, 40), oracle::WindowOverflow);
    }

    TEST_CASE("shift symmetry instances") {
        FockContext ctx;
        require_pass(check_shift_symmetry(ctx, ShiftKind::gen1, {Partition{}, 1, 0}, 4));
        require_pass(check_shift_symmetry(ctx, ShiftKind::gen1, {Partition{}, -2, 0}, 4));
        ShiftParams p{Partition{}, 1, 1};
        p.gamma = Rational(1, 2);
        require_pass(check_shift_symmetry(ctx, ShiftKind::gen3, p, 4));
        CHECK_THROWS_AS(check_shift_symmetry(ctx, ShiftKind::gen1, {Partition{}, 0, 0}, 4), std::invalid_argument);
    }

    TEST_CASE("exchange formula") {
        FockContext ctx;
        require_pass(check_exchange_formula(ctx, Partition{}, 4));
        require_pass(check_exchange_formula(ctx, Partition{1}, 4));
    }

    TEST_CASE("factorization and shifted flow, low order") {
        FockContext ctx;
        require_pass(check_factorization(ctx, 1, false, 1, 3));
        require_pass(check_factorization(ctx, 2, false, 1, 3));
        require_pass(check_shifted_flow(ctx, 1, 2, 3));
        require_pass(check_quantum_torus(ctx, 1, 3));
    }
}
