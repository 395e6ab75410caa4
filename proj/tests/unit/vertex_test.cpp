#include <doctest.h>

#include "helpers.hpp"
#include "topvert/fock_checks.hpp"
#include "topvert/mutation.hpp"
#include "topvert/symmetric.hpp"
#include "topvert/vertex.hpp"

using namespace topvert;
using topvert::testing::one;
using topvert::testing::q;
using topvert::testing::require_pass;
using topvert::testing::same;

namespace {

const int kWindow = 80;

}  // namespace

TEST_SUITE("vertex") {
    TEST_CASE("small coefficients") {
        const Partition none;
        CHECK(vertex_C({none, none, none}, kWindow) == one());
        CHECK(lllz_coefficient({none, none, none}, kWindow) == one());
        const QScalar box = QScalar::geometric_sum(1, Rational(1, 2), Rational(1), kWindow);
        CHECK(same(vertex_C({Partition{1}, none, none}, kWindow), box));
        CHECK(same(lllz_coefficient({Partition{1}, none, none}, kWindow), box));
    }

    TEST_CASE("two-leg closed forms") {
        const Partition none;
        for (const auto& nup : partitions_up_to(2))
            for (const auto& nu3 : partitions_up_to(2)) {
                const QScalar s_plus = schur_spec(nup, Specialization::rho(), kWindow);
                const QScalar c = q(Rational(nu3.kappa(), 2)) *
                                  schur_spec(nu3, Specialization::shifted(nup), kWindow) * s_plus;
                CHECK(same(vertex_C({nu3, nup.conjugate(), none}, kWindow), c));
                const QScalar t = q(-Rational(nu3.kappa(), 2)) * s_plus *
                                  schur_spec(nu3.conjugate(), Specialization::shifted(nup), kWindow);
                CHECK(same(lllz_coefficient({none, nup, nu3}, kWindow), t));
            }
    }

    TEST_CASE("Fock route") {
        FockContext ctx;
        const Partition none;
        const QScalar c1 = vertex_C({Partition{1}, none, none}, kWindow);
        for (const auto& tau : {Rational(1), Rational(2)}) {
            const QScalar f = vertex_C_via_fock(ctx, {Partition{1}, none, none}, tau);
            const int L = f.lattice();
            CHECK(same(f, c1.relattice(L), 20 * L, 40 * L));
        }
        const PartitionTriple ones{Partition{1}, Partition{1}, Partition{1}};
        CHECK(same(vertex_C_via_fock(ctx, ones, Rational(1)), vertex_C(ones, kWindow)));
        CHECK(same(vertex_C_via_fock(ctx, {none, none, none}, Rational(1)), one()));
    }

    TEST_CASE("identities at low weight") {
        const VertexConfig cfg;
        require_pass(verify_theorem1(0, cfg));
        const CheckReport t2 = verify_theorem1(2, cfg);
        require_pass(t2);
        CHECK(t2.pairs_checked >= 9);
        require_pass(verify_cyclic(3, cfg));
        for (const PartitionTriple& t : {PartitionTriple{}, PartitionTriple{Partition{}, Partition{1}, Partition{1}},
                                         PartitionTriple{Partition{1}, Partition{1}, Partition{}}})
            require_pass(verify_reduction_C(t, cfg));
        require_pass(verify_two_leg_chain(3, cfg));
    }

    TEST_CASE("cyclic examples") {
        const Partition none;
        CHECK(same(vertex_C({Partition{1}, none, none}, kWindow), vertex_C({none, none, Partition{1}}, kWindow)));
        const PartitionTriple t{Partition{2}, Partition{1}, none};
        CHECK(same(vertex_C(t, kWindow), vertex_C({t.b, t.c, t.a}, kWindow)));
        CHECK(same(vertex_C(t, kWindow), vertex_C({t.c, t.a, t.b}, kWindow)));
    }

    TEST_CASE("dropped ribbon sign breaks the closed form") {
        const ScopedMutation m(Mutation::drop_sign);
        CHECK(verify_theorem1(3, VertexConfig{}).status == CheckStatus::fail);
    }

    TEST_CASE("dropped framing breaks cyclic symmetry") {
        const ScopedMutation m(Mutation::drop_framing);
        CHECK(verify_cyclic(3, VertexConfig{}).status == CheckStatus::fail);
    }
}
