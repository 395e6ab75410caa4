#include <doctest.h>

#include "helpers.hpp"
#include "topvert/mutation.hpp"
#include "topvert/oracles.hpp"

using namespace topvert;
using topvert::testing::require_pass;

TEST_SUITE("oracles") {
    TEST_CASE("each oracle agrees at small bounds") {
        OracleBounds b;
        b.character_degree = 5;
        b.ribbon_weight = 4;
        b.lr_weight = 6;
        b.h_degree = 6;
        b.fock_weight = 4;
        b.lllz_weight = 2;
        for (const auto& r : run_oracles(b)) require_pass(r);
    }

    TEST_CASE("character oracle rejects a wrong Murnaghan-Nakayama sign") {
        OracleBounds b;
        b.character_degree = 4;
        for (auto m : {Mutation::sign_flip, Mutation::drop_sign, Mutation::mn_off_by_one}) {
            const ScopedMutation scope(m);
            CHECK(oracle_characters(b).status == CheckStatus::fail);
        }
    }
}
