#include <doctest.h>

#include <algorithm>

#include "topvert/maya.hpp"
#include "topvert/partition.hpp"
#include "topvert/ribbon.hpp"
#include "topvert/oracles.hpp"

using namespace topvert;

TEST_SUITE("partition") {
    TEST_CASE("conjugate") {
        CHECK(Partition{}.conjugate() == Partition{});
        CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
        CHECK(Partition{7, 5, 4, 4, 3, 2}.conjugate() == Partition{6, 6, 5, 4, 2, 1, 1});
        for (const auto& mu : partitions_up_to(8)) {
            CHECK(mu.conjugate().conjugate() == mu);
            for (int j = 0; j < mu[0]; ++j) {
                int column = 0;
                for (int p : mu.parts()) column += p > j ? 1 : 0;
                CHECK(mu.conjugate()[j] == column);
            }
        }
    }

    TEST_CASE("kappa is antisymmetric under conjugation") {
        CHECK(Partition{}.kappa() == 0);
        CHECK(Partition{2}.kappa() == 2);
        CHECK(Partition{1, 1}.kappa() == -2);
        for (const auto& mu : partitions_up_to(8)) CHECK(mu.conjugate().kappa() == -mu.kappa());
    }

    TEST_CASE("multiset helpers") {
        CHECK(z_mu(Partition{2, 1}) == 2);
        CHECK(z_mu(Partition{1, 1, 1}) == 6);
        CHECK(union_parts(Partition{2, 1}, Partition{2}) == Partition{2, 2, 1});
        CHECK(double_parts(Partition{3, 1}) == Partition{6, 2});
    }

    TEST_CASE("partition counts and order") {
        const std::vector<int> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22};
        for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
        const auto p4 = partitions_of(4);
        CHECK(p4.front() == Partition{4});
        CHECK(p4.back() == Partition{1, 1, 1, 1});
        CHECK(std::is_sorted(p4.begin(), p4.end()));
    }

    TEST_CASE("ribbon removal from the seven-box example") {
        const auto steps = ribbons_removable(Partition{7, 5, 4, 4, 3, 2}, 7);
        const auto it = std::find_if(steps.begin(), steps.end(),
                                     [](const RibbonStep& s) { return s.beta == Partition{7, 5, 3, 2, 1}; });
        REQUIRE(it != steps.end());
        CHECK(it->sign == -1);
        CHECK(it->ribbon.height == 3);
        CHECK(ribbons_removable(Partition{}, 3).empty());
        const auto single = ribbons_removable(Partition{1}, 1);
        REQUIRE(single.size() == 1);
        CHECK(single[0].beta == Partition{});
        CHECK(single[0].sign == 1);
    }

    TEST_CASE("ribbons added to the empty diagram are signed hooks") {
        for (int l = 1; l <= 6; ++l) {
            const auto steps = ribbons_addable(Partition{}, l);
            CHECK(steps.size() == static_cast<std::size_t>(l));
            for (const auto& s : steps) {
                const int arm = s.beta[0];
                CHECK(s.beta.weight() == l);
                CHECK(s.beta.length() == l - arm + 1);
                CHECK(s.sign == ((l - arm) % 2 == 0 ? 1 : -1));
            }
        }
    }

    TEST_CASE("two-box ribbons added to a single box") {
        auto steps = ribbons_addable(Partition{1}, 2);
        std::sort(steps.begin(), steps.end(), [](const RibbonStep& a, const RibbonStep& b) { return a.beta < b.beta; });
        REQUIRE(steps.size() == 2);
        CHECK(steps[0].beta == Partition{3});
        CHECK(steps[0].sign == 1);
        CHECK(steps[1].beta == Partition{1, 1, 1});
        CHECK(steps[1].sign == -1);
        CHECK(oracle::border_strips(Partition{1}, 2, true).size() == 2);
    }

    TEST_CASE("characters") {
        for (int d = 1; d <= 6; ++d)
            for (const auto& nu : partitions_of(d)) {
                CHECK(character(Partition{d}, nu) == 1);
                const int sign = (nu.weight() - nu.length()) % 2 == 0 ? 1 : -1;
                CHECK(character(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), nu) == sign);
            }
        CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
        CHECK(oracle::character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
        CHECK_THROWS_AS(character(Partition{2}, Partition{1}), std::invalid_argument);
    }

    TEST_CASE("character orthogonality") {
        for (int d = 0; d <= 6; ++d)
            for (const auto& a : partitions_of(d))
                for (const auto& b : partitions_of(d)) {
                    Rational s(0);
                    for (const auto& nu : partitions_of(d))
                        s += Rational(character(a, nu) * character(b, nu), z_mu(nu));
                    CHECK(s == Rational(a == b ? 1 : 0));
                }
    }

    TEST_CASE("Frobenius round trip in d variables") {
        for (int d = 1; d <= 5; ++d)
            for (const auto& mu : partitions_of(d)) {
                oracle::Poly sum;
                for (const auto& nu : partitions_of(d))
                    for (const auto& [e, c] : oracle::schur_poly(nu, d)) sum[e] += character(nu, mu) * c;
                oracle::Poly p = oracle::power_sum_poly(mu, d);
                for (const auto& [e, c] : sum) CHECK(p[e] == c);
                for (const auto& [e, c] : p) CHECK(sum[e] == c);
            }
    }

    TEST_CASE("Maya round trip") {
        for (const auto& mu : partitions_up_to(12)) CHECK(MayaDiagram(mu).to_partition() == mu);
    }
}
