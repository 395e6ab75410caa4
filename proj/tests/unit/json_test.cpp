#include <doctest.h>

#include "helpers.hpp"
#include "topvert/json_io.hpp"
#include "topvert/report.hpp"

using namespace topvert;
using topvert::testing::q;

TEST_SUITE("json") {
    TEST_CASE("QScalar round trip") {
        const QScalar g = QScalar::geometric_sum(1, Rational(1, 2), Rational(1), 10);
        const auto j = qscalar_to_json(g);
        CHECK(j["lattice_denom"] == 1);
        CHECK(j["min_exp"] == 1);
        CHECK(j["coeffs"][0] == "1/1");
        CHECK(j["coeffs"][1] == "0/1");
        CHECK(qscalar_from_json(j) == g);
        const QScalar exact = QScalar::q_power(3, Rational(-1), Rational(3, 4)) + QScalar::q_power(3, Rational(2, 3), Rational(-1));
        CHECK(qscalar_from_json(qscalar_to_json(exact)) == exact);
        CHECK(qscalar_to_json(exact)["valid_upto"].is_null());
    }

    TEST_CASE("partitions") {
        CHECK(partition_to_json(Partition{7, 5, 4, 4, 3, 2}).dump() == "[7,5,4,4,3,2]");
        CHECK(partition_to_json(Partition{}).dump() == "[]");
        const auto t = parse_triple("[[2],[1],[]]");
        CHECK(t.a == Partition{2});
        CHECK(t.b == Partition{1});
        CHECK(t.c.empty());
        CHECK(triple_key(t) == "[[2],[1],[]]");
        CHECK_THROWS_AS(parse_triple("[[1,2],[],[]]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_triple("[[1],[]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_triple("[[0],[],[]]"), std::invalid_argument);
    }

    TEST_CASE("series") {
        SeriesPoly<QScalar> s({"t"}, {5});
        s.add({Partition{3, 1, 1}}, q(Rational(1)));
        const auto j = series_to_json(s);
        CHECK(j["family"] == "t");
        CHECK(j.at("cutoff") == 5);
        CHECK(j.at("terms").at(0).at("exps").at("1") == 2);
        CHECK(j.at("terms").at(0).at("exps").at("3") == 1);
        SeriesPoly<QScalar> tri({"p1", "p2", "p3"}, {1, 1, 1});
        tri.add({Partition{1}, Partition{}, Partition{1}}, q(Rational(0)));
        CHECK(series_keyed_json(tri).contains("[[1],[],[1]]"));
        CHECK(series_to_json(tri)["terms"][0]["exps"].contains("p3"));
    }

    TEST_CASE("reports") {
        CheckReport r;
        r.identity = "demo";
        r.compare("x", q(Rational(0)), q(Rational(0)) + q(Rational(1)), 1, 10);
        const auto j = to_json(r);
        CHECK(j["identity"] == "demo");
        CHECK(j["status"] == "fail");
        CHECK(j["pairs_checked"] == 1);
        CHECK(j["failures"].size() == 1);
    }
}
