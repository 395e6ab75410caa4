#pragma once

#include <doctest.h>

#include "topvert/qscalar.hpp"
#include "topvert/report.hpp"

namespace topvert::testing {

inline QScalar q(const Rational& e, const Rational& c = Rational(1)) { return QScalar::q_power(1, e, c); }
inline QScalar one() { return QScalar::constant(1, Rational(1)); }

inline bool same(const QScalar& a, const QScalar& b, int min_width = 20, int window = 40) {
    return compare_on_window(a, b, min_width, window).status == WindowComparison::Status::equal;
}

inline void require_pass(const CheckReport& r) {
    INFO(r.identity << " failures=" << r.failure_count
                    << (r.failures.empty() ? std::string() : " first: " + r.failures[0].where + " " + r.failures[0].detail));
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.pairs_checked > 0);
}

}  // namespace topvert::testing
