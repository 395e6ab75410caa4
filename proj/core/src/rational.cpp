#include "topvert/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace topvert {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 x) { return x > kMin && x <= kMax; }

mpz_class to_mpz(i128 x) {
    const bool neg = x < 0;
    u128 u = uabs(x);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    assign_wide(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

void Rational::assign_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(n), u128(d));
    if (g > 1) {
        n /= i128(g);
        d /= i128(g);
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q;
    q.get_num() = to_mpz(n);
    q.get_den() = to_mpz(d);
    big_ = std::make_shared<const mpq_class>(std::move(q));
}

void Rational::assign_big(mpq_class q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
        q.get_num() != kMin) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
        return;
    }
    big_ = std::make_shared<const mpq_class>(std::move(q));
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

long long Rational::to_int() const {
    if (big_ || den_ != 1) throw std::overflow_error("rational is not a small integer");
    return num_;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    q.get_num() = mpz_class(static_cast<long>(num_));
    q.get_den() = mpz_class(static_cast<long>(den_));
    return q;
}

std::string Rational::numerator_str() const {
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const {
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const { return numerator_str() + "/" + denominator_str(); }

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(mpq_class(-*big_));
    } else {
        r.assign_wide(-i128(num_), den_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
                num_ = s;
                return *this;
            }
            assign_wide(i128(num_) + i128(o.num_), 1);
            return *this;
        }
        assign_wide(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(num_, o.num_, &p) && p != kMin) {
                num_ = p;
                return *this;
            }
            assign_wide(i128(num_) * i128(o.num_), 1);
            return *this;
        }
        assign_wide(i128(num_) * o.num_, i128(den_) * o.den_);
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    Rational r;
    if (big_) {
        r.assign_big(mpq_class(1 / *big_));
    } else {
        r.assign_wide(den_, num_);
    }
    return r;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in representation class
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace topvert
