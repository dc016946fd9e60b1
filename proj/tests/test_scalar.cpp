#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qaskey/hypergeometric.hpp"
#include "qaskey/scalar.hpp"

using namespace qaskey;

TEST_CASE("rational arithmetic is exact and canonical") {
    Scalar a = Scalar::ratio(2, 4);
    CHECK(a == Scalar::ratio(1, 2));
    CHECK((a + a).is_one());
    CHECK((a * Scalar::ratio(2, 3)) == Scalar::ratio(1, 3));
    CHECK((Scalar(1) / Scalar(3)).rational().get_den() == 3);
    CHECK(Scalar::ratio(-3, -6) == Scalar::ratio(1, 2));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
}

TEST_CASE("gaussian rationals demote when the imaginary part cancels") {
    Scalar z = Scalar::complex(1, 2);
    Scalar w = Scalar::complex(1, -2);
    CHECK((z * w) == Scalar(5));
    CHECK((z + w).is_rational());
    CHECK((z + w) == Scalar(2));
    CHECK(z.conj() == w);
    CHECK(Scalar::i().pow(2) == Scalar(-1));
    CHECK(Scalar::i().pow(-1) == -Scalar::i());
    CHECK(z.inverse() * z == Scalar(1));
    CHECK(Scalar::complex(0, 3).norm_sq() == Rational(9));
}

TEST_CASE("gaussian with zero imaginary part equals the rational") {
    // complex() canonicalizes, so a zero imaginary part never survives
    CHECK(Scalar::complex(3, 0) == Scalar(3));
    CHECK(Scalar::complex(3, 0).is_rational());
}

TEST_CASE("bigfloat mixing keeps the float precision") {
    BigFloat x = BigFloat::from_rational(Rational(1, 3), 128);
    Scalar s(x);
    Scalar t = Scalar::ratio(1, 3);
    Scalar sum = s + t;
    CHECK(sum.is_bigfloat());
    CHECK(sum.bigfloat().precision() == 128);
    CHECK(sum.to_double() == doctest::Approx(2.0 / 3.0));
    CHECK((Scalar(2).to_bigfloat(200).sqrt() * Scalar(2).to_bigfloat(200).sqrt()).to_double() ==
          doctest::Approx(2.0));
}

TEST_CASE("ordering and parsing") {
    CHECK(Scalar::ratio(1, 3) < Scalar::ratio(1, 2));
    CHECK_THROWS_AS((void)(Scalar::i() < Scalar(1)), Error);
    CHECK(Scalar::parse_rational("-7/2") == Scalar::ratio(-7, 2));
    CHECK(Scalar::parse_rational("5") == Scalar(5));
    CHECK_THROWS_AS(Scalar::parse_rational("0.5"), ConfigParseError);
    CHECK_THROWS_AS(Scalar::parse_rational("x"), ConfigParseError);
}

TEST_CASE("qbase validates its range and half base") {
    CHECK_THROWS_AS(QBase(Scalar(2)), ParameterConstraintError);
    QBase qb = QBase::from_half_base(Scalar::ratio(1, 2));
    CHECK(qb.q == Scalar::ratio(1, 4));
    CHECK(*qb.half_base == Scalar::ratio(1, 2));
}

TEST_CASE("pochhammer examples") {
    CHECK(pochhammer(Scalar::ratio(1, 2), 0) == Scalar(1));        // empty product
    CHECK(pochhammer(Scalar::ratio(1, 2), 3) == Scalar::ratio(15, 8));
    CHECK(pochhammer(Scalar(-2), 4) == Scalar(0));                 // factor hits zero
    CHECK(pochhammer(Scalar::i(), 2) == Scalar::i() * (Scalar::i() + Scalar(1)));
}

TEST_CASE("q-pochhammer examples") {
    Scalar q = Scalar::ratio(1, 3);
    CHECK(q_pochhammer(Scalar(7), q, 0) == Scalar(1));
    CHECK(q_pochhammer(Scalar::ratio(1, 2), q, 2) == Scalar::ratio(5, 12));
    CHECK(q_pochhammer(Scalar(1), q, 1) == Scalar(0));
}

TEST_CASE("q-pochhammer splitting identity (a;q)_{m+n} = (a;q)_m (a q^m;q)_n") {
    std::mt19937_64 rng(12345);
    auto rnd = [&]() {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = 1 + static_cast<long>(rng() % 9);
        return Scalar::ratio(num, den);
    };
    for (int rep = 0; rep < 40; ++rep) {
        Scalar a = rnd();
        Scalar q = Scalar::ratio(1 + static_cast<long>(rng() % 7), 8);
        long m = static_cast<long>(rng() % 11), n = static_cast<long>(rng() % 11);
        Scalar lhs = q_pochhammer(a, q, m + n);
        Scalar rhs = q_pochhammer(a, q, m) * q_pochhammer(a * q.pow(m), q, n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("q_pochhammer_inf truncation bound") {
    Scalar a = Scalar::ratio(1, 2), q = Scalar::ratio(1, 2);
    auto v40 = q_pochhammer_inf(a, q, 40);
    auto v80 = q_pochhammer_inf(a, q, 80);
    BigFloat diff = (v40.value.to_bigfloat() - v80.value.to_bigfloat()).abs();
    // |value(K) - value(2K)| <= stated relative bound times |value|
    BigFloat allowed = v40.bound.to_bigfloat() * v40.value.to_bigfloat().abs();
    CHECK(diff < allowed);
    CHECK(v40.bound <= Scalar(1).to_bigfloat().pow_int(0));  // bound is finite
    CHECK(diff.to_double() <= std::pow(2.0, -35));

    SUBCASE("trivial cases") {
        CHECK(q_pochhammer_inf(Scalar(0), q, 7).value == Scalar(BigFloat(1.0)));
        auto one = q_pochhammer_inf(Scalar::ratio(1, 3), Scalar::ratio(1, 4), 1);
        CHECK(one.value.to_double() == doctest::Approx(2.0 / 3.0));
    }
    SUBCASE("grid of (a, q) pairs") {
        for (long an = 1; an <= 4; ++an)
            for (long qn = 1; qn <= 3; ++qn) {
                Scalar aa = Scalar::ratio(an, 5), qq = Scalar::ratio(qn, 4);
                auto w1 = q_pochhammer_inf(aa, qq, 30);
                auto w2 = q_pochhammer_inf(aa, qq, 60);
                BigFloat d = (w1.value.to_bigfloat() - w2.value.to_bigfloat()).abs();
                CHECK(d < w1.bound.to_bigfloat() * w1.value.to_bigfloat().abs());
            }
    }
    CHECK_THROWS_AS(q_pochhammer_inf(a, Scalar(2), 5), ParameterOutOfRangeError);
}

TEST_CASE("terminating 2F1 and friends") {
    // 2F1(-1, 3; 2; 1/2) = 1 - 3/4 = 1/4
    CHECK(hyp_terminating({Scalar(-1), Scalar(3)}, {Scalar(2)}, Scalar::ratio(1, 2)) ==
          Scalar::ratio(1, 4));
    // argument zero
    CHECK(hyp_terminating({Scalar(-4), Scalar(9)}, {Scalar(3)}, Scalar(0)) == Scalar(1));
    // n = 0 termination
    CHECK(hyp_terminating({Scalar(0), Scalar(5)}, {Scalar(3)}, Scalar(1)) == Scalar(1));
    CHECK_THROWS_AS(hyp_terminating({Scalar(1)}, {Scalar(2)}, Scalar(1)), NonTerminatingError);
    // pole before termination: lower -1 dies at k = 2 <= termination index 3
    CHECK_THROWS_AS(hyp_terminating({Scalar(-3), Scalar(1)}, {Scalar(-1)}, Scalar(1)),
                    LowerParameterPoleError);
    // pole masked by earlier termination
    CHECK_NOTHROW(hyp_terminating({Scalar(-1), Scalar(1)}, {Scalar(-2)}, Scalar(1)));
}

TEST_CASE("terminating qhyp 2phi1 example") {
    Scalar q = Scalar::ratio(1, 4), b = Scalar::ratio(1, 2), c = Scalar::ratio(1, 3),
           z = Scalar::ratio(2, 3);
    // 2phi1(q^{-1}, b; c; q, z) = 1 + (1-q^{-1})(1-b) z / ((1-q)(1-c))
    Scalar expect = Scalar(1) + (Scalar(1) - q.inverse()) * (Scalar(1) - b) * z /
                                    ((Scalar(1) - q) * (Scalar(1) - c));
    CHECK(qhyp_terminating({q.inverse(), b}, {c}, q, z) == expect);
}

TEST_CASE("qhyp brute force oracle over random terminating instances") {
    // Independent oracle: literal term-by-term products of q-pochhammers.
    auto oracle = [](const std::vector<Scalar>& up, const std::vector<Scalar>& lo, Scalar q,
                     Scalar z, long n) {
        Scalar sum(0);
        long conv = 1 + static_cast<long>(lo.size()) - static_cast<long>(up.size());
        for (long k = 0; k <= n; ++k) {
            Scalar num(1);
            for (const auto& u : up) num = num * q_pochhammer(u, q, k);
            if (num.is_zero()) continue;  // a vanished numerator kills the term
            Scalar t = num;
            for (const auto& l : lo) t = t / q_pochhammer(l, q, k);
            t = t / q_pochhammer(q, q, k);
            t = t * z.pow(k);
            Scalar extra = (Scalar(-1).pow(k) * q.pow(k * (k - 1) / 2)).pow(conv);
            sum += t * extra;
        }
        return sum;
    };
    std::mt19937_64 rng(777);
    auto rnd = [&]() {
        long num = static_cast<long>(rng() % 15) - 7;
        long den = 1 + static_cast<long>(rng() % 7);
        Scalar s = Scalar::ratio(num == 0 ? 3 : num, den);
        return s;
    };
    int done = 0;
    while (done < 100) {
        Scalar q = Scalar::ratio(1 + static_cast<long>(rng() % 5), 7);
        long n = static_cast<long>(rng() % 5);
        size_t r = 2 + rng() % 2, s = 1 + rng() % 2;
        std::vector<Scalar> up{q.pow(-n)}, lo;
        for (size_t i = 1; i < r; ++i) up.push_back(rnd());
        for (size_t i = 0; i < s; ++i) lo.push_back(rnd());
        Scalar z = rnd();
        try {
            Scalar got = qhyp_terminating(up, lo, q, z);
            CHECK(got == oracle(up, lo, q, z, n));
            ++done;
        } catch (const LowerParameterPoleError&) {
            continue;  // resample
        }
    }
}

TEST_CASE("ordinary hyp agrees with a brute force oracle") {
    auto oracle = [](const std::vector<Scalar>& up, const std::vector<Scalar>& lo, Scalar z,
                     long n) {
        Scalar sum(0);
        for (long k = 0; k <= n; ++k) {
            Scalar num(1);
            for (const auto& u : up) num = num * pochhammer(u, k);
            if (num.is_zero()) continue;
            Scalar t = num;
            for (const auto& l : lo) t = t / pochhammer(l, k);
            t = t / factorial(k);
            sum += t * z.pow(k);
        }
        return sum;
    };
    std::mt19937_64 rng(31337);
    auto rnd = [&]() {
        long num = static_cast<long>(rng() % 15) - 7;
        long den = 1 + static_cast<long>(rng() % 7);
        return Scalar::ratio(num == 0 ? 5 : num, den);
    };
    int done = 0;
    while (done < 100) {
        long n = static_cast<long>(rng() % 6);
        std::vector<Scalar> up{Scalar(-n), rnd()}, lo{rnd()};
        Scalar z = rnd();
        try {
            Scalar got = hyp_terminating(up, lo, z);
            CHECK(got == oracle(up, lo, z, n));
            ++done;
        } catch (const LowerParameterPoleError&) {
            continue;
        }
    }
}

TEST_CASE("q_exponent_of") {
    Scalar q = Scalar::ratio(1, 3);
    CHECK(q_exponent_of(Scalar(1), q) == 0);
    CHECK(q_exponent_of(Scalar(27), q) == 3);
    CHECK(q_exponent_of(Scalar(5), q) == std::nullopt);
}
