#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaskey/families.hpp"
#include "qaskey/hypergeometric.hpp"

using namespace qaskey;

namespace {
Scalar R(long n, long d = 1) { return Scalar::ratio(n, d); }
}

TEST_CASE("jacobi paper values") {
    Scalar alpha = R(1, 3), beta = R(2, 5);
    for (long n = 0; n <= 6; ++n) {
        Polynomial1 p = fam::jacobi(n, alpha, beta);
        CHECK(p.degree() == n);
        // series argument 0 at x = 1
        CHECK(p.evaluate(Scalar(1)) == pochhammer(alpha + Scalar(1), n) / factorial(n));
        // symmetry P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x)
        Polynomial1 q = fam::jacobi(n, beta, alpha);
        Polynomial1 reflected = p.compose(Polynomial1({Scalar(0), Scalar(-1)}));
        CHECK(reflected == Scalar(-1).pow(n) * q);
    }
}

TEST_CASE("legendre and hermite and laguerre explicit recurrences") {
    // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
    for (long n = 1; n <= 6; ++n) {
        Polynomial1 pm = fam::jacobi(n - 1, Scalar(0), Scalar(0));
        Polynomial1 p = fam::jacobi(n, Scalar(0), Scalar(0));
        Polynomial1 pp = fam::jacobi(n + 1, Scalar(0), Scalar(0));
        CHECK(Scalar(n + 1) * pp == Scalar(2 * n + 1) * (Polynomial1::x() * p) - Scalar(n) * pm);
    }
    // H_{n+1} = 2x H_n - 2n H_{n-1}
    for (long n = 1; n <= 8; ++n) {
        CHECK(fam::hermite(n + 1) ==
              Scalar(2) * (Polynomial1::x() * fam::hermite(n)) - Scalar(2 * n) * fam::hermite(n - 1));
    }
    // (n+1) L_{n+1} = (2n + alpha + 1 - x) L_n - (n + alpha) L_{n-1}
    Scalar alpha = R(2, 7);
    for (long n = 1; n <= 6; ++n) {
        Polynomial1 lhs = Scalar(n + 1) * fam::laguerre(n + 1, alpha);
        Polynomial1 rhs =
            (Polynomial1({Scalar(2 * n) + alpha + Scalar(1), Scalar(-1)})) * fam::laguerre(n, alpha) -
            (Scalar(n) + alpha) * fam::laguerre(n - 1, alpha);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("hermite and laguerre basics") {
    CHECK(fam::hermite(1).evaluate(Scalar(0)) == Scalar(0));
    Scalar alpha = R(1, 2);
    for (long n = 0; n <= 5; ++n)
        CHECK(fam::laguerre(n, alpha).evaluate(Scalar(0)) ==
              pochhammer(alpha + Scalar(1), n) / factorial(n));
}

TEST_CASE("askey-wilson monic form and paper value at z = a") {
    Scalar q = R(1, 4), a = R(1, 2), b = R(1, 3), c = R(-2, 5), d = R(3, 7);
    for (long n = 0; n <= 5; ++n) {
        SymLaurent1 P = fam::askey_wilson_monic(n, a, b, c, d, q);
        CHECK(P.degree() == n);
        CHECK(P.at(n).is_one());  // monic as symmetric Laurent polynomial
        // P_n(a) = (ab,ac,ad;q)_n / (a^n (abcd q^{n-1};q)_n)
        Scalar expect = q_pochhammer(a * b, q, n) * q_pochhammer(a * c, q, n) *
                        q_pochhammer(a * d, q, n) /
                        (a.pow(n) * q_pochhammer(a * b * c * d * q.pow(n - 1), q, n));
        CHECK(P.evaluate(a) == expect);
        // parameter permutation invariance
        CHECK(fam::askey_wilson_monic(n, c, a, d, b, q) == P);
    }
}

TEST_CASE("askey-wilson all-zero parameters give continuous q-Hermite") {
    Scalar q = R(1, 3);
    for (long n = 0; n <= 6; ++n) {
        SymLaurent1 P = fam::askey_wilson_monic(n, Scalar(0), Scalar(0), Scalar(0), Scalar(0), q);
        CHECK(P.degree() == n);
        CHECK(P.at(n).is_one());
        for (long k = n; k >= 0; k -= 2) CHECK(P.at(k) == q_binomial(n, (n - k) / 2, q));
    }
}

TEST_CASE("little q-jacobi value of Eq-style anchor") {
    Scalar q = R(1, 4), a = R(1, 3), b = R(2, 5);
    for (long n = 0; n <= 5; ++n) {
        Polynomial1 p = fam::little_q_jacobi(n, a, b, q);
        CHECK(p.degree() == n);
        Scalar x0 = (q * b).inverse();
        Scalar expect = Scalar(-1).pow(n) * q_pochhammer(q * b, q, n) /
                        (q.pow(n * (n + 1) / 2) * b.pow(n) * q_pochhammer(q * a, q, n));
        CHECK(p.evaluate(x0) == expect);
    }
}

TEST_CASE("discrete q-hermite I hand values and monicity") {
    Scalar q = R(1, 3);
    CHECK(fam::discrete_q_hermite_1(0, q) == Polynomial1(Scalar(1)));
    CHECK(fam::discrete_q_hermite_1(1, q) == Polynomial1::x());
    // h_2 = x^2 - (1-q), h_3 = x^3 - (1-q^3) x
    CHECK(fam::discrete_q_hermite_1(2, q) ==
          Polynomial1({-(Scalar(1) - q), Scalar(0), Scalar(1)}));
    CHECK(fam::discrete_q_hermite_1(3, q) ==
          Polynomial1({Scalar(0), -(Scalar(1) - q.pow(3)), Scalar(0), Scalar(1)}));
    // recurrence h_{n+1} = x h_n - q^{n-1}(1-q^n) h_{n-1}
    for (long n = 1; n <= 7; ++n) {
        CHECK(fam::discrete_q_hermite_1(n + 1, q) ==
              Polynomial1::x() * fam::discrete_q_hermite_1(n, q) -
                  (q.pow(n - 1) * (Scalar(1) - q.pow(n))) * fam::discrete_q_hermite_1(n - 1, q));
    }
}

TEST_CASE("wilson normalization value at t = -a^2") {
    Scalar a = R(1, 2), b = R(2, 3), c = R(1, 2), d = R(0);
    for (long n = 0; n <= 5; ++n) {
        Polynomial1 w = fam::wilson(n, a, b, c, d);
        CHECK(w.degree() == n);
        CHECK(w.evaluate(-(a * a)) ==
              pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n));
    }
}

TEST_CASE("continuous dual hahn value at t = -a^2") {
    Scalar a = R(3, 4), b = R(1, 2), c = R(1);
    for (long n = 0; n <= 5; ++n) {
        Polynomial1 s = fam::continuous_dual_hahn(n, a, b, c);
        CHECK(s.evaluate(-(a * a)) == pochhammer(a + b, n) * pochhammer(a + c, n));
    }
}

TEST_CASE("continuous hahn and meixner-pollaczek reality and anchors") {
    Scalar a = R(1, 2), b = R(2, 3);
    for (long n = 0; n <= 6; ++n) {
        Polynomial1 p = fam::continuous_hahn(n, a, b, a, b);
        CHECK(p.degree() == n);
        for (long i = 0; i <= n; ++i) CHECK(p.at(i).is_real());
        // p_n(ia) = i^n (a+c)_n (a+d)_n / n! with c = a, d = b
        Scalar anchor = p.evaluate(Scalar::complex(0, a.rational()));
        CHECK(anchor == Scalar::i().pow(n) * pochhammer(Scalar(2) * a, n) * pochhammer(a + b, n) /
                            factorial(n));
    }
    Scalar lam = R(3, 4);
    for (long n = 0; n <= 6; ++n) {
        Polynomial1 p = fam::meixner_pollaczek(n, lam, Scalar::i());  // phi = pi/2
        CHECK(p.degree() == n);
        for (long i = 0; i <= n; ++i) CHECK(p.at(i).is_real());
        // P_n(i lambda; phi) = ((2 lambda)_n / n!) e^{i n phi}
        Scalar anchor = p.evaluate(Scalar::complex(0, lam.rational()));
        CHECK(anchor == pochhammer(Scalar(2) * lam, n) / factorial(n) * Scalar::i().pow(n));
    }
}

TEST_CASE("q-racah basics") {
    Scalar q = R(2, 3), alpha = R(1, 2);
    // (alpha, alpha, q^{-2N-2}, -1) with N = 2: gamma q = q^{-5}
    Scalar gamma = q.pow(-6), delta = Scalar(-1);
    long N = fam::q_racah_degree_bound(alpha, alpha, gamma, delta, q);
    CHECK(N == 5);
    for (long n = 0; n <= N; ++n) {
        Polynomial1 r = fam::q_racah(n, alpha, alpha, gamma, delta, q);
        CHECK(r.degree() == n);
    }
    // R_n(y(0)) = 1: only the k = 0 term survives at x = 0
    FamilySpec spec{Family::q_racah,
                    {{"alpha", alpha}, {"beta", alpha}, {"gamma", gamma}, {"delta", delta},
                     {"q", q}},
                    {}};
    Scalar y0 = lattice_value(spec, Scalar(0));
    for (long n = 0; n <= N; ++n)
        CHECK(fam::q_racah(n, alpha, alpha, gamma, delta, q).evaluate(y0) == Scalar(1));
    CHECK_THROWS_AS(fam::q_racah(N + 1, alpha, alpha, gamma, delta, q), DegreeOutOfRangeError);
    CHECK_THROWS_AS(fam::q_racah(1, alpha, alpha, R(1, 2), delta, q), ParameterConstraintError);
}

TEST_CASE("racah, hahn, krawtchouk, dual hahn basics") {
    // Racah with gamma = -N-1
    Scalar alpha = R(1, 3), beta = R(1, 4);
    long N = 4;
    Scalar gamma = Scalar(-N - 1), delta = R(1, 2);
    CHECK(fam::racah_degree_bound(alpha, beta, gamma, delta) == N);
    for (long n = 0; n <= N; ++n) {
        CHECK(fam::racah(n, alpha, beta, gamma, delta).degree() == n);
        // value 1 at the lattice origin y = 0
        CHECK(fam::racah(n, alpha, beta, gamma, delta).evaluate(Scalar(0)) == Scalar(1));
    }
    for (long n = 0; n <= N; ++n) {
        CHECK(fam::hahn(n, alpha, beta, N).degree() == n);
        CHECK(fam::hahn(n, alpha, beta, N).evaluate(Scalar(0)) == Scalar(1));
        CHECK(fam::krawtchouk(n, R(1, 2), N).evaluate(Scalar(0)) == Scalar(1));
        CHECK(fam::dual_hahn(n, alpha, beta, N).evaluate(Scalar(0)) == Scalar(1));
    }
    CHECK_THROWS_AS(fam::hahn(N + 1, alpha, beta, N), DegreeOutOfRangeError);
}

TEST_CASE("structural three-term recurrence across the catalog") {
    auto check = [](Family f, std::map<std::string, Scalar> params, long nmax) {
        FamilySpec spec{f, std::move(params), {}};
        auto rep = three_term_recurrence_check(spec, nmax);
        INFO(family_name(f), ": ", rep.message);
        CHECK(rep.pass);
    };
    check(Family::jacobi, {{"alpha", R(0)}, {"beta", R(0)}}, 6);
    check(Family::jacobi, {{"alpha", R(1, 3)}, {"beta", R(-1, 2)}}, 6);
    check(Family::laguerre, {{"alpha", R(2, 5)}}, 6);
    check(Family::hermite, {}, 8);
    check(Family::askey_wilson,
          {{"a", R(1, 2)}, {"b", R(1, 3)}, {"c", R(-1, 2)}, {"d", R(-1, 3)}, {"q", R(1, 4)}}, 5);
    check(Family::big_q_jacobi,
          {{"a", R(1, 3)}, {"b", R(1, 3)}, {"c", R(1)}, {"d", R(1)}, {"q", R(1, 2)}}, 5);
    check(Family::little_q_jacobi, {{"a", R(1, 3)}, {"b", R(2, 5)}, {"q", R(1, 4)}}, 5);
    check(Family::wall, {{"a", R(1, 3)}, {"q", R(1, 4)}}, 5);
    check(Family::discrete_q_hermite_1, {{"q", R(1, 3)}}, 7);
    check(Family::q_racah,
          {{"alpha", R(1, 2)}, {"beta", R(1, 2)}, {"gamma", R(729, 64) /* q^{-6} */},
           {"delta", R(-1)}, {"q", R(2, 3)}},
          5);
    check(Family::wilson, {{"a", R(1, 2)}, {"b", R(2, 3)}, {"c", R(1, 2)}, {"d", R(1)}}, 5);
    check(Family::continuous_hahn, {{"a", R(1, 2)}, {"b", R(2, 3)}, {"c", R(1, 2)}, {"d", R(2, 3)}},
          5);
    check(Family::continuous_dual_hahn, {{"a", R(3, 4)}, {"b", R(1, 2)}, {"c", R(1)}}, 5);
    check(Family::meixner_pollaczek, {{"lambda", R(3, 4)}, {"ephi", Scalar::i()}}, 6);
    check(Family::racah,
          {{"alpha", R(1, 3)}, {"beta", R(1, 4)}, {"gamma", R(-5)}, {"delta", R(1, 2)}}, 4);
    check(Family::hahn, {{"alpha", R(1, 3)}, {"beta", R(1, 4)}, {"N", R(6)}}, 6);
    check(Family::krawtchouk, {{"p", R(1, 3)}, {"N", R(7)}}, 7);
    check(Family::dual_hahn, {{"gamma", R(1, 3)}, {"delta", R(1, 4)}, {"N", R(6)}}, 6);
    // n_max = 0 trivially passes
    FamilySpec h{Family::hermite, {}, {}};
    CHECK(three_term_recurrence_check(h, 0).pass);
}

TEST_CASE("parity specializations") {
    auto has_parity = [](const Polynomial1& p, long n) {
        for (long i = 0; i <= p.degree(); ++i)
            if (!p.at(i).is_zero() && (i % 2 != n % 2)) return false;
        return true;
    };
    for (long n = 0; n <= 8; ++n) {
        CHECK(has_parity(fam::jacobi(n, R(1, 3), R(1, 3)), n));
        CHECK(has_parity(fam::hermite(n), n));
        CHECK(has_parity(fam::continuous_hahn(n, R(1, 2), R(2, 3), R(1, 2), R(2, 3)), n));
        CHECK(has_parity(fam::meixner_pollaczek(n, R(3, 4), Scalar::i()), n));
        // askey_wilson(a, b, -a, -b): SymLaurent index parity
        SymLaurent1 P = fam::askey_wilson_monic(n, R(1, 2), R(1, 3), R(-1, 2), R(-1, 3), R(1, 4));
        for (long k = 0; k <= P.degree(); ++k)
            if (!P.at(k).is_zero()) CHECK(k % 2 == n % 2);
        // q-racah in the Eq. (56) specialization is parity-definite in y
        if (n <= 5) {
            Scalar q = R(2, 3);
            Polynomial1 r = fam::q_racah(n, R(1, 2), R(1, 2), q.pow(-6), Scalar(-1), q);
            CHECK(has_parity(r, n));
        }
        // centered krawtchouk: K_n(u + N/2; 1/2, N) has parity in u
        long N = 8;
        Polynomial1 k = fam::krawtchouk(std::min(n, N), R(1, 2), N);
        Polynomial1 centered = k.compose(Polynomial1({R(N, 2), Scalar(1)}));
        CHECK(has_parity(centered, std::min(n, N)));
    }
}

TEST_CASE("make_polynomial normalizations and evaluate") {
    FamilySpec spec{Family::jacobi, {{"alpha", R(1, 3)}, {"beta", R(1, 4)}}, {}};
    Polynomial1 paper = make_poly1(spec, 4);
    spec.norm.kind = Normalization::monic;
    Polynomial1 monic = make_poly1(spec, 4);
    CHECK(monic.leading().is_one());
    CHECK(paper.leading() * monic == paper.leading() * (paper / paper.leading()));
    spec.norm.kind = Normalization::ratio_at_anchor;
    spec.norm.anchor = Scalar(1);
    Polynomial1 ratio = make_poly1(spec, 4);
    CHECK(ratio.evaluate(Scalar(1)).is_one());
    spec.norm.anchor = paper.evaluate(Scalar(0)).is_zero() ? Scalar(1) : Scalar(0);

    // evaluate(spec, n, x) equals construction + evaluation
    spec.norm = {};
    CHECK(evaluate(spec, 3, R(1, 5)) == make_poly1(spec, 3).evaluate(R(1, 5)));

    // anchor vanishes
    FamilySpec h{Family::hermite, {}, {Normalization::ratio_at_anchor, Scalar(0)}};
    CHECK_THROWS_AS(make_poly1(h, 1), AnchorVanishesError);
}
