#include "qaskey/families.hpp"

#include <array>

#include "qaskey/hypergeometric.hpp"

namespace qaskey {

namespace {

struct NameEntry {
    Family family;
    const char* name;
};

constexpr std::array<NameEntry, 17> kNames{{
    {Family::jacobi, "jacobi"},
    {Family::laguerre, "laguerre"},
    {Family::hermite, "hermite"},
    {Family::askey_wilson, "askey_wilson"},
    {Family::big_q_jacobi, "big_q_jacobi"},
    {Family::little_q_jacobi, "little_q_jacobi"},
    {Family::discrete_q_hermite_1, "discrete_q_hermite_I"},
    {Family::wall, "wall"},
    {Family::q_racah, "q_racah"},
    {Family::wilson, "wilson"},
    {Family::continuous_hahn, "continuous_hahn"},
    {Family::continuous_dual_hahn, "continuous_dual_hahn"},
    {Family::meixner_pollaczek, "meixner_pollaczek"},
    {Family::racah, "racah"},
    {Family::hahn, "hahn"},
    {Family::krawtchouk, "krawtchouk"},
    {Family::dual_hahn, "dual_hahn"},
}};

void require_q(const Scalar& q) {
    if (!q.is_real() || !(q > Scalar(0)) || !(q < Scalar(1)))
        throw ParameterConstraintError("base q must satisfy 0 < q < 1");
}

long require_int_degree(const Scalar& s, const char* what) {
    if (!s.is_integer() || s.rational() < 0)
        throw ParameterConstraintError(std::string(what) + " must be a nonnegative integer");
    return s.to_long();
}

}  // namespace

std::string family_name(Family f) {
    for (const auto& e : kNames)
        if (e.family == f) return e.name;
    throw Error("unknown family");
}

Family family_from_name(const std::string& name) {
    for (const auto& e : kNames)
        if (name == e.name) return e.family;
    throw UnknownIdError("unknown family name: " + name);
}

const Scalar& FamilySpec::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
        throw ParameterConstraintError(family_name(family) + " needs parameter '" + name + "'");
    return it->second;
}

namespace fam {

Polynomial1 jacobi(long n, const Scalar& alpha, const Scalar& beta) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    // ((alpha+1)_n / n!) 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)
    Scalar t = pochhammer(alpha + Scalar(1), n) / factorial(n);
    Polynomial1 u({Scalar::ratio(1, 2), Scalar::ratio(-1, 2)});  // (1-x)/2
    Polynomial1 upow(Scalar(1));
    Polynomial1 acc;
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * upow;
        if (k == n) break;
        Scalar num = (Scalar(-n) + Scalar(k)) * (Scalar(n) + alpha + beta + Scalar(1 + k));
        if (num.is_zero()) break;
        Scalar den = (alpha + Scalar(1 + k)) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("jacobi lower parameter pole");
        t = t * num / den;
        upow = upow * u;
    }
    return acc;
}

Polynomial1 laguerre(long n, const Scalar& alpha) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    Scalar t = pochhammer(alpha + Scalar(1), n) / factorial(n);
    Polynomial1 acc;
    for (long k = 0; k <= n; ++k) {
        acc.set(k, acc.at(k) + t);
        if (k == n) break;
        Scalar num = Scalar(-n) + Scalar(k);
        if (num.is_zero()) break;
        Scalar den = (alpha + Scalar(1 + k)) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("laguerre lower parameter pole");
        t = t * num / den;
    }
    return acc;
}

Polynomial1 hermite(long n) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    // (2x)^n 2F0(-n/2, -(n-1)/2; -; -x^{-2})
    Scalar t = Scalar(2).pow(n);
    Polynomial1 acc;
    Scalar a = Scalar::ratio(-n, 2), b = Scalar::ratio(-(n - 1), 2);
    for (long k = 0; 2 * k <= n; ++k) {
        acc.set(n - 2 * k, t);
        Scalar num = (a + Scalar(k)) * (b + Scalar(k)) * Scalar(-1);
        if (num.is_zero()) break;
        t = t * num / Scalar(k + 1);
    }
    return acc;
}

SymLaurent1 askey_wilson_monic(long n, Scalar a, Scalar b, Scalar c, Scalar d, const Scalar& q) {
    require_q(q);
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    // The basic hypergeometric form needs a nonzero first parameter;
    // P_n is symmetric in (a,b,c,d), so rotate one in if available.
    if (a.is_zero()) {
        if (!b.is_zero()) std::swap(a, b);
        else if (!c.is_zero()) std::swap(a, c);
        else if (!d.is_zero()) std::swap(a, d);
    }
    if (a.is_zero()) {
        // Continuous q-Hermite: P_n(z) = sum_k qbinom(n,k) z^{n-2k}.
        SymLaurent1 out;
        for (long k = 0; 2 * k <= n; ++k) {
            Scalar coeff = q_binomial(n, k, q);
            long e = n - 2 * k;
            out.set(e, coeff);
        }
        return out;
    }
    Scalar abcd = a * b * c * d;
    // sum_k t_k Phi_k(u), Phi_k = prod_{j<k} ((1 + a^2 q^{2j}) - a q^j u)
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1), qk(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(1) - q.pow(-n) * qk) * (Scalar(1) - abcd * q.pow(n - 1) * qk) * q;
        if (num.is_zero()) break;
        Scalar den = (Scalar(1) - q * qk) * (Scalar(1) - a * b * qk) * (Scalar(1) - a * c * qk) *
                     (Scalar(1) - a * d * qk);
        if (den.is_zero()) throw LowerParameterPoleError("askey_wilson lower parameter pole");
        t = t * num / den;
        Polynomial1 lin({Scalar(1) + a * a * qk * qk, -(a * qk)});
        phi = phi * lin;
        qk = qk * q;
    }
    Scalar pref = q_pochhammer(a * b, q, n) * q_pochhammer(a * c, q, n) * q_pochhammer(a * d, q, n);
    Scalar denom = a.pow(n) * q_pochhammer(abcd * q.pow(n - 1), q, n);
    if (denom.is_zero()) throw ParameterConstraintError("askey_wilson monic prefactor vanishes");
    return SymLaurent1::from_poly_u((pref / denom) * acc);
}

Polynomial1 big_q_jacobi(long n, const Scalar& a, const Scalar& b, const Scalar& c,
                         const Scalar& d, const Scalar& q) {
    require_q(q);
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    if (c.is_zero()) throw ParameterConstraintError("big_q_jacobi needs c != 0");
    // 3phi2(q^{-n}, q^{n+1} a b, q a c^{-1} x; q a, -q a c^{-1} d; q, q)
    Scalar ac = a / c;
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1), qk(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(1) - q.pow(-n) * qk) * (Scalar(1) - a * b * q.pow(n + 1) * qk) * q;
        if (num.is_zero()) break;
        Scalar den = (Scalar(1) - q * qk) * (Scalar(1) - a * q * qk) *
                     (Scalar(1) + ac * d * q * qk);
        if (den.is_zero()) throw LowerParameterPoleError("big_q_jacobi lower parameter pole");
        t = t * num / den;
        phi = phi * Polynomial1({Scalar(1), -(ac * q * qk)});  // (1 - q^{k+1} a c^{-1} x)
        qk = qk * q;
    }
    return acc;
}

Polynomial1 little_q_jacobi(long n, const Scalar& a, const Scalar& b, const Scalar& q) {
    require_q(q);
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    // 2phi1(q^{-n}, q^{n+1} a b; q a; q, q x)
    Polynomial1 acc;
    Scalar t(1), qk(1);
    for (long k = 0; k <= n; ++k) {
        acc.set(k, t * q.pow(k));
        if (k == n) break;
        Scalar num = (Scalar(1) - q.pow(-n) * qk) * (Scalar(1) - a * b * q.pow(n + 1) * qk);
        if (num.is_zero()) break;
        Scalar den = (Scalar(1) - q * qk) * (Scalar(1) - a * q * qk);
        if (den.is_zero()) throw LowerParameterPoleError("little_q_jacobi lower parameter pole");
        t = t * num / den;
        qk = qk * q;
    }
    return acc;
}

Polynomial1 discrete_q_hermite_1(long n, const Scalar& q) {
    require_q(q);
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    // q^{n(n-1)/2} 2phi1(q^{-n}, x^{-1}; 0; q, -q x); the x-carrying factors
    // combine to (x^{-1};q)_k (-q x)^k = (-q)^k prod_{j<k} (x - q^j).
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1), qk(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(1) - q.pow(-n) * qk) * (-q);
        if (num.is_zero()) break;
        Scalar den = Scalar(1) - q * qk;
        t = t * num / den;
        phi = phi * Polynomial1({-qk, Scalar(1)});  // (x - q^k)
        qk = qk * q;
    }
    return q.pow(n * (n - 1) / 2) * acc;
}

long q_racah_degree_bound(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                          const Scalar& delta, const Scalar& q) {
    long best = -1;
    for (const Scalar& s : {alpha * q, beta * delta * q, gamma * q}) {
        auto e = q_exponent_of(s, q);
        if (e && (best < 0 || *e < best)) best = *e;
    }
    if (best < 0)
        throw ParameterConstraintError(
            "q_racah needs alpha q, beta delta q, or gamma q equal to q^{-N}");
    return best;
}

Polynomial1 q_racah(long n, const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                    const Scalar& delta, const Scalar& q) {
    require_q(q);
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    long N = q_racah_degree_bound(alpha, beta, gamma, delta, q);
    if (n > N) throw DegreeOutOfRangeError("q_racah degree exceeds lattice size N=" +
                                           std::to_string(N));
    // 4phi3 in the lattice variable y = q^{-x} + gamma delta q^{x+1}:
    // (q^{-x};q)_k (gamma delta q^{x+1};q)_k = prod_{j<k} (1 - q^j y + gamma delta q^{2j+1}).
    Scalar gd = gamma * delta;
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1), qk(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(1) - q.pow(-n) * qk) * (Scalar(1) - alpha * beta * q.pow(n + 1) * qk) * q;
        if (num.is_zero()) break;
        Scalar den = (Scalar(1) - q * qk) * (Scalar(1) - alpha * q * qk) *
                     (Scalar(1) - beta * delta * q * qk) * (Scalar(1) - gamma * q * qk);
        if (den.is_zero()) throw LowerParameterPoleError("q_racah lower parameter pole");
        t = t * num / den;
        phi = phi * Polynomial1({Scalar(1) + gd * q * qk * qk, -qk});
        qk = qk * q;
    }
    return acc;
}

Polynomial1 wilson(long n, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    // W_n(t) = (a+b)_n (a+c)_n (a+d)_n 4F3(-n, n+a+b+c+d-1, a+ix, a-ix; a+b, a+c, a+d; 1)
    // with (a+ix)_k (a-ix)_k = prod_{j<k} ((a+j)^2 + t), t = x^2.
    Scalar abcd1 = a + b + c + d - Scalar(1);
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(-n) + Scalar(k)) * (Scalar(n) + abcd1 + Scalar(k));
        if (num.is_zero()) break;
        Scalar den = (a + b + Scalar(k)) * (a + c + Scalar(k)) * (a + d + Scalar(k)) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("wilson lower parameter pole");
        t = t * num / den;
        Scalar aj = a + Scalar(k);
        phi = phi * Polynomial1({aj * aj, Scalar(1)});  // ((a+k)^2 + t)
    }
    Scalar pref = pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n);
    return pref * acc;
}

Polynomial1 continuous_hahn(long n, const Scalar& a, const Scalar& b, const Scalar& c,
                            const Scalar& d) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    // p_n(x) = i^n ((a+c)_n (a+d)_n / n!) 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1)
    Scalar I = Scalar::i();
    Scalar abcd1 = a + b + c + d - Scalar(1);
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(-n) + Scalar(k)) * (Scalar(n) + abcd1 + Scalar(k));
        if (num.is_zero()) break;
        Scalar den = (a + c + Scalar(k)) * (a + d + Scalar(k)) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("continuous_hahn lower parameter pole");
        t = t * num / den;
        phi = phi * Polynomial1({a + Scalar(k), I});  // (a + k + i x)
    }
    Scalar pref = I.pow(n) * pochhammer(a + c, n) * pochhammer(a + d, n) / factorial(n);
    return pref * acc;
}

Polynomial1 continuous_dual_hahn(long n, const Scalar& a, const Scalar& b, const Scalar& c) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    // S_n(t) = (a+b)_n (a+c)_n 3F2(-n, a+ix, a-ix; a+b, a+c; 1), t = x^2.
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = Scalar(-n) + Scalar(k);
        if (num.is_zero()) break;
        Scalar den = (a + b + Scalar(k)) * (a + c + Scalar(k)) * Scalar(k + 1);
        if (den.is_zero())
            throw LowerParameterPoleError("continuous_dual_hahn lower parameter pole");
        t = t * num / den;
        Scalar aj = a + Scalar(k);
        phi = phi * Polynomial1({aj * aj, Scalar(1)});
    }
    return pochhammer(a + b, n) * pochhammer(a + c, n) * acc;
}

Polynomial1 meixner_pollaczek(long n, const Scalar& lambda, const Scalar& ephi) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    if (ephi.norm_sq() != Rational(1))
        throw ParameterConstraintError("meixner_pollaczek needs |e^{i phi}| = 1 exactly");
    // P_n^{(lambda)}(x; phi) = ((2 lambda)_n / n!) e^{i n phi}
    //                          2F1(-n, lambda + i x; 2 lambda; 1 - e^{-2 i phi})
    Scalar I = Scalar::i();
    Scalar z = Scalar(1) - ephi.conj() * ephi.conj();
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(-n) + Scalar(k)) * z;
        if (num.is_zero()) break;
        Scalar den = (Scalar(2) * lambda + Scalar(k)) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("meixner_pollaczek lower parameter pole");
        t = t * num / den;
        phi = phi * Polynomial1({lambda + Scalar(k), I});
    }
    Scalar pref = pochhammer(Scalar(2) * lambda, n) / factorial(n) * ephi.pow(n);
    return pref * acc;
}

long racah_degree_bound(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                        const Scalar& delta) {
    long best = -1;
    for (const Scalar& s : {alpha + Scalar(1), beta + delta + Scalar(1), gamma + Scalar(1)}) {
        if (s.is_nonpositive_integer()) {
            long m = -s.to_long();
            if (best < 0 || m < best) best = m;
        }
    }
    if (best < 0)
        throw ParameterConstraintError(
            "racah needs alpha+1, beta+delta+1, or gamma+1 equal to -N");
    return best;
}

Polynomial1 racah(long n, const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                  const Scalar& delta) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    long N = racah_degree_bound(alpha, beta, gamma, delta);
    if (n > N) throw DegreeOutOfRangeError("racah degree exceeds lattice size N=" +
                                           std::to_string(N));
    // 4F3 in the lattice variable y = x(x+gamma+delta+1):
    // (-x)_k (x+gamma+delta+1)_k = prod_{j<k} (j(j+gamma+delta+1) - y).
    Scalar gd1 = gamma + delta + Scalar(1);
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(-n) + Scalar(k)) * (Scalar(n) + alpha + beta + Scalar(1 + k));
        if (num.is_zero()) break;
        Scalar den = (alpha + Scalar(1 + k)) * (beta + delta + Scalar(1 + k)) *
                     (gamma + Scalar(1 + k)) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("racah lower parameter pole");
        t = t * num / den;
        phi = phi * Polynomial1({Scalar(k) * (Scalar(k) + gd1), Scalar(-1)});
    }
    return acc;
}

Polynomial1 hahn(long n, const Scalar& alpha, const Scalar& beta, long N) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    if (N < 0) throw ParameterConstraintError("hahn needs N >= 0");
    if (n > N) throw DegreeOutOfRangeError("hahn degree exceeds N");
    // 3F2(-n, n+alpha+beta+1, -x; alpha+1, -N; 1)
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(-n) + Scalar(k)) * (Scalar(n) + alpha + beta + Scalar(1 + k));
        if (num.is_zero()) break;
        Scalar den = (alpha + Scalar(1 + k)) * Scalar(-N + k) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("hahn lower parameter pole");
        t = t * num / den;
        phi = phi * Polynomial1({Scalar(k), Scalar(-1)});  // (k - x)
    }
    return acc;
}

Polynomial1 krawtchouk(long n, const Scalar& p, long N) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    if (N < 0) throw ParameterConstraintError("krawtchouk needs N >= 0");
    if (n > N) throw DegreeOutOfRangeError("krawtchouk degree exceeds N");
    if (p.is_zero()) throw ParameterConstraintError("krawtchouk needs p != 0");
    // 2F1(-n, -x; -N; 1/p)
    Scalar pinv = p.inverse();
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = (Scalar(-n) + Scalar(k)) * pinv;
        if (num.is_zero()) break;
        Scalar den = Scalar(-N + k) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("krawtchouk lower parameter pole");
        t = t * num / den;
        phi = phi * Polynomial1({Scalar(k), Scalar(-1)});
    }
    return acc;
}

Polynomial1 dual_hahn(long n, const Scalar& gamma, const Scalar& delta, long N) {
    if (n < 0) throw DegreeOutOfRangeError("degree must be >= 0");
    if (N < 0) throw ParameterConstraintError("dual_hahn needs N >= 0");
    if (n > N) throw DegreeOutOfRangeError("dual_hahn degree exceeds N");
    // 3F2(-n, -x, x+gamma+delta+1; gamma+1, -N; 1) in y = x(x+gamma+delta+1)
    Scalar gd1 = gamma + delta + Scalar(1);
    Polynomial1 phi(Scalar(1));
    Polynomial1 acc;
    Scalar t(1);
    for (long k = 0; k <= n; ++k) {
        acc = acc + t * phi;
        if (k == n) break;
        Scalar num = Scalar(-n) + Scalar(k);
        if (num.is_zero()) break;
        Scalar den = (gamma + Scalar(1 + k)) * Scalar(-N + k) * Scalar(k + 1);
        if (den.is_zero()) throw LowerParameterPoleError("dual_hahn lower parameter pole");
        t = t * num / den;
        phi = phi * Polynomial1({Scalar(k) * (Scalar(k) + gd1), Scalar(-1)});
    }
    return acc;
}

}  // namespace fam

namespace {

PolyOrLaurent construct(const FamilySpec& s, long n) {
    switch (s.family) {
        case Family::jacobi:
            return fam::jacobi(n, s.param("alpha"), s.param("beta"));
        case Family::laguerre:
            return fam::laguerre(n, s.param("alpha"));
        case Family::hermite:
            return fam::hermite(n);
        case Family::askey_wilson:
            return fam::askey_wilson_monic(n, s.param("a"), s.param("b"), s.param("c"),
                                           s.param("d"), s.param("q"));
        case Family::big_q_jacobi:
            return fam::big_q_jacobi(n, s.param("a"), s.param("b"), s.param("c"), s.param("d"),
                                     s.param("q"));
        case Family::little_q_jacobi:
            return fam::little_q_jacobi(n, s.param("a"), s.param("b"), s.param("q"));
        case Family::wall:
            return fam::little_q_jacobi(n, s.param("a"), Scalar(0), s.param("q"));
        case Family::discrete_q_hermite_1:
            return fam::discrete_q_hermite_1(n, s.param("q"));
        case Family::q_racah:
            return fam::q_racah(n, s.param("alpha"), s.param("beta"), s.param("gamma"),
                                s.param("delta"), s.param("q"));
        case Family::wilson:
            return fam::wilson(n, s.param("a"), s.param("b"), s.param("c"), s.param("d"));
        case Family::continuous_hahn:
            return fam::continuous_hahn(n, s.param("a"), s.param("b"), s.param("c"), s.param("d"));
        case Family::continuous_dual_hahn:
            return fam::continuous_dual_hahn(n, s.param("a"), s.param("b"), s.param("c"));
        case Family::meixner_pollaczek:
            return fam::meixner_pollaczek(n, s.param("lambda"), s.param("ephi"));
        case Family::racah:
            return fam::racah(n, s.param("alpha"), s.param("beta"), s.param("gamma"),
                              s.param("delta"));
        case Family::hahn:
            return fam::hahn(n, s.param("alpha"), s.param("beta"),
                             require_int_degree(s.param("N"), "N"));
        case Family::krawtchouk:
            return fam::krawtchouk(n, s.param("p"), require_int_degree(s.param("N"), "N"));
        case Family::dual_hahn:
            return fam::dual_hahn(n, s.param("gamma"), s.param("delta"),
                                  require_int_degree(s.param("N"), "N"));
    }
    throw Error("unreachable family dispatch");
}

}  // namespace

PolyOrLaurent make_polynomial(const FamilySpec& spec, long n) {
    PolyOrLaurent raw = construct(spec, n);
    if (spec.norm.kind == Normalization::paper) return raw;
    if (std::holds_alternative<Polynomial1>(raw)) {
        Polynomial1 p = std::get<Polynomial1>(raw);
        if (spec.norm.kind == Normalization::monic) {
            if (p.is_zero()) throw Error("cannot normalize the zero polynomial");
            return p / p.leading();
        }
        Scalar v = p.evaluate(spec.norm.anchor);
        if (v.is_zero()) throw AnchorVanishesError("anchor value vanishes");
        return p / v;
    }
    SymLaurent1 p = std::get<SymLaurent1>(raw);
    if (spec.norm.kind == Normalization::monic) {
        if (p.is_zero()) throw Error("cannot normalize the zero polynomial");
        long d = p.degree();
        return p / p.at(d);
    }
    Scalar v = p.evaluate(spec.norm.anchor);
    if (v.is_zero()) throw AnchorVanishesError("anchor value vanishes");
    return p / v;
}

Polynomial1 make_poly1(const FamilySpec& spec, long n) {
    PolyOrLaurent p = make_polynomial(spec, n);
    if (!std::holds_alternative<Polynomial1>(p))
        throw Error("family returns a symmetric Laurent polynomial");
    return std::get<Polynomial1>(p);
}

SymLaurent1 make_symlaurent(const FamilySpec& spec, long n) {
    PolyOrLaurent p = make_polynomial(spec, n);
    if (!std::holds_alternative<SymLaurent1>(p))
        throw Error("family returns an ordinary polynomial");
    return std::get<SymLaurent1>(p);
}

Scalar evaluate(const FamilySpec& spec, long n, const Scalar& point) {
    PolyOrLaurent p = make_polynomial(spec, n);
    if (std::holds_alternative<Polynomial1>(p)) return std::get<Polynomial1>(p).evaluate(point);
    return std::get<SymLaurent1>(p).evaluate(point);
}

Scalar lattice_value(const FamilySpec& spec, const Scalar& x) {
    switch (spec.family) {
        case Family::q_racah: {
            const Scalar& q = spec.param("q");
            if (!x.is_integer() || x.rational() < 0)
                throw ParameterOutOfRangeError("q_racah lattice point must be integer x >= 0");
            long xi = x.to_long();
            return q.pow(-xi) + spec.param("gamma") * spec.param("delta") * q.pow(xi + 1);
        }
        case Family::racah:
        case Family::dual_hahn: {
            Scalar gd1 = spec.param("gamma") + spec.param("delta") + Scalar(1);
            return x * (x + gd1);
        }
        default:
            return x;
    }
}

long max_degree(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::hahn:
        case Family::krawtchouk:
        case Family::dual_hahn:
            return require_int_degree(spec.param("N"), "N");
        case Family::q_racah:
            return fam::q_racah_degree_bound(spec.param("alpha"), spec.param("beta"),
                                             spec.param("gamma"), spec.param("delta"),
                                             spec.param("q"));
        case Family::racah:
            return fam::racah_degree_bound(spec.param("alpha"), spec.param("beta"),
                                           spec.param("gamma"), spec.param("delta"));
        default:
            return -1;
    }
}

RecurrenceReport three_term_recurrence_check(const FamilySpec& spec, long n_max) {
    RecurrenceReport rep;
    if (n_max <= 0) return rep;
    long cap = max_degree(spec);
    if (cap >= 0) n_max = std::min(n_max, cap);
    std::vector<Polynomial1> p;
    for (long n = 0; n <= n_max; ++n) {
        PolyOrLaurent pol = make_polynomial(spec, n);
        if (std::holds_alternative<Polynomial1>(pol))
            p.push_back(std::get<Polynomial1>(pol));
        else
            p.push_back(std::get<SymLaurent1>(pol).to_poly_x());
        if (p.back().degree() != n) {
            rep.pass = false;
            rep.first_failure = n;
            rep.message = "degree mismatch at n=" + std::to_string(n);
            return rep;
        }
    }
    for (long n = 1; n + 1 <= n_max; ++n) {
        Polynomial1 xpn = Polynomial1::x() * p[n];
        // Solve A, B, C from the top three coefficient rows, then demand the
        // full identity x p_n = A p_{n+1} + B p_n + C p_{n-1}.
        Scalar A = xpn.at(n + 1) / p[n + 1].at(n + 1);
        Scalar B = (xpn.at(n) - A * p[n + 1].at(n)) / p[n].at(n);
        Scalar C =
            (xpn.at(n - 1) - A * p[n + 1].at(n - 1) - B * p[n].at(n - 1)) / p[n - 1].at(n - 1);
        Polynomial1 rhs = A * p[n + 1] + B * p[n] + C * p[n - 1];
        if (xpn != rhs) {
            rep.pass = false;
            rep.first_failure = n;
            rep.message = "three-term recurrence fails at n=" + std::to_string(n);
            return rep;
        }
    }
    return rep;
}

}  // namespace qaskey
