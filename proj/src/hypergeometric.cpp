#include "qaskey/hypergeometric.hpp"

namespace qaskey {

Scalar pochhammer(const Scalar& a, long n) {
    if (n < 0) throw ParameterOutOfRangeError("pochhammer needs n >= 0");
    Scalar out(1);
    Scalar t = a;
    for (long k = 0; k < n; ++k) {
        out = out * t;
        if (out.is_zero()) return out;
        t = t + Scalar(1);
    }
    return out;
}

Scalar q_pochhammer(const Scalar& a, const Scalar& q, long n) {
    if (n < 0) throw ParameterOutOfRangeError("q_pochhammer needs n >= 0");
    Scalar out(1);
    Scalar aq = a;
    for (long k = 0; k < n; ++k) {
        out = out * (Scalar(1) - aq);
        if (out.is_zero()) return out;
        aq = aq * q;
    }
    return out;
}

BoundedValue q_pochhammer_inf(const Scalar& a, const Scalar& q, long K, mpfr_prec_t prec) {
    if (K < 1) throw ParameterOutOfRangeError("q_pochhammer_inf needs K >= 1");
    if (!q.is_real()) throw ParameterOutOfRangeError("q_pochhammer_inf needs real q");
    if (!a.is_real()) throw ParameterOutOfRangeError("q_pochhammer_inf needs real a");
    Scalar qa = q.abs();
    if (!(qa < Scalar(1))) throw ParameterOutOfRangeError("q_pochhammer_inf needs |q| < 1");

    BigFloat val = BigFloat::from_rational(1, prec);
    BigFloat aq = a.to_bigfloat(prec);
    BigFloat qf = q.to_bigfloat(prec);
    BigFloat one = BigFloat::from_rational(1, prec);
    for (long k = 0; k < K; ++k) {
        val = val * (one - aq);
        aq = aq * qf;
    }
    // 2 |a| q^K / (1-q); exact when a, q rational.
    Scalar bound = Scalar(2) * a.abs() * qa.pow(K) / (Scalar(1) - qa);
    return BoundedValue{Scalar(val), bound};
}

namespace {

// Smallest termination index over nonpositive-integer upper parameters.
long hyp_termination_index(const std::vector<Scalar>& upper) {
    long best = -1;
    for (const auto& u : upper) {
        if (u.is_real() && u.is_nonpositive_integer()) {
            long m = -u.to_long();
            if (best < 0 || m < best) best = m;
        }
    }
    if (best < 0) throw NonTerminatingError("no upper parameter is a nonpositive integer");
    return best;
}

}  // namespace

Scalar hyp_terminating(const std::vector<Scalar>& upper, const std::vector<Scalar>& lower,
                       const Scalar& z) {
    long m = hyp_termination_index(upper);
    Scalar sum(0), term(1);
    for (long k = 0; k <= m; ++k) {
        sum += term;
        if (k == m) break;
        Scalar num(1);
        for (const auto& u : upper) num = num * (u + Scalar(k));
        if (num.is_zero()) break;  // all later terms vanish
        Scalar den(1);
        for (const auto& l : lower) den = den * (l + Scalar(k));
        den = den * Scalar(k + 1);
        if (den.is_zero())
            throw LowerParameterPoleError("lower parameter pole before termination at k=" +
                                          std::to_string(k + 1));
        term = term * z * num / den;
    }
    return sum;
}

Scalar qhyp_terminating(const std::vector<Scalar>& upper, const std::vector<Scalar>& lower,
                        const Scalar& q, const Scalar& z) {
    if (!q.is_exact()) throw ParameterOutOfRangeError("qhyp_terminating needs exact q");
    long m = -1;
    for (const auto& u : upper) {
        auto e = q_exponent_of(u, q);
        if (e && (m < 0 || *e < m)) m = *e;
    }
    if (m < 0) throw NonTerminatingError("no upper parameter equals q^{-m}");

    const long conv = 1 + static_cast<long>(lower.size()) - static_cast<long>(upper.size());
    Scalar sum(0), term(1);
    Scalar qk(1);  // q^k
    for (long k = 0; k <= m; ++k) {
        sum += term;
        if (k == m) break;
        Scalar num(1);
        for (const auto& u : upper) num = num * (Scalar(1) - u * qk);
        if (num.is_zero()) break;
        Scalar den(1);
        for (const auto& l : lower) den = den * (Scalar(1) - l * qk);
        den = den * (Scalar(1) - q * qk);
        if (den.is_zero())
            throw LowerParameterPoleError("lower parameter pole before termination at k=" +
                                          std::to_string(k + 1));
        Scalar step = z * num / den;
        // ((-1)^k q^{k(k-1)/2})^{1+s-r} advances by ((-1) q^k)^{1+s-r} per step.
        if (conv != 0) step = step * (-qk).pow(conv);
        term = term * step;
        qk = qk * q;
    }
    return sum;
}

Scalar factorial(long n) { return pochhammer(Scalar(1), n); }

Scalar binomial(long n, long k) {
    if (k < 0 || k > n) return Scalar(0);
    Scalar out(1);
    for (long j = 0; j < k; ++j) out = out * Scalar(n - j) / Scalar(j + 1);
    return out;
}

Scalar q_binomial(long n, long k, const Scalar& q) {
    if (k < 0 || k > n) return Scalar(0);
    return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k));
}

}  // namespace qaskey
