#ifndef QASKEY_HYPERGEOMETRIC_HPP
#define QASKEY_HYPERGEOMETRIC_HPP

#include <vector>

#include "qaskey/scalar.hpp"

namespace qaskey {

/// Shifted factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Scalar pochhammer(const Scalar& a, long n);

/// (a;q)_n = prod_{k<n} (1 - a q^k); (a;q)_0 = 1.
Scalar q_pochhammer(const Scalar& a, const Scalar& q, long n);

struct BoundedValue {
    Scalar value;
    Scalar bound;  // bound on the relative truncation error
};

/// Truncated (a;q)_infinity = prod_{k<K} (1 - a q^k) at the given float
/// precision, together with the relative truncation bound 2|a|q^K/(1-q)
/// (valid while |a| q^K / (1-q) <= 1/2). Requires |q| < 1 and K >= 1.
BoundedValue q_pochhammer_inf(const Scalar& a, const Scalar& q, long K,
                              mpfr_prec_t prec = BigFloat::default_precision());

/// Terminating hypergeometric sum rFs(upper; lower; z). Some upper parameter
/// must be a nonpositive integer; a lower-parameter zero hit before the
/// series terminates raises LowerParameterPoleError.
Scalar hyp_terminating(const std::vector<Scalar>& upper, const std::vector<Scalar>& lower,
                       const Scalar& z);

/// Terminating basic hypergeometric sum rphis(upper; lower; q, z) in the
/// Gasper–Rahman convention: term k carries ((-1)^k q^{k(k-1)/2})^{1+s-r}.
/// Some upper parameter must equal q^{-m} with m >= 0.
Scalar qhyp_terminating(const std::vector<Scalar>& upper, const std::vector<Scalar>& lower,
                        const Scalar& q, const Scalar& z);

/// n! as an exact Scalar.
Scalar factorial(long n);

/// Exact binomial coefficient C(n, k).
Scalar binomial(long n, long k);

/// Gaussian binomial [n choose k]_q, exact in q.
Scalar q_binomial(long n, long k, const Scalar& q);

}  // namespace qaskey

#endif
