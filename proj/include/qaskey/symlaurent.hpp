#ifndef QASKEY_SYMLAURENT_HPP
#define QASKEY_SYMLAURENT_HPP

#include <vector>

#include "qaskey/polynomial.hpp"

namespace qaskey {

/// Symmetric Laurent polynomial: constant + sum_{k>=1} c_k (z^k + z^{-k}).
/// Invariant under z -> 1/z by construction. Degree n restricted to
/// x = (z + 1/z)/2 is a Polynomial1 of degree n in x.
class SymLaurent1 {
  public:
    SymLaurent1() = default;
    explicit SymLaurent1(const Scalar& constant);

    /// Coefficient of (z^k + z^{-k}) for k >= 1, constant term for k = 0.
    const Scalar& at(long k) const;
    void set(long k, const Scalar& v);
    long degree() const;  // -1 for zero
    bool is_zero() const;

    SymLaurent1 operator-() const;
    friend SymLaurent1 operator+(const SymLaurent1& a, const SymLaurent1& b);
    friend SymLaurent1 operator-(const SymLaurent1& a, const SymLaurent1& b);
    friend SymLaurent1 operator*(const SymLaurent1& a, const SymLaurent1& b);
    friend SymLaurent1 operator*(const Scalar& s, const SymLaurent1& p);
    SymLaurent1 operator/(const Scalar& s) const;
    friend bool operator==(const SymLaurent1& a, const SymLaurent1& b);
    friend bool operator!=(const SymLaurent1& a, const SymLaurent1& b) { return !(a == b); }

    Scalar evaluate(const Scalar& z) const;

    /// Substitutes z -> z^2 (index doubling).
    SymLaurent1 substitute_z2() const;
    /// As a polynomial in x = (z + 1/z)/2, via Chebyshev expansion.
    Polynomial1 to_poly_x() const;
    static SymLaurent1 from_poly_x(const Polynomial1& p);
    /// As a polynomial in u = z + 1/z.
    static SymLaurent1 from_poly_u(const Polynomial1& p);

    /// Exact division by (z + 1/z); throws NotDivisibleError on remainder.
    SymLaurent1 divide_by_z_plus_zinv() const;

    std::string str() const;

  private:
    void trim();
    Scalar c0_;
    std::vector<Scalar> ck_;  // index k-1 holds coefficient of z^k + z^{-k}
};

struct SymSplit {
    Parity part;
    SymLaurent1 reduced;
};

/// Even case: q with q(z^2) = p(z). Odd case: r with (z + 1/z) r(z^2) = p(z).
SymSplit symlaurent_square_substitute(const SymLaurent1& p);

}  // namespace qaskey

#endif
