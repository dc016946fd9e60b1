#ifndef QASKEY_DOMINANCE_HPP
#define QASKEY_DOMINANCE_HPP

#include <map>
#include <vector>

#include "qaskey/polynomial.hpp"

namespace qaskey {

/// Index pair (m, l) with m >= l >= 0 under the dominance partial order
///   (m, l) <= (n, k)  iff  m <= n and m + l <= n + k.
/// The fixed total extension used everywhere for enumeration and linear
/// system assembly is graded lexicographic on (m + l, m).
struct DominanceIndex {
    long m = 0;
    long l = 0;

    bool valid() const { return m >= l && l >= 0; }
    friend bool operator==(const DominanceIndex& a, const DominanceIndex& b) {
        return a.m == b.m && a.l == b.l;
    }
    friend bool operator!=(const DominanceIndex& a, const DominanceIndex& b) { return !(a == b); }
};

bool dominance_leq(const DominanceIndex& a, const DominanceIndex& b);
bool dominance_lt(const DominanceIndex& a, const DominanceIndex& b);

/// Total extension: graded lex on (m + l, m).
struct TotalOrderLess {
    bool operator()(const DominanceIndex& a, const DominanceIndex& b) const {
        if (a.m + a.l != b.m + b.l) return a.m + a.l < b.m + b.l;
        if (a.m != b.m) return a.m < b.m;
        return a.l < b.l;
    }
};

/// All indices <= top in the dominance order, sorted by the total extension.
std::vector<DominanceIndex> downset(const DominanceIndex& top);

enum class Basis2 {
    monomial,   // index (m, l) <-> x^{m-l} y^l
    symmetric,  // index (m, l) <-> x^m y^l + x^l y^m  (x^m y^m once when m = l)
    orbit       // index (m, l) <-> W2-orbit sum of z1^{m} z2^{l}
};

/// Two-variable polynomial stored on dominance indices in one of the three
/// bases. Multiplication and composition are provided for the monomial basis;
/// the other bases convert through it.
class DominancePoly2 {
  public:
    DominancePoly2() = default;
    explicit DominancePoly2(Basis2 basis) : basis_(basis) {}

    Basis2 basis() const { return basis_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<DominanceIndex, Scalar, TotalOrderLess>& coeffs() const { return c_; }
    Scalar at(const DominanceIndex& idx) const;
    void set(const DominanceIndex& idx, const Scalar& v);
    /// Maximal index in the total extension; requires a nonzero polynomial.
    DominanceIndex leading_index() const;
    const Scalar& leading_coeff() const;
    bool is_monic() const;
    /// True when every support index is dominated by the leading index.
    bool support_dominated() const;

    DominancePoly2 operator-() const;
    friend DominancePoly2 operator+(const DominancePoly2& a, const DominancePoly2& b);
    friend DominancePoly2 operator-(const DominancePoly2& a, const DominancePoly2& b);
    friend DominancePoly2 operator*(const Scalar& s, const DominancePoly2& p);
    DominancePoly2 operator/(const Scalar& s) const;
    /// Monomial-basis product.
    friend DominancePoly2 operator*(const DominancePoly2& a, const DominancePoly2& b);
    friend bool operator==(const DominancePoly2& a, const DominancePoly2& b);
    friend bool operator!=(const DominancePoly2& a, const DominancePoly2& b) { return !(a == b); }

    /// Monomial-basis evaluation at (x, y).
    Scalar evaluate(const Scalar& x, const Scalar& y) const;
    /// Monomial-basis composition p(U(x,y), V(x,y)).
    DominancePoly2 compose(const DominancePoly2& u, const DominancePoly2& v) const;

    static DominancePoly2 mono(long xexp, long yexp, const Scalar& coeff = Scalar(1));
    static DominancePoly2 constant(const Scalar& v, Basis2 basis = Basis2::monomial);

    std::string str() const;

  private:
    Basis2 basis_ = Basis2::monomial;
    std::map<DominanceIndex, Scalar, TotalOrderLess> c_;
};

/// (xi, eta)-monomial polynomial to the symmetric basis via xi = x + y,
/// eta = xy. Leading index and leading coefficient are preserved.
DominancePoly2 sympoly_from_elementary(const DominancePoly2& p);
/// Exact inverse of sympoly_from_elementary.
DominancePoly2 elementary_from_sympoly(const DominancePoly2& p);

/// Symmetric-basis polynomial in (x, y) to the W2-orbit Laurent basis via
/// x_i = (z_i + 1/z_i)/2. Triangular with nonzero leading coefficient.
DominancePoly2 laurent_from_symmetric(const DominancePoly2& p);
/// Exact inverse of laurent_from_symmetric.
DominancePoly2 symmetric_from_laurent(const DominancePoly2& p);

/// Orbit of (m, l) under W2 = S2 x (Z2)^2 as distinct exponent pairs.
std::vector<std::pair<long, long>> w2_orbit(const DominanceIndex& idx);

/// Expansion of an orbit-basis polynomial into Laurent monomials
/// z1^{e1} z2^{e2} -> coefficient.
std::map<std::pair<long, long>, Scalar> orbit_to_laurent(const DominancePoly2& p);
/// Collects a W2-invariant Laurent expansion back into the orbit basis.
DominancePoly2 orbit_from_laurent(const std::map<std::pair<long, long>, Scalar>& f);

}  // namespace qaskey

#endif
