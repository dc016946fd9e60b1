#ifndef QASKEY_POLYNOMIAL_HPP
#define QASKEY_POLYNOMIAL_HPP

#include <vector>

#include "qaskey/scalar.hpp"

namespace qaskey {

enum class Parity { even, odd };

/// Dense univariate polynomial over Scalar. Trailing exact zeros are trimmed;
/// the zero polynomial has an empty coefficient list and degree -1.
class Polynomial1 {
  public:
    Polynomial1() = default;
    explicit Polynomial1(const Scalar& constant);
    explicit Polynomial1(std::vector<Scalar> coeffs);
    static Polynomial1 monomial(long degree, const Scalar& coeff = Scalar(1));
    static Polynomial1 x() { return monomial(1); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^i (zero beyond the stored range).
    const Scalar& at(long i) const;
    void set(long i, const Scalar& v);
    const Scalar& leading() const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Polynomial1 operator-() const;
    friend Polynomial1 operator+(const Polynomial1& a, const Polynomial1& b);
    friend Polynomial1 operator-(const Polynomial1& a, const Polynomial1& b);
    friend Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b);
    friend Polynomial1 operator*(const Scalar& s, const Polynomial1& p);
    Polynomial1 operator/(const Scalar& s) const;
    friend bool operator==(const Polynomial1& a, const Polynomial1& b);
    friend bool operator!=(const Polynomial1& a, const Polynomial1& b) { return !(a == b); }

    Scalar evaluate(const Scalar& x) const;
    Polynomial1 derivative() const;
    /// p(inner(x)); inner may be any polynomial.
    Polynomial1 compose(const Polynomial1& inner) const;
    /// Long division; throws on division by zero divisor.
    std::pair<Polynomial1, Polynomial1> divmod(const Polynomial1& divisor) const;

    std::string str(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Scalar> c_;
};

enum class QuadraticMap { x_to_x2, x_to_2x2_minus_1 };

/// p(x^2) or p(2x^2 - 1); degree doubles.
Polynomial1 substitute_quadratic(const Polynomial1& p, QuadraticMap map);

struct EvenOddSplit {
    Parity part;
    Polynomial1 reduced;
};

/// For even p returns q with q(x^2) = p(x); for odd p returns r with
/// x r(x^2) = p(x). Throws MixedParityError when both parities are present.
EvenOddSplit even_odd_split(const Polynomial1& p);

}  // namespace qaskey

#endif
