#ifndef QASKEY_SCALAR_HPP
#define QASKEY_SCALAR_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace qaskey {

// ---------------------------------------------------------------------------
// Error hierarchy. Precondition violations throw; verification operations
// return reports instead (see verify.hpp and friends).
// ---------------------------------------------------------------------------
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonTerminatingError : Error { using Error::Error; };
struct LowerParameterPoleError : Error { using Error::Error; };
struct MixedParityError : Error { using Error::Error; };
struct NotDivisibleError : Error { using Error::Error; };
struct DegreeOutOfRangeError : Error { using Error::Error; };
struct ParameterConstraintError : Error { using Error::Error; };
struct ParameterOutOfRangeError : Error { using Error::Error; };
struct AnchorVanishesError : Error { using Error::Error; };
struct NotEvenError : Error { using Error::Error; };
struct SingularMomentMatrixError : Error { using Error::Error; };
struct ValidityViolatedError : Error { using Error::Error; };
struct BoundExceededError : Error { using Error::Error; };
struct HypothesisViolatedError : Error { using Error::Error; };
struct ConfigParseError : Error { using Error::Error; };
struct UnknownIdError : Error { using Error::Error; };

using Rational = mpq_class;

/// Arbitrary-precision binary float (MPFR). The precision is fixed when the
/// value is created and sticks with it; binary operations round to the larger
/// of the two operand precisions.
class BigFloat {
  public:
    BigFloat();
    explicit BigFloat(double x, mpfr_prec_t prec = default_precision());
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& r, mpfr_prec_t prec = default_precision());
    static mpfr_prec_t default_precision();
    static void set_default_precision(mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat operator-() const;
    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat exp() const;
    BigFloat log() const;
    /// x^e for real e, x > 0 (used for quadrature weights).
    BigFloat pow(const BigFloat& e) const;
    BigFloat pow_int(long e) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend bool operator==(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b);

    int cmp_rational(const Rational& r) const { return mpfr_cmp_q(v_, r.get_mpq_t()); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 20) const;

    /// Raw handle; weight/quadrature kernels use mpfr directly in hot loops.
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

/// Exact complex rational a + bi. Scalar keeps the invariant im != 0; a
/// Gaussian value whose imaginary part cancels demotes to a plain rational.
struct GaussianRational {
    Rational re;
    Rational im;
};

/// The one numeric currency: exact rational, exact complex rational, or
/// arbitrary-precision float. Arithmetic between exacts is exact; mixing an
/// exact with a BigFloat yields a BigFloat at the float's precision.
/// Values are immutable in spirit: every operation returns a fresh Scalar.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int n) : v_(Rational(n)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(const Rational& r) : v_(canonical(r)) {}
    Scalar(const BigFloat& f) : v_(f) {}

    static Scalar ratio(long num, long den);
    static Scalar complex(const Rational& re, const Rational& im);
    static Scalar i() { return complex(0, 1); }
    /// Parses "p", "-p", or "p/q". Exact rationals only.
    static Scalar parse_rational(const std::string& text);

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_gaussian() const { return std::holds_alternative<GaussianRational>(v_); }
    bool is_bigfloat() const { return std::holds_alternative<BigFloat>(v_); }
    bool is_exact() const { return !is_bigfloat(); }
    bool is_real() const { return !is_gaussian(); }

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }
    /// True when the value is an exact integer <= 0 (series termination test).
    bool is_nonpositive_integer() const;
    bool is_integer() const;
    long to_long() const;

    const Rational& rational() const;
    const BigFloat& bigfloat() const;
    Scalar real() const;
    Scalar imag() const;
    Scalar conj() const;
    /// |x|^2 for exact values; exact rational result.
    Rational norm_sq() const;
    Scalar abs() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long e) const;
    /// Promote to BigFloat at the given precision (exact values are rounded).
    BigFloat to_bigfloat(mpfr_prec_t prec = BigFloat::default_precision()) const;
    double to_double() const;
    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    /// Real total order; throws for Gaussian operands.
    friend bool operator<(const Scalar& a, const Scalar& b);
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  private:
    static std::variant<Rational, GaussianRational, BigFloat> canonical(const Rational& r);
    static Scalar make(const GaussianRational& g);
    std::variant<Rational, GaussianRational, BigFloat> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Base q with 0 < q < 1, optionally carrying an exact half base p with
/// p^2 = q so that q^{1/2} stays rational in p.
struct QBase {
    Scalar q;
    std::optional<Scalar> half_base;

    explicit QBase(const Scalar& q_in);
    /// Declares q = p^2 from the half base.
    static QBase from_half_base(const Scalar& p);
};

/// Smallest m >= 0 with value == q^{-m}, scanning up to max_m. Exact inputs
/// only; nullopt when no such m exists in range.
std::optional<long> q_exponent_of(const Scalar& value, const Scalar& q, long max_m = 512);

}  // namespace qaskey

#endif
