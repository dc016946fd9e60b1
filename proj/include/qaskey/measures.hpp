#ifndef QASKEY_MEASURES_HPP
#define QASKEY_MEASURES_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qaskey/families.hpp"
#include "qaskey/polynomial.hpp"

namespace qaskey {

/// Normalized moment functional on univariate polynomials: moment(0) = 1.
/// Truncated kinds report a per-moment truncation bound.
class MomentFunctional {
  public:
    virtual ~MomentFunctional() = default;
    virtual Scalar moment(long j) const = 0;
    virtual bool exact() const { return true; }
    virtual Scalar moment_bound(long) const { return Scalar(0); }

    Scalar apply(const Polynomial1& p) const;
    Scalar pair(const Polynomial1& f, const Polynomial1& g) const { return apply(f * g); }
};

/// Normalized j-th moment of (1-x)^alpha (1+x)^beta on [-1,1]; exact rational
/// for rational alpha, beta > -1, independent of the transcendental mass:
///   mu_j = sum_i C(j,i) 2^i (-1)^{j-i} (beta+1)_i / (alpha+beta+2)_i.
Scalar jacobi_moment(long j, const Scalar& alpha, const Scalar& beta);

class JacobiBetaRatio final : public MomentFunctional {
  public:
    JacobiBetaRatio(const Scalar& alpha, const Scalar& beta);
    Scalar moment(long j) const override;
    const Scalar& alpha() const { return alpha_; }
    const Scalar& beta() const { return beta_; }

  private:
    Scalar alpha_, beta_;
    mutable std::vector<Scalar> cache_;
};

class DiscreteFinite final : public MomentFunctional {
  public:
    /// Normalizes the weights to total mass 1; records whether all given
    /// weights were nonnegative (positivity is reported, not fatal).
    DiscreteFinite(std::vector<Scalar> nodes, std::vector<Scalar> weights);
    Scalar moment(long j) const override;
    const std::vector<Scalar>& nodes() const { return nodes_; }
    const std::vector<Scalar>& weights() const { return weights_; }
    bool positive() const { return positive_; }

  private:
    std::vector<Scalar> nodes_, weights_;
    bool positive_ = true;
};

/// Truncated Jackson integral on (0, 1]: L[f] ~ (1-q) sum_{k<K} f(q^k) w(q^k) q^k,
/// normalized. weight_sup bounds |w| on (0, q^K]; the reported moment bound is
/// the dropped tail sup |w| q^K (before normalization).
class QIntegral01 final : public MomentFunctional {
  public:
    QIntegral01(std::function<Scalar(const Scalar&)> weight, const Scalar& q, long K,
                const Scalar& weight_sup);
    Scalar moment(long j) const override;
    bool exact() const override { return false; }
    Scalar moment_bound(long j) const override;

  private:
    std::vector<Scalar> node_, mass_;  // mass = (1-q) w(q^k) q^k / norm
    Scalar q_;
    Scalar tail_;  // sup |w| q^K / norm
};

/// Functional defined by an arbitrary moment sequence (used for pushforward
/// views and derived measures). The callback owns whatever it captures.
class MomentView final : public MomentFunctional {
  public:
    MomentView(std::function<Scalar(long)> f, bool exact_flag = true,
               std::function<Scalar(long)> bound = {})
        : f_(std::move(f)), exact_(exact_flag), bound_(std::move(bound)) {}
    Scalar moment(long j) const override { return f_(j); }
    bool exact() const override { return exact_; }
    Scalar moment_bound(long j) const override { return bound_ ? bound_(j) : Scalar(0); }

  private:
    std::function<Scalar(long)> f_;
    bool exact_;
    std::function<Scalar(long)> bound_;
};

struct PushforwardPair {
    MomentView nu;   // moments nu_j = mu_{2j}
    MomentView nu1;  // moments of x d(nu), normalized: mu_{2j+2} / mu_2
};

/// Splits an even functional into the pushforward measure under x -> x^2 and
/// its x-weighted companion. Oddness is checked exactly on moments
/// 1, 3, ..., 2*check_degree-1; throws NotEvenError on failure.
PushforwardPair pushforward_split(const MomentFunctional& mu, long check_degree = 24);

/// Monic orthogonal polynomial of degree n from moments (dense Hankel solve).
Polynomial1 monic_orthogonal(const MomentFunctional& L, long n);

struct OrthReport {
    bool pass = true;
    long m = -1, n = -1;  // first failing pair
    Scalar witness;
    std::vector<Scalar> diagonal;  // <p_n, p_n> for n <= n_max
    std::string message;
};

/// Asserts <p_m, p_n> = 0 for m < n <= n_max, exactly, or within
/// tol * ||p_m|| ||p_n|| when tol is given (truncated functionals).
OrthReport orthogonality_check(const FamilySpec& generator, const MomentFunctional& L, long n_max,
                               std::optional<Scalar> tol = std::nullopt);
OrthReport orthogonality_check(const std::vector<Polynomial1>& polys, const MomentFunctional& L,
                               std::optional<Scalar> tol = std::nullopt);

/// Discrete q-Racah orthogonality data for the half-integer lattice used by
/// the even/odd quadratic pair, with weights
///   (q^j + q^{2N+1-j}) (a^2 q^2;q^2)_j (a^2 q^2;q^2)_{2N+1-j} /
///                      ((q^2;q^2)_j   (q^2;q^2)_{2N+1-j}),  j = 0..2N+1,
/// on nodes y_j = q^{-j} - q^{j-2N-1}. Positive iff -1 < q alpha < 1.
struct QRacahLattice {
    DiscreteFinite functional;
    std::vector<Scalar> nodes;
    bool positive;
};
QRacahLattice qracah_half_lattice_functional(long two_N, const Scalar& alpha, const Scalar& q);

/// Discrete weights w_x = q^{(2N+1)x} (1+q^{2x+1} g)/(1+q g) *
/// (q^{-2N}, q^2 g^2; q^2)_x / (q^2, q^{2N+4} g^2; q^2)_x on x = 0..N, with
/// the two node systems they serve: y_x = q^{-x} - g q^{x+1} and
/// Y_x = q^{-2x} + g^2 q^{2x+2}. Positive iff q^{-N} < g < q^{-N-2}.
struct QRacahNonstandardLattice {
    DiscreteFinite on_y;  // nodes y_x
    DiscreteFinite on_Y;  // nodes Y_x, same weights
    bool positive;
};
QRacahNonstandardLattice qracah_nonstandard_functional(long N, const Scalar& gamma,
                                                       const Scalar& q);

struct QIntegralDisplayReport {
    bool pass = false;
    Scalar lhs, rhs, bound;
};

/// Checks the Jackson-integral comparison
///   int_0^1 p(x) x^{-1/2} v(x) d_{q^2}x = (1+q) int_0^1 p(x^2) v(x^2) d_q x
/// for polynomial p and polynomial weight v, truncated at K terms on both
/// sides, within the combined geometric tail bound.
QIntegralDisplayReport verify_qintegral_display(const Polynomial1& p, const Polynomial1& v,
                                                const Scalar& q, long K);

}  // namespace qaskey

#endif
