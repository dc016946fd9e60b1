#ifndef QASKEY_FAMILIES_HPP
#define QASKEY_FAMILIES_HPP

#include <map>
#include <string>
#include <variant>

#include "qaskey/polynomial.hpp"
#include "qaskey/symlaurent.hpp"

namespace qaskey {

enum class Family {
    jacobi,
    laguerre,
    hermite,
    askey_wilson,
    big_q_jacobi,
    little_q_jacobi,
    discrete_q_hermite_1,
    wall,
    q_racah,
    wilson,
    continuous_hahn,
    continuous_dual_hahn,
    meixner_pollaczek,
    racah,
    hahn,
    krawtchouk,
    dual_hahn,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct Normalization {
    enum Kind { paper, monic, ratio_at_anchor } kind = paper;
    Scalar anchor;  // evaluation point for ratio_at_anchor
};

/// A family member request: which family, named parameters, and the
/// normalization to apply. Families defined on quadratic lattices (q-Racah,
/// Racah, dual Hahn) are polynomials in the lattice variable; use
/// lattice_value to map a gridpoint x to that variable.
struct FamilySpec {
    Family family;
    std::map<std::string, Scalar> params;
    Normalization norm;

    const Scalar& param(const std::string& name) const;
    bool has(const std::string& name) const { return params.count(name) > 0; }
};

using PolyOrLaurent = std::variant<Polynomial1, SymLaurent1>;

/// Constructs the degree-n member with exact coefficients in the requested
/// normalization. Askey-Wilson returns a SymLaurent1 (monic in paper form),
/// everything else a Polynomial1 in the family's natural variable.
PolyOrLaurent make_polynomial(const FamilySpec& spec, long n);
Polynomial1 make_poly1(const FamilySpec& spec, long n);
SymLaurent1 make_symlaurent(const FamilySpec& spec, long n);

/// Pointwise evaluation; equals make_polynomial followed by evaluation.
Scalar evaluate(const FamilySpec& spec, long n, const Scalar& point);

/// Natural-variable value at gridpoint x (identity for non-lattice families).
Scalar lattice_value(const FamilySpec& spec, const Scalar& x);

/// Largest admissible degree, or -1 when unbounded.
long max_degree(const FamilySpec& spec);

struct RecurrenceReport {
    bool pass = true;
    long first_failure = -1;
    std::string message;
};

/// Checks that the constructed sequence satisfies a three-term recurrence
/// x p_n = A_n p_{n+1} + B_n p_n + C_n p_{n-1} with scalar coefficients,
/// exactly, for 1 <= n < n_max. The coefficients are solved from the top
/// three coefficient rows and the full polynomial identity is then asserted,
/// so any single corrupted coefficient in the construction is caught.
RecurrenceReport three_term_recurrence_check(const FamilySpec& spec, long n_max);

// Direct constructors behind make_polynomial. All exact.
namespace fam {
Polynomial1 jacobi(long n, const Scalar& alpha, const Scalar& beta);
Polynomial1 laguerre(long n, const Scalar& alpha);
Polynomial1 hermite(long n);
SymLaurent1 askey_wilson_monic(long n, Scalar a, Scalar b, Scalar c, Scalar d, const Scalar& q);
Polynomial1 big_q_jacobi(long n, const Scalar& a, const Scalar& b, const Scalar& c,
                         const Scalar& d, const Scalar& q);
Polynomial1 little_q_jacobi(long n, const Scalar& a, const Scalar& b, const Scalar& q);
Polynomial1 discrete_q_hermite_1(long n, const Scalar& q);
Polynomial1 q_racah(long n, const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                    const Scalar& delta, const Scalar& q);
Polynomial1 wilson(long n, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
Polynomial1 continuous_hahn(long n, const Scalar& a, const Scalar& b, const Scalar& c,
                            const Scalar& d);
Polynomial1 continuous_dual_hahn(long n, const Scalar& a, const Scalar& b, const Scalar& c);
Polynomial1 meixner_pollaczek(long n, const Scalar& lambda, const Scalar& ephi);
Polynomial1 racah(long n, const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                  const Scalar& delta);
Polynomial1 hahn(long n, const Scalar& alpha, const Scalar& beta, long N);
Polynomial1 krawtchouk(long n, const Scalar& p, long N);
Polynomial1 dual_hahn(long n, const Scalar& gamma, const Scalar& delta, long N);

/// Degree bound for q-Racah: smallest m with alpha q, beta delta q, or
/// gamma q equal to q^{-m}. Throws when none terminates.
long q_racah_degree_bound(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                          const Scalar& delta, const Scalar& q);
/// Degree bound for Racah: smallest nonnegative -(alpha+1), -(beta+delta+1),
/// or -(gamma+1) over the integer ones. Throws when none terminates.
long racah_degree_bound(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                        const Scalar& delta);
}  // namespace fam

}  // namespace qaskey

#endif
