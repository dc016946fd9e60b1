#ifndef QASKEY_LINALG_HPP
#define QASKEY_LINALG_HPP

#include <vector>

#include "qaskey/scalar.hpp"

namespace qaskey {

/// Dense Gaussian elimination over Scalar. Exact entries pivot on the first
/// nonzero; BigFloat entries pivot on the largest magnitude. Throws
/// SingularMomentMatrixError when no pivot is available.
std::vector<Scalar> solve_linear_system(std::vector<std::vector<Scalar>> m,
                                        std::vector<Scalar> rhs);

}  // namespace qaskey

#endif
