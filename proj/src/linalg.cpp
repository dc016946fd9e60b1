#include "qaskey/linalg.hpp"

namespace qaskey {

std::vector<Scalar> solve_linear_system(std::vector<std::vector<Scalar>> m,
                                        std::vector<Scalar> rhs) {
    const size_t n = m.size();
    if (rhs.size() != n) throw Error("linear system shape mismatch");
    for (auto& row : m)
        if (row.size() != n) throw Error("linear system shape mismatch");

    for (size_t col = 0; col < n; ++col) {
        // Pivot selection.
        size_t piv = col;
        bool found = false;
        bool approximate = false;
        for (size_t r = col; r < n; ++r)
            if (m[r][col].is_bigfloat()) approximate = true;
        if (!approximate) {
            for (size_t r = col; r < n; ++r)
                if (!m[r][col].is_zero()) {
                    piv = r;
                    found = true;
                    break;
                }
        } else {
            BigFloat best(0.0);
            for (size_t r = col; r < n; ++r) {
                if (m[r][col].is_zero()) continue;
                BigFloat mag = m[r][col].is_real() ? m[r][col].to_bigfloat().abs()
                                                   : Scalar(m[r][col].norm_sq()).to_bigfloat();
                if (!found || best < mag) {
                    best = mag;
                    piv = r;
                    found = true;
                }
            }
        }
        if (!found) throw SingularMomentMatrixError("singular matrix at column " +
                                                    std::to_string(col));
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);

        Scalar inv = m[col][col].inverse();
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Scalar f = m[r][col] * inv;
            for (size_t c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
            m[r][col] = Scalar(0);
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Scalar> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

}  // namespace qaskey
