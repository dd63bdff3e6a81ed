// Choi matrix of a Bloch-affine qubit channel (trace normalized to 2) and
// the complete-positivity test built on its eigenvalues.

#pragma once

#include <array>
#include <complex>

#include "qcap/channel.hpp"

namespace qcap {

struct ChoiMatrix {
    // Row-major 4x4 Hermitian matrix.
    std::array<std::complex<double>, 16> m{};

    std::complex<double>& at(int r, int c) { return m[4 * r + c]; }
    const std::complex<double>& at(int r, int c) const { return m[4 * r + c]; }
};

ChoiMatrix choi_matrix(const QubitChannel& ch);

// Eigenvalues in ascending order.
std::array<double, 4> choi_eigenvalues(const ChoiMatrix& c);

double min_choi_eigenvalue(const QubitChannel& ch);

bool is_cp(const QubitChannel& ch, double tol = 1e-10);

}  // namespace qcap
