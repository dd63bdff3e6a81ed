#include "qcap/choi.hpp"

#include <Eigen/Eigenvalues>

namespace qcap {

ChoiMatrix choi_matrix(const QubitChannel& ch) {
    const double l1 = ch.lambda[0], l2 = ch.lambda[1], l3 = ch.lambda[2];
    const double t1 = ch.shift[0], t2 = ch.shift[1], t3 = ch.shift[2];
    const std::complex<double> tp(0.5 * t1, -0.5 * t2);  // (t1 - i t2)/2
    const std::complex<double> tm = std::conj(tp);

    ChoiMatrix c;
    c.at(0, 0) = 0.5 * (1.0 + t3 + l3);
    c.at(0, 2) = tp;
    c.at(0, 3) = 0.5 * (l1 + l2);
    c.at(1, 1) = 0.5 * (1.0 + t3 - l3);
    c.at(1, 2) = 0.5 * (l1 - l2);
    c.at(1, 3) = tp;
    c.at(2, 0) = tm;
    c.at(2, 1) = 0.5 * (l1 - l2);
    c.at(2, 2) = 0.5 * (1.0 - t3 - l3);
    c.at(3, 0) = 0.5 * (l1 + l2);
    c.at(3, 1) = tm;
    c.at(3, 3) = 0.5 * (1.0 - t3 + l3);
    return c;
}

std::array<double, 4> choi_eigenvalues(const ChoiMatrix& c) {
    Eigen::Matrix4cd m;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) m(r, col) = c.at(r, col);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m, Eigen::EigenvaluesOnly);
    std::array<double, 4> ev{};
    for (int i = 0; i < 4; ++i) ev[i] = solver.eigenvalues()(i);
    return ev;
}

double min_choi_eigenvalue(const QubitChannel& ch) {
    return choi_eigenvalues(choi_matrix(ch))[0];
}

bool is_cp(const QubitChannel& ch, double tol) {
    return min_choi_eigenvalue(ch) >= -tol;
}

}  // namespace qcap
