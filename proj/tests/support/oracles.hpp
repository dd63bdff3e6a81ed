// Independent reference computations for the tests: spectral-decomposition
// entropy routines, a Kraus-form Choi construction, analytic complete
// positivity conditions for z-shifted diagonal maps, and a brute-force grid
// search for in-plane pairs.  Deliberately slower, simpler implementations
// than the library's closed forms.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "qcap/channel.hpp"
#include "qcap/choi.hpp"
#include "qcap/ensemble.hpp"

namespace oracle {

inline Eigen::Matrix2cd density(const qcap::BlochVector& w) {
    using namespace std::complex_literals;
    Eigen::Matrix2cd m;
    m << 0.5 * (1.0 + w.z), 0.5 * (w.x - 1i * w.y), 0.5 * (w.x + 1i * w.y), 0.5 * (1.0 - w.z);
    return m;
}

inline double entropy_spectral(const qcap::BlochVector& w) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(density(w), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        double v = es.eigenvalues()(i);
        if (v > 1e-300) s -= v * std::log2(v);
    }
    return s;
}

inline double relent_spectral(const qcap::BlochVector& p, const qcap::BlochVector& q) {
    Eigen::Matrix2cd P = density(p), Q = density(q);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> ep(P), eq(Q);
    double h = 0.0;
    for (int i = 0; i < 2; ++i) {
        double v = ep.eigenvalues()(i);
        if (v > 1e-300) h += v * std::log2(v);
    }
    for (int i = 0; i < 2; ++i) {
        double s = eq.eigenvalues()(i);
        Eigen::Vector2cd vec = eq.eigenvectors().col(i);
        double weight = std::real((vec.adjoint() * P * vec)(0, 0));
        if (s <= 1e-14) {
            if (weight > 1e-10) return std::numeric_limits<double>::infinity();
        } else {
            h -= weight * std::log2(s);
        }
    }
    return h;
}

inline double chi_spectral(const qcap::QubitChannel& ch, const qcap::Ensemble& e) {
    double s_avg = entropy_spectral(ch.apply(e.average()));
    double mix = 0.0;
    for (const auto& m : e.members) mix += m.prob * entropy_spectral(ch.apply(m.state));
    return s_avg - mix;
}

// Choi in the same index convention as the library: entry ((a,i),(b,j)) is
// Phi(|i><j|)[a,b], built here from Kraus operators.
inline Eigen::Matrix4cd choi_from_kraus(const std::vector<Eigen::Matrix2cd>& kraus) {
    Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Eigen::Matrix2cd unit = Eigen::Matrix2cd::Zero();
            unit(i, j) = 1.0;
            Eigen::Matrix2cd img = Eigen::Matrix2cd::Zero();
            for (const auto& k : kraus) img += k * unit * k.adjoint();
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) c(2 * a + i, 2 * b + j) += img(a, b);
        }
    return c;
}

inline std::vector<Eigen::Matrix2cd> damping_kraus(double mu) {
    Eigen::Matrix2cd k0 = Eigen::Matrix2cd::Zero(), k1 = Eigen::Matrix2cd::Zero();
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(mu);
    k1(0, 1) = std::sqrt(1.0 - mu);
    return {k0, k1};
}

// Positive semidefiniteness of the Choi matrix for shift (0,0,t3), via the
// two 2x2 blocks it decomposes into.
inline bool cp_z_analytic(const std::array<double, 3>& lambda, double t3) {
    double l1 = lambda[0], l2 = lambda[1], l3 = lambda[2];
    if (1.0 + l3 < 0.0 || 1.0 - l3 < 0.0) return false;
    double da = (1.0 + l3) * (1.0 + l3) - t3 * t3 - (l1 + l2) * (l1 + l2);
    double db = (1.0 - l3) * (1.0 - l3) - t3 * t3 - (l1 - l2) * (l1 - l2);
    return da >= 0.0 && db >= 0.0;
}

inline double entropy_of_norm(double r) {
    double p = 0.5 * (1.0 + std::min(1.0, r));
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

// Exhaustive search over equal-entropy-axis pairs in the x-z plane:
// two angles and a probability on a regular grid.
inline double grid_two_state(const qcap::QubitChannel& ch, int n_theta, int n_p) {
    std::vector<qcap::BlochVector> img(n_theta);
    std::vector<double> ent(n_theta);
    for (int i = 0; i < n_theta; ++i) {
        double th = 2.0 * M_PI * i / n_theta;
        img[i] = ch.apply({std::sin(th), 0.0, std::cos(th)});
        ent[i] = entropy_of_norm(img[i].norm());
    }
    double best = 0.0;
    for (int i = 0; i < n_theta; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < n_p; ++k) {
                double p = double(k) / (n_p - 1);
                qcap::BlochVector avg = p * img[i] + (1.0 - p) * img[j];
                double v = entropy_of_norm(avg.norm()) - p * ent[i] - (1.0 - p) * ent[j];
                if (v > best) best = v;
            }
    return best;
}

// Deterministic helpers for randomized property tests.
struct TestRng {
    std::mt19937_64 gen;
    explicit TestRng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return lo + (hi - lo) * (double(gen() >> 11) * 0x1.0p-53);
    }
    qcap::BlochVector ball() {
        while (true) {
            qcap::BlochVector w{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            if (w.norm() <= 1.0) return w;
        }
    }
    qcap::BlochVector sphere() {
        double z = uniform(-1, 1);
        double phi = uniform(0, 2.0 * M_PI);
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }
    qcap::Ensemble ensemble(int n, bool pure = true) {
        qcap::Ensemble e;
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double p = uniform(0.05, 1.0);
            e.members.push_back({p, pure ? sphere() : ball()});
            total += p;
        }
        for (auto& m : e.members) m.prob /= total;
        return e;
    }
};

inline std::vector<qcap::QubitChannel> test_channels() {
    using namespace qcap;
    return {make_identity(),
            make_shifted_depolarizing(0.3),
            make_shifted_depolarizing(0.5),
            make_amplitude_damping(0.5),
            make_amplitude_damping(0.8),
            make_stretched(0.5, 0.6),
            make_stretched(0.8, 0.84),
            make_squeezed(0.5, 0.435),
            make_squeezed(0.7, 0.3),
            make_qc(0.3, 0.4),
            make_cq(0.4, 0.1, 0.2, 0.3),
            mix_channels(0.5, make_shifted_depolarizing(0.5), make_amplitude_damping(0.5))};
}

}  // namespace oracle
