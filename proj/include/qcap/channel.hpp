// Qubit channels in Bloch affine form: w -> shift + lambda * w with a
// diagonal linear part.  Named constructors build the channel families used
// throughout; they validate their parameter domains and complete positivity.

#pragma once

#include <array>
#include <stdexcept>

#include "qcap/bloch.hpp"

namespace qcap {

// Raised when a requested map is not completely positive.
struct CpViolationError : std::domain_error {
    using std::domain_error::domain_error;
};

struct QubitChannel {
    std::array<double, 3> lambda{0.0, 0.0, 0.0};
    std::array<double, 3> shift{0.0, 0.0, 0.0};

    BlochVector apply(const BlochVector& w) const {
        return {shift[0] + lambda[0] * w.x, shift[1] + lambda[1] * w.y,
                shift[2] + lambda[2] * w.z};
    }
};

struct ChannelOptions {
    bool check_positivity = true;  // image of the Bloch ball stays inside it
    bool require_cp = true;        // Choi matrix is positive semidefinite
    double cp_tol = 1e-10;
};

// General constructor.  Throws std::domain_error if the map can push states
// outside the Bloch ball, CpViolationError if require_cp is set and the Choi
// matrix has an eigenvalue below -cp_tol.
QubitChannel make_channel(const std::array<double, 3>& lambda,
                          const std::array<double, 3>& shift,
                          const ChannelOptions& opts = {});

QubitChannel make_identity();

// lambda = (mu, mu, mu), shift = (0, 0, 1-mu); mu in [0, 1].
QubitChannel make_shifted_depolarizing(double mu);

// lambda = (sqrt(mu), sqrt(mu), mu), shift = (0, 0, 1-mu); mu in [0, 1].
QubitChannel make_amplitude_damping(double mu);

// lambda = (s, s, mu), shift = (0, 0, 1-mu); mu in [0, 1], s in [mu, sqrt(mu)]
// unless allow_out_of_range, in which case no checks run at all.
QubitChannel make_stretched(double mu, double s, bool allow_out_of_range = false);

// lambda = (mu, q, q), shift = (0, 0, 1-mu); complete positivity decides the
// admissible (mu, q) pairs.
QubitChannel make_squeezed(double mu, double q);

// Quantum-to-classical line: lambda = (0, 0, mu), shift = (0, 0, t3),
// requires |t3| + |mu| <= 1.
QubitChannel make_qc(double t3, double mu);

// Classical-to-quantum line: lambda = (0, 0, mu), shift = (t1, t2, t3),
// requires t1^2 + t2^2 + (|t3| + |mu|)^2 <= 1.
QubitChannel make_cq(double t1, double t2, double t3, double mu);

// Pointwise convex mixture a * phi1 + (1-a) * phi2; a in [0, 1].
QubitChannel mix_channels(double a, const QubitChannel& phi1, const QubitChannel& phi2);

}  // namespace qcap
