// Bloch vectors and the entropy functions built on them.
//
// A qubit state rho = (I + w.sigma)/2 is represented by its Bloch vector w,
// |w| <= 1.  All entropies are in bits.

#pragma once

#include <cmath>
#include <stdexcept>

namespace qcap {

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVector operator*(double s) const { return {s * x, s * y, s * z}; }
};

inline BlochVector operator*(double s, const BlochVector& w) { return w * s; }

inline double dot(const BlochVector& a, const BlochVector& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double distance(const BlochVector& a, const BlochVector& b) { return (a - b).norm(); }

// Norms within this slack of 1 are treated as exactly on the sphere.
inline constexpr double kNormSlack = 1e-12;

// h2(p) = -p log2 p - (1-p) log2 (1-p), with h2(0) = h2(1) = 0.
double binary_entropy(double p);

// Von Neumann entropy of the state with Bloch vector w: h2((1+|w|)/2).
// Throws std::domain_error if |w| > 1 + 1e-9.
double entropy(const BlochVector& w);

// Quantum relative entropy H(rho_p || rho_q) of the states with Bloch
// vectors p and q, evaluated in closed form.  When q is pure the support
// condition applies: the result is 0 if p == q (within 1e-9) and +infinity
// otherwise.
double relative_entropy(const BlochVector& p, const BlochVector& q);

}  // namespace qcap
