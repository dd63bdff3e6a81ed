#include "qcap/bloch.hpp"

#include <limits>

namespace qcap {

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) {
        if (p < 0.0 && p > -kNormSlack) p = 0.0;
        else if (p > 1.0 && p < 1.0 + kNormSlack) p = 1.0;
        else throw std::domain_error("binary_entropy: argument outside [0, 1]");
    }
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entropy(const BlochVector& w) {
    double r = w.norm();
    if (r > 1.0) {
        if (r > 1.0 + 1e-9) throw std::domain_error("entropy: Bloch vector norm exceeds 1");
        r = 1.0;
    }
    return binary_entropy(0.5 * (1.0 + r));
}

double relative_entropy(const BlochVector& p, const BlochVector& q) {
    double u = q.norm();
    if (u > 1.0) {
        if (u > 1.0 + 1e-9) throw std::domain_error("relative_entropy: second argument norm exceeds 1");
        u = 1.0;
    }
    if (u >= 1.0 - 1e-12) {
        // Pure reference state: finite only when both states coincide.
        if (distance(p, q) <= 1e-9) return 0.0;
        return std::numeric_limits<double>::infinity();
    }
    // H(P,Q) = -S(p) - alpha - beta * (p.q)/u with
    //   alpha = log2((1-u^2)/4) / 2,  beta = log2((1+u)/(1-u)) / 2.
    double alpha = 0.5 * std::log2((1.0 - u * u) / 4.0);
    double d = (u == 0.0) ? 0.0 : dot(p, q) / u;
    double beta = 0.5 * std::log2((1.0 + u) / (1.0 - u));
    return -entropy(p) - alpha - beta * d;
}

}  // namespace qcap
