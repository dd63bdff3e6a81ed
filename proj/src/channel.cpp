#include "qcap/channel.hpp"

#include <cmath>
#include <string>

#include "qcap/choi.hpp"

namespace qcap {

namespace {

constexpr double kDomainSlack = 1e-12;

// Largest output norm over a deterministic sample of the input sphere.
double max_output_norm(const QubitChannel& ch, int n = 512) {
    double best = 0.0;
    auto probe = [&](const BlochVector& w) {
        double r = ch.apply(w).norm();
        if (r > best) best = r;
    };
    probe({1, 0, 0});
    probe({-1, 0, 0});
    probe({0, 1, 0});
    probe({0, -1, 0});
    probe({0, 0, 1});
    probe({0, 0, -1});
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden_angle * i;
        probe({r * std::cos(phi), r * std::sin(phi), z});
    }
    return best;
}

void check_unit_interval(double v, const char* name) {
    if (!(v >= -kDomainSlack && v <= 1.0 + kDomainSlack))
        throw std::domain_error(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

QubitChannel make_channel(const std::array<double, 3>& lambda,
                          const std::array<double, 3>& shift,
                          const ChannelOptions& opts) {
    QubitChannel ch{lambda, shift};
    if (opts.require_cp && !is_cp(ch, opts.cp_tol))
        throw CpViolationError("map is not completely positive");
    if (opts.check_positivity && max_output_norm(ch) > 1.0 + 1e-9)
        throw std::domain_error("map sends states outside the Bloch ball");
    return ch;
}

QubitChannel make_identity() { return {{1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}}; }

QubitChannel make_shifted_depolarizing(double mu) {
    check_unit_interval(mu, "mu");
    return make_channel({mu, mu, mu}, {0.0, 0.0, 1.0 - mu});
}

QubitChannel make_amplitude_damping(double mu) {
    check_unit_interval(mu, "mu");
    double r = std::sqrt(mu);
    return make_channel({r, r, mu}, {0.0, 0.0, 1.0 - mu});
}

QubitChannel make_stretched(double mu, double s, bool allow_out_of_range) {
    if (allow_out_of_range) return {{s, s, mu}, {0.0, 0.0, 1.0 - mu}};
    check_unit_interval(mu, "mu");
    if (s < mu - kDomainSlack || s > std::sqrt(mu) + kDomainSlack)
        throw std::domain_error("s must lie in [mu, sqrt(mu)]");
    return make_channel({s, s, mu}, {0.0, 0.0, 1.0 - mu});
}

QubitChannel make_squeezed(double mu, double q) {
    check_unit_interval(mu, "mu");
    check_unit_interval(q, "q");
    if (q > mu + kDomainSlack) throw std::domain_error("squeezed family requires q <= mu");
    return make_channel({mu, q, q}, {0.0, 0.0, 1.0 - mu});
}

QubitChannel make_qc(double t3, double mu) {
    if (std::abs(t3) + std::abs(mu) > 1.0 + kDomainSlack)
        throw std::domain_error("qc line requires |t3| + |mu| <= 1");
    return make_channel({0.0, 0.0, mu}, {0.0, 0.0, t3});
}

QubitChannel make_cq(double t1, double t2, double t3, double mu) {
    double a = std::abs(t3) + std::abs(mu);
    if (t1 * t1 + t2 * t2 + a * a > 1.0 + kDomainSlack)
        throw std::domain_error("cq line requires t1^2 + t2^2 + (|t3| + |mu|)^2 <= 1");
    return make_channel({0.0, 0.0, mu}, {t1, t2, t3});
}

QubitChannel mix_channels(double a, const QubitChannel& phi1, const QubitChannel& phi2) {
    if (a < -kDomainSlack || a > 1.0 + kDomainSlack)
        throw std::domain_error("mixing weight must lie in [0, 1]");
    QubitChannel ch;
    for (int i = 0; i < 3; ++i) {
        ch.lambda[i] = a * phi1.lambda[i] + (1.0 - a) * phi2.lambda[i];
        ch.shift[i] = a * phi1.shift[i] + (1.0 - a) * phi2.shift[i];
    }
    return ch;
}

}  // namespace qcap
