#include "qcap/shannon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qcap/nelder_mead.hpp"

namespace qcap {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct Rng {
    std::uint64_t state;
    double next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t x = state;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return double(x >> 11) * 0x1.0p-53;
    }
};

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Mutual information from output Bloch vectors, probabilities, and
// measurement elements, without revalidating anything.
double mutual_info(const std::vector<double>& probs, const std::vector<BlochVector>& outputs,
                   const std::vector<PovmElement>& elems) {
    double info = 0.0;
    std::vector<double> outcome(elems.size(), 0.0);
    for (std::size_t j = 0; j < probs.size(); ++j) {
        for (std::size_t k = 0; k < elems.size(); ++k) {
            double cond = std::max(0.0, elems[k].weight * (1.0 + dot(outputs[j], elems[k].direction)));
            outcome[k] += probs[j] * cond;
            info -= probs[j] * xlog2x(cond);
        }
    }
    for (double q : outcome) info += xlog2x(q);
    return -info;
}

BlochVector canonical_axis(BlochVector a) {
    double n = a.norm();
    if (n > 0) a = (1.0 / n) * a;
    if (a.z < 0 || (a.z == 0 && (a.x < 0 || (a.x == 0 && a.y < 0)))) a = -1.0 * a;
    return a;
}

// Best projective in-plane axis for a fixed pair of output states.
double best_projective(const std::vector<double>& probs, const std::vector<BlochVector>& outputs,
                       double& axis_angle, long& evals) {
    std::vector<PovmElement> elems(2);
    auto f = [&](double phi) {
        BlochVector d{std::sin(phi), 0.0, std::cos(phi)};
        elems[0] = {0.5, d};
        elems[1] = {0.5, -1.0 * d};
        ++evals;
        return mutual_info(probs, outputs, elems);
    };
    const int grid = 64;
    int best = 0;
    double fbest = -1.0;
    for (int i = 0; i < grid; ++i) {
        double v = f(M_PI * i / grid);
        if (v > fbest) {
            fbest = v;
            best = i;
        }
    }
    double a = M_PI * (best - 1) / grid, b = M_PI * (best + 1) / grid;
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > 1e-9) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    axis_angle = 0.5 * (a + b);
    return f(axis_angle);
}

ShannonResult finish(const QubitChannel& ch, Ensemble e, double value, const Povm& m,
                     const BlochVector& axis, long evals) {
    ShannonResult r;
    r.value = std::max(0.0, value);
    r.ensemble = canonicalize(std::move(e));
    r.avg_output = ch.apply(r.ensemble.average());
    r.measurement_axis = canonical_axis(axis);
    r.povm = m;
    r.evaluations = evals;
    return r;
}

}  // namespace

void Povm::validate() const {
    double wsum = 0.0;
    BlochVector dsum;
    for (const auto& el : elements) {
        if (el.weight < -1e-12) throw std::invalid_argument("povm weight is negative");
        if (el.weight > 1e-12 && el.direction.norm() > 1.0 + 1e-9)
            throw std::invalid_argument("povm element is not positive semidefinite");
        wsum += el.weight;
        dsum = dsum + el.weight * el.direction;
    }
    if (std::abs(wsum - 1.0) > 1e-12 || dsum.norm() > 1e-12)
        throw std::invalid_argument("povm elements do not sum to the identity");
}

Povm Povm::projective(const BlochVector& axis) {
    double n = axis.norm();
    if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("projective axis must be a unit vector");
    BlochVector d = (1.0 / n) * axis;
    return Povm{{{0.5, d}, {0.5, -1.0 * d}}};
}

double accessible_information(const QubitChannel& ch, const Ensemble& e, const Povm& m) {
    e.validate();
    m.validate();
    std::vector<double> probs;
    std::vector<BlochVector> outputs;
    for (const auto& mem : e.members) {
        probs.push_back(mem.prob);
        outputs.push_back(ch.apply(mem.state));
    }
    return mutual_info(probs, outputs, m.elements);
}

ShannonResult optimize_shannon(const QubitChannel& ch, std::uint64_t seed) {
    long evals = 0;
    std::vector<double> probs(2);
    std::vector<BlochVector> outputs(2);
    double axis_angle = 0.0;
    auto objective = [&](const std::vector<double>& x) {
        probs[0] = 1.0 / (1.0 + std::exp(-x[2]));
        probs[1] = 1.0 - probs[0];
        outputs[0] = ch.apply({std::sin(x[0]), 0.0, std::cos(x[0])});
        outputs[1] = ch.apply({std::sin(x[1]), 0.0, std::cos(x[1])});
        double angle;
        return -best_projective(probs, outputs, angle, evals);
    };

    std::vector<std::vector<double>> starts = {
        {0.0, M_PI, 0.0},  {M_PI / 2, -M_PI / 2, 0.0}, {0.0, 2.2, 0.0},
        {0.6, M_PI, 0.0},  {1.2, -1.2, 0.4},           {0.2, 2.8, -0.4},
    };
    for (int k = 0; k < 10; ++k) {
        Rng rng{splitmix64(seed + 0x9D2C5680A76B3ECDULL * (std::uint64_t(k) + 1))};
        starts.push_back({M_PI * (2 * rng.next() - 1), M_PI * (2 * rng.next() - 1),
                          2.4 * (rng.next() - 0.5)});
    }

    NelderMeadOptions nm;
    nm.max_iter = 2000;
    std::vector<double> best_x;
    double best_v = -1.0;
    for (const auto& x0 : starts) {
        auto r = nelder_mead_minimize(objective, x0, {0.4, 0.4, 0.5}, nm);
        if (-r.value > best_v + 1e-12 || best_x.empty()) {
            best_v = -r.value;
            best_x = r.x;
        }
    }

    double p = 1.0 / (1.0 + std::exp(-best_x[2]));
    BlochVector w1{std::sin(best_x[0]), 0.0, std::cos(best_x[0])};
    BlochVector w2{std::sin(best_x[1]), 0.0, std::cos(best_x[1])};
    probs = {p, 1.0 - p};
    outputs = {ch.apply(w1), ch.apply(w2)};
    double value = best_projective(probs, outputs, axis_angle, evals);
    BlochVector axis{std::sin(axis_angle), 0.0, std::cos(axis_angle)};
    Ensemble e{{{p, w1}, {1.0 - p, w2}}};
    return finish(ch, std::move(e), value, Povm::projective(axis), axis, evals);
}

ShannonResult optimize_shannon_extended(const QubitChannel& ch, std::uint64_t seed) {
    long evals = 0;
    std::vector<double> probs(3);
    std::vector<BlochVector> outputs(3);

    // Outcome weights solving sum w = 1, sum w sin = 0, sum w cos = 0.
    auto solve_weights = [](const double* phi, double* w) {
        double s[3], c[3];
        for (int k = 0; k < 3; ++k) {
            s[k] = std::sin(phi[k]);
            c[k] = std::cos(phi[k]);
        }
        double det = (s[1] * c[2] - s[2] * c[1]) - (s[0] * c[2] - s[2] * c[0]) +
                     (s[0] * c[1] - s[1] * c[0]);
        if (std::abs(det) < 1e-12) return false;
        w[0] = (s[1] * c[2] - s[2] * c[1]) / det;
        w[1] = -(s[0] * c[2] - s[2] * c[0]) / det;
        w[2] = (s[0] * c[1] - s[1] * c[0]) / det;
        return w[0] > -1e-9 && w[1] > -1e-9 && w[2] > -1e-9;
    };

    std::vector<PovmElement> elems(3);
    auto objective = [&](const std::vector<double>& x) {
        double mx = std::max({x[3], x[4], 0.0});
        double e0 = std::exp(x[3] - mx), e1 = std::exp(x[4] - mx), e2 = std::exp(-mx);
        double tot = e0 + e1 + e2;
        probs = {e0 / tot, e1 / tot, e2 / tot};
        for (int j = 0; j < 3; ++j)
            outputs[j] = ch.apply({std::sin(x[j]), 0.0, std::cos(x[j])});
        double w[3];
        if (!solve_weights(&x[5], w)) return 1.0;
        for (int k = 0; k < 3; ++k)
            elems[k] = {std::max(0.0, w[k]), {std::sin(x[5 + k]), 0.0, std::cos(x[5 + k])}};
        ++evals;
        return -mutual_info(probs, outputs, elems);
    };

    const double trine = 2.0 * M_PI / 3.0;
    std::vector<std::vector<double>> starts = {
        {0.0, 1.9, -1.9, 0.0, 0.0, 0.0, trine, -trine},
        {0.0, M_PI, 1.6, 0.0, 0.0, 0.8, 0.8 + trine, 0.8 - trine},
        {0.5, 2.6, -1.5, 0.0, 0.0, 1.0, -1.0, M_PI},
    };
    for (int k = 0; k < 12; ++k) {
        Rng rng{splitmix64(seed + 0xD1342543DE82EF95ULL * (std::uint64_t(k) + 1))};
        std::vector<double> x(8);
        for (int i = 0; i < 3; ++i) x[i] = M_PI * (2 * rng.next() - 1);
        x[3] = 1.2 * (rng.next() - 0.5);
        x[4] = 1.2 * (rng.next() - 0.5);
        for (int i = 5; i < 8; ++i) x[i] = M_PI * (2 * rng.next() - 1);
        starts.push_back(x);
    }

    NelderMeadOptions nm;
    nm.max_iter = 3000;
    std::vector<double> best_x;
    double best_v = -1.0;
    for (const auto& x0 : starts) {
        auto r = nelder_mead_minimize(objective, x0,
                                      {0.4, 0.4, 0.4, 0.5, 0.5, 0.3, 0.3, 0.3}, nm);
        if (-r.value > best_v + 1e-12 || best_x.empty()) {
            best_v = -r.value;
            best_x = r.x;
        }
    }

    double value = -objective(best_x);
    Povm m{elems};
    Ensemble e;
    for (int j = 0; j < 3; ++j)
        e.members.push_back({probs[j], {std::sin(best_x[j]), 0.0, std::cos(best_x[j])}});
    int heavy = 0;
    for (int k = 1; k < 3; ++k)
        if (m.elements[k].weight > m.elements[heavy].weight) heavy = k;
    return finish(ch, std::move(e), value, m, m.elements[heavy].direction, evals);
}

}  // namespace qcap
