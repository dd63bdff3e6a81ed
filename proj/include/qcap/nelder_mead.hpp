// Derivative-free simplex minimizer with a restart polish.  Deterministic:
// the trajectory depends only on the starting point and options.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qcap {

struct NelderMeadOptions {
    double diameter_tol = 1e-9;  // max vertex distance from the best, per coordinate
    int max_iter = 20000;        // per round
    int rounds = 2;              // extra rounds restart a small simplex at the best point
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    long evaluations = 0;
    bool converged = false;
};

template <class F>
NelderMeadResult nelder_mead_minimize(F&& f, std::vector<double> x0, std::vector<double> step,
                                      const NelderMeadOptions& opts = {}) {
    const std::size_t n = x0.size();
    NelderMeadResult res;
    auto eval = [&](const std::vector<double>& x) {
        ++res.evaluations;
        return f(x);
    };

    std::vector<std::vector<double>> xs;
    std::vector<double> fs;
    auto build_simplex = [&](const std::vector<double>& center, double scale) {
        xs.assign(1, center);
        fs.assign(1, eval(center));
        for (std::size_t i = 0; i < n; ++i) {
            auto p = center;
            p[i] += scale * step[i];
            xs.push_back(p);
            fs.push_back(eval(p));
        }
    };

    build_simplex(x0, 1.0);
    for (int round = 0; round < opts.rounds; ++round) {
        if (round > 0) build_simplex(xs[0], std::pow(0.01, round));
        for (int iter = 0; iter < opts.max_iter; ++iter) {
            // Order vertices by value.
            std::vector<std::size_t> idx(n + 1);
            for (std::size_t i = 0; i <= n; ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(),
                      [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
            {
                std::vector<std::vector<double>> xs2(n + 1);
                std::vector<double> fs2(n + 1);
                for (std::size_t i = 0; i <= n; ++i) {
                    xs2[i] = xs[idx[i]];
                    fs2[i] = fs[idx[i]];
                }
                xs = std::move(xs2);
                fs = std::move(fs2);
            }

            double diameter = 0.0;
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t d = 0; d < n; ++d)
                    diameter = std::max(diameter, std::abs(xs[i][d] - xs[0][d]));
            if (diameter <= opts.diameter_tol ||
                fs[n] - fs[0] <= 1e-15 * (1.0 + std::abs(fs[0]))) {
                res.converged = true;
                break;
            }

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t d = 0; d < n; ++d) centroid[d] += xs[i][d] / double(n);

            auto blend = [&](double coef) {
                std::vector<double> p(n);
                for (std::size_t d = 0; d < n; ++d)
                    p[d] = centroid[d] + coef * (xs[n][d] - centroid[d]);
                return p;
            };

            auto xr = blend(-1.0);
            double fr = eval(xr);
            if (fr < fs[0]) {
                auto xe = blend(-2.0);
                double fe = eval(xe);
                if (fe < fr) {
                    xs[n] = std::move(xe);
                    fs[n] = fe;
                } else {
                    xs[n] = std::move(xr);
                    fs[n] = fr;
                }
            } else if (fr < fs[n - 1]) {
                xs[n] = std::move(xr);
                fs[n] = fr;
            } else {
                bool outside = fr < fs[n];
                auto xc = blend(outside ? -0.5 : 0.5);
                double fc = eval(xc);
                if (fc < std::min(fr, fs[n])) {
                    xs[n] = std::move(xc);
                    fs[n] = fc;
                } else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t d = 0; d < n; ++d)
                            xs[i][d] = xs[0][d] + 0.5 * (xs[i][d] - xs[0][d]);
                        fs[i] = eval(xs[i]);
                    }
                }
            }
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (fs[i] < fs[best]) best = i;
        std::swap(xs[0], xs[best]);
        std::swap(fs[0], fs[best]);
    }

    res.x = xs[0];
    res.value = fs[0];
    return res;
}

}  // namespace qcap
