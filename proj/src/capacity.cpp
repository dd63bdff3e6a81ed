#include "qcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "qcap/nelder_mead.hpp"

namespace qcap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGoldenAngle = M_PI * (3.0 - 2.2360679774997896964);  // pi(3 - sqrt 5)

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic uniform stream, independent of the standard library's
// distribution internals.
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

// Maximize a scalar function: coarse grid, then golden-section refinement
// inside the bracketing cell.
template <class F>
double grid_golden_max(F&& f, double lo, double hi, int grid, double xtol, long& evals) {
    int best = 0;
    double fbest = -kInf;
    for (int i = 0; i <= grid; ++i) {
        double x = lo + (hi - lo) * i / grid;
        double v = f(x);
        ++evals;
        if (v > fbest) {
            fbest = v;
            best = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, best - 1) / grid;
    double b = lo + (hi - lo) * std::min(grid, best + 1) / grid;
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    evals += 2;
    while (b - a > xtol) {
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
        ++evals;
    }
    return 0.5 * (a + b);
}

double chi_outputs(const std::vector<double>& probs, const std::vector<BlochVector>& images) {
    BlochVector avg;
    double mix = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        avg = avg + probs[i] * images[i];
        mix += probs[i] * entropy(images[i]);
    }
    return entropy(avg) - mix;
}

CapacityResult finish_result(const QubitChannel& ch, Ensemble e, double value, long evals) {
    CapacityResult r;
    r.value = std::max(0.0, value);
    r.ensemble = canonicalize(std::move(e), ch);
    r.avg_output = ch.apply(r.ensemble.average());
    r.evaluations = evals;
    equidistance_check(ch, r);
    return r;
}

// ---- n-state parametrization ------------------------------------------------

struct ParamSpace {
    int n;
    PlaneRestriction plane;

    int angle_dims() const { return plane == PlaneRestriction::xz ? n : 2 * n; }
    int dim() const { return angle_dims() + (n - 1); }

    void decode(const std::vector<double>& x, std::vector<BlochVector>& states,
                std::vector<double>& probs) const {
        states.resize(n);
        probs.resize(n);
        if (plane == PlaneRestriction::xz) {
            for (int i = 0; i < n; ++i)
                states[i] = {std::sin(x[i]), 0.0, std::cos(x[i])};
        } else {
            for (int i = 0; i < n; ++i) {
                double th = x[2 * i], ph = x[2 * i + 1];
                states[i] = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                             std::cos(th)};
            }
        }
        double mx = 0.0;
        for (int i = 0; i < n - 1; ++i) mx = std::max(mx, x[angle_dims() + i]);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double logit = (i < n - 1) ? x[angle_dims() + i] : 0.0;
            probs[i] = std::exp(logit - mx);
            total += probs[i];
        }
        for (int i = 0; i < n; ++i) probs[i] /= total;
    }

    std::vector<double> encode(const std::vector<std::array<double, 2>>& angles) const {
        std::vector<double> x(dim(), 0.0);
        if (plane == PlaneRestriction::xz) {
            for (int i = 0; i < n; ++i)
                x[i] = std::cos(angles[i][1]) >= 0.0 ? angles[i][0] : -angles[i][0];
        } else {
            for (int i = 0; i < n; ++i) {
                x[2 * i] = angles[i][0];
                x[2 * i + 1] = angles[i][1];
            }
        }
        return x;
    }
};

// Eight fixed starting shapes covering poles, rings and mixed layouts.
std::vector<std::vector<double>> deterministic_starts(const ParamSpace& ps) {
    const int n = ps.n;
    std::vector<std::vector<std::array<double, 2>>> shapes;
    auto ring = [&](double th) {
        std::vector<std::array<double, 2>> s(n);
        for (int i = 0; i < n; ++i) s[i] = {th, 2.0 * M_PI * i / n};
        return s;
    };
    auto pole_ring = [&](double th) {
        std::vector<std::array<double, 2>> s(n);
        s[0] = {0.0, 0.0};
        for (int i = 1; i < n; ++i) s[i] = {th, 2.0 * M_PI * (i - 1) / std::max(1, n - 1)};
        return s;
    };
    {
        std::vector<std::array<double, 2>> s(n);
        for (int i = 0; i < n; ++i)
            s[i] = {n > 1 ? M_PI * i / (n - 1) : 0.0, (i % 2) ? M_PI : 0.0};
        shapes.push_back(s);  // meridian spread
    }
    shapes.push_back(ring(M_PI / 2));
    shapes.push_back(pole_ring(110.0 * M_PI / 180.0));
    shapes.push_back(pole_ring(130.0 * M_PI / 180.0));
    shapes.push_back(ring(M_PI / 3));
    shapes.push_back(ring(2 * M_PI / 3));
    {
        std::vector<std::array<double, 2>> s(n);
        for (int i = 0; i < n; ++i) {
            if (i == 0) s[i] = {0.0, 0.0};
            else if (i == 1) s[i] = {M_PI, 0.0};
            else s[i] = {M_PI / 2, 2.0 * M_PI * (i - 2) / std::max(1, n - 2)};
        }
        shapes.push_back(s);  // poles plus equator
    }
    {
        std::vector<std::array<double, 2>> s(n);
        for (int i = 0; i < n; ++i) s[i] = {M_PI * (i + 0.5) / n, 4.0 * M_PI * i / n};
        shapes.push_back(s);  // spiral
    }
    std::vector<std::vector<double>> starts;
    for (const auto& s : shapes) starts.push_back(ps.encode(s));
    return starts;
}

std::vector<double> random_start(const ParamSpace& ps, std::uint64_t seed, int k) {
    Rng rng{splitmix64(seed + 0x632BE59BD9B4E019ULL * (std::uint64_t(k) + 1))};
    std::vector<double> x(ps.dim());
    if (ps.plane == PlaneRestriction::xz) {
        for (int i = 0; i < ps.n; ++i) x[i] = M_PI * (2.0 * rng.next() - 1.0);
    } else {
        for (int i = 0; i < ps.n; ++i) {
            x[2 * i] = std::acos(1.0 - 2.0 * rng.next());
            x[2 * i + 1] = 2.0 * M_PI * rng.next();
        }
    }
    for (int i = 0; i < ps.n - 1; ++i)
        x[ps.angle_dims() + i] = 2.4 * (rng.next() - 0.5);
    return x;
}

struct Candidate {
    double value = -kInf;
    Ensemble canonical;
};

// Deterministic preference: higher value, then fewer states, then canonical
// member order.
bool candidate_better(const Candidate& cand, const Candidate& best) {
    if (cand.value > best.value + 1e-9) return true;
    if (cand.value < best.value - 1e-9) return false;
    std::size_t cn = cand.canonical.members.size(), bn = best.canonical.members.size();
    if (cn != bn) return cn < bn;
    return ensemble_greater(cand.canonical, best.canonical);
}

}  // namespace

double chi(const QubitChannel& ch, const Ensemble& e) {
    e.validate();
    std::vector<double> probs;
    std::vector<BlochVector> images;
    for (const auto& m : e.members) {
        probs.push_back(m.prob);
        images.push_back(ch.apply(m.state));
    }
    return chi_outputs(probs, images);
}

CapacityResult optimize_vertical(const QubitChannel& ch) {
    const BlochVector up = ch.apply({0, 0, 1}), dn = ch.apply({0, 0, -1});
    const double su = entropy(up), sd = entropy(dn);
    long evals = 0;
    auto f = [&](double p) { return entropy(p * up + (1.0 - p) * dn) - p * su - (1.0 - p) * sd; };
    double p = grid_golden_max(f, 0.0, 1.0, 64, 1e-12, evals);
    Ensemble e{{{p, {0, 0, 1}}, {1.0 - p, {0, 0, -1}}}};
    return finish_result(ch, std::move(e), f(p), evals + 1);
}

CapacityResult optimize_horizontal(const QubitChannel& ch) {
    long evals = 0;
    auto f = [&](double z) {
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        BlochVector a = ch.apply({r, 0, z}), b = ch.apply({-r, 0, z});
        return entropy(ch.apply({0, 0, z})) - 0.5 * entropy(a) - 0.5 * entropy(b);
    };
    double z = grid_golden_max(f, -1.0, 1.0, 128, 1e-12, evals);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    Ensemble e{{{0.5, {r, 0, z}}, {0.5, {-r, 0, z}}}};
    return finish_result(ch, std::move(e), f(z), evals + 1);
}

double find_crossing(const std::function<QubitChannel(double)>& family, double lo, double hi,
                     double tol) {
    auto g = [&](double x) {
        QubitChannel ch = family(x);
        return optimize_vertical(ch).value - optimize_horizontal(ch).value;
    };
    double glo = g(lo), ghi = g(hi);
    if (glo == 0.0) return lo;
    if (ghi == 0.0) return hi;
    if ((glo > 0.0) == (ghi > 0.0))
        throw BracketError("capacity difference does not change sign over the bracket");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

CapacityResult optimize_n_state(const QubitChannel& ch, int n, PlaneRestriction plane,
                                std::uint64_t seed, const OptimizeOptions& opts) {
    if (n < 1 || n > 8) throw std::invalid_argument("ensemble size must lie in [1, 8]");
    ParamSpace ps{n, plane};

    std::vector<BlochVector> states;
    std::vector<double> probs;
    std::vector<BlochVector> images(n);
    long evals = 0;
    auto objective = [&](const std::vector<double>& x) {
        ps.decode(x, states, probs);
        for (int i = 0; i < n; ++i) images[i] = ch.apply(states[i]);
        return -chi_outputs(probs, images);
    };

    auto starts = deterministic_starts(ps);
    for (int k = 0; k < opts.random_starts; ++k) starts.push_back(random_start(ps, seed, k));

    std::vector<double> step(ps.dim(), 0.5);
    for (int i = ps.angle_dims(); i < ps.dim(); ++i) step[i] = 0.6;
    NelderMeadOptions nm;
    nm.diameter_tol = opts.diameter_tol;
    nm.max_iter = opts.max_iter;

    Candidate best;
    for (const auto& x0 : starts) {
        auto r = nelder_mead_minimize(objective, x0, step, nm);
        evals += r.evaluations;
        ps.decode(r.x, states, probs);
        Ensemble e;
        for (int i = 0; i < n; ++i) e.members.push_back({probs[i], states[i]});
        Candidate cand{-r.value, canonicalize(e, ch)};
        if (candidate_better(cand, best)) best = std::move(cand);
    }

    CapacityResult r;
    r.value = std::max(0.0, best.value);
    r.ensemble = std::move(best.canonical);
    r.avg_output = ch.apply(r.ensemble.average());
    r.evaluations = evals;
    equidistance_check(ch, r);
    return r;
}

GlobalCapacityResult optimize_global(const QubitChannel& ch, std::uint64_t seed,
                                     const OptimizeOptions& opts) {
    GlobalCapacityResult g;
    long total = 0;
    bool have = false;
    for (int n = 2; n <= 4; ++n) {
        auto r = optimize_n_state(ch, n, PlaneRestriction::none, splitmix64(seed + n), opts);
        total += r.evaluations;
        g.value_by_n[n - 2] = r.value;
        Candidate cand{r.value, r.ensemble};
        Candidate cur{have ? g.best.value : -kInf, have ? g.best.ensemble : Ensemble{}};
        if (!have || candidate_better(cand, cur)) {
            g.best = std::move(r);
            have = true;
        }
    }
    g.best.evaluations = total;
    g.three_state_advantage = g.value_by_n[1] > g.value_by_n[0] + 1e-6;
    return g;
}

double equidistance_check(const QubitChannel& ch, CapacityResult& r) {
    double worst = 0.0;
    for (const auto& m : r.ensemble.members) {
        double h = relative_entropy(ch.apply(m.state), r.avg_output);
        worst = std::max(worst, std::abs(h - r.value));
    }
    r.equidistance_residual = worst;
    return worst;
}

double divergence_radius_check(const QubitChannel& ch, const CapacityResult& r, int grid) {
    if (grid < 100) throw std::invalid_argument("divergence grid must have at least 100 points");
    double sup = -kInf;
    for (int i = 0; i < grid; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / grid;
        double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = kGoldenAngle * i;
        BlochVector w{rad * std::cos(phi), rad * std::sin(phi), z};
        sup = std::max(sup, relative_entropy(ch.apply(w), r.avg_output));
    }
    return sup - r.value;
}

CapacityResult symmetric_triple_solve(const QubitChannel& ch) {
    if (ch.lambda[0] != ch.lambda[1] || ch.shift[0] != 0.0 || ch.shift[1] != 0.0)
        throw std::invalid_argument("symmetric_triple_solve requires symmetry about z");

    const BlochVector top = ch.apply({0, 0, 1});
    const double s_top = entropy(top);
    long evals = 0;

    // Root of H[top] - H[wing] in p for a fixed wing colatitude, if any.
    auto balance = [&](double th, double p) {
        double c = std::cos(th), s = std::sin(th);
        BlochVector wing = ch.apply({s, 0, c});
        BlochVector avg = ch.apply({0, 0, p + (1.0 - p) * c});
        ++evals;
        return relative_entropy(top, avg) - relative_entropy(wing, avg);
    };
    auto solve_p = [&](double th) -> std::optional<double> {
        const int grid = 100;
        const double plo = 1e-9, phi = 1.0 - 1e-9;
        double prev_p = plo, prev_g = balance(th, plo);
        for (int i = 1; i <= grid; ++i) {
            double p = plo + (phi - plo) * i / grid;
            double g = balance(th, p);
            if (prev_g == 0.0) return prev_p;
            if ((prev_g > 0.0) != (g > 0.0)) {
                double a = prev_p, b = p, ga = prev_g;
                for (int it = 0; it < 100; ++it) {
                    double mid = 0.5 * (a + b);
                    double gm = balance(th, mid);
                    if (gm == 0.0) return mid;
                    if ((gm > 0.0) == (ga > 0.0)) {
                        a = mid;
                        ga = gm;
                    } else {
                        b = mid;
                    }
                }
                return 0.5 * (a + b);
            }
            prev_p = p;
            prev_g = g;
        }
        return std::nullopt;
    };
    auto value_at = [&](double th) -> double {
        auto p = solve_p(th);
        if (!p) return -kInf;
        double c = std::cos(th), s = std::sin(th);
        double sw = entropy(ch.apply({s, 0, c}));
        double sa = entropy(ch.apply({0, 0, *p + (1.0 - *p) * c}));
        return sa - *p * s_top - (1.0 - *p) * sw;
    };

    const int grid = 256;
    int best = -1;
    double fbest = -kInf;
    for (int j = 0; j < grid; ++j) {
        double th = M_PI * (j + 1) / grid;
        double v = value_at(th);
        if (v > fbest) {
            fbest = v;
            best = j;
        }
    }
    if (best < 0) throw NoSolutionError("no equalizing triple exists for any wing angle");

    double a = M_PI * std::max(1, best) / grid;
    double b = M_PI * std::min(grid, best + 2) / grid;
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = value_at(x1), f2 = value_at(x2);
    while (b - a > 1e-10) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = value_at(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = value_at(x2);
        }
    }
    double th = 0.5 * (a + b);
    auto p = solve_p(th);
    if (!p) {
        th = f1 >= f2 ? x1 : x2;
        p = solve_p(th);
    }
    if (!p) throw NoSolutionError("equalizing triple lost during refinement");

    double c = std::cos(th), s = std::sin(th);
    Ensemble e{{{*p, {0, 0, 1}},
                {0.5 * (1.0 - *p), {s, 0, c}},
                {0.5 * (1.0 - *p), {-s, 0, c}}}};
    return finish_result(ch, std::move(e), value_at(th), evals);
}

}  // namespace qcap
