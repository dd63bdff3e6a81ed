// Holevo quantity and the optimizers for restricted and unrestricted
// single-letter capacities of Bloch-affine qubit channels.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "qcap/ensemble.hpp"

namespace qcap {

// Raised by find_crossing when the objective does not change sign.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by symmetric_triple_solve when no equalizing triple exists.
struct NoSolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Holevo quantity of the output ensemble:
//   S(Phi(avg)) - sum_j p_j S(Phi(w_j)).
double chi(const QubitChannel& ch, const Ensemble& e);

struct CapacityResult {
    double value = 0.0;
    Ensemble ensemble;           // canonical reporting form
    BlochVector avg_output;      // channel image of the ensemble average
    double equidistance_residual = 0.0;
    long evaluations = 0;
};

// Best equal-axis pair: inputs fixed at (0,0,+1), (0,0,-1), probability free.
CapacityResult optimize_vertical(const QubitChannel& ch);

// Best equiprobable pair (+-sqrt(1-z^2), 0, z), height z free.
CapacityResult optimize_horizontal(const QubitChannel& ch);

// Parameter value where optimize_vertical and optimize_horizontal give equal
// capacity, located by bisection on their difference over [lo, hi].
double find_crossing(const std::function<QubitChannel(double)>& family, double lo, double hi,
                     double tol = 1e-6);

enum class PlaneRestriction { none, xz };

struct OptimizeOptions {
    int random_starts = 24;  // in addition to 8 deterministic patterns
    int max_iter = 4000;     // simplex iterations per round
    double diameter_tol = 1e-9;
};

// Multi-start simplex search over ensembles of exactly n pure states.
// Deterministic for a fixed (channel, n, plane, seed, opts).
CapacityResult optimize_n_state(const QubitChannel& ch, int n,
                                PlaneRestriction plane = PlaneRestriction::none,
                                std::uint64_t seed = 0, const OptimizeOptions& opts = {});

struct GlobalCapacityResult {
    CapacityResult best;
    std::array<double, 3> value_by_n{};  // n = 2, 3, 4
    bool three_state_advantage = false;  // n=3 beats n=2 by more than 1e-6
};

// Runs optimize_n_state for n = 2, 3, 4 over the full sphere and keeps the
// best result, preferring fewer effective states on ties.
GlobalCapacityResult optimize_global(const QubitChannel& ch, std::uint64_t seed = 0,
                                     const OptimizeOptions& opts = {});

// Stores and returns the largest deviation of any member's relative entropy
// to the average output from the capacity value.
double equidistance_check(const QubitChannel& ch, CapacityResult& r);

// Excess of sup over pure inputs of the relative entropy to the average
// output above the capacity value, on a sphere grid of the given size.
// At a true optimum the excess is nonpositive up to grid resolution.
double divergence_radius_check(const QubitChannel& ch, const CapacityResult& r, int grid = 2000);

// For channels symmetric about z: solves for the triple
//   (0,0,1) @ p,  (+-sin(theta),0,cos(theta)) @ (1-p)/2
// whose members are equidistant from the average output, maximizing over
// theta.  theta = pi collapses to the vertical pair.
CapacityResult symmetric_triple_solve(const QubitChannel& ch);

}  // namespace qcap
