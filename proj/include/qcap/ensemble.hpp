// Weighted ensembles of Bloch vectors, plus the canonical form used when
// reporting optimizer results.

#pragma once

#include <cstddef>
#include <vector>

#include "qcap/channel.hpp"

namespace qcap {

struct WeightedState {
    double prob = 0.0;
    BlochVector state;
};

struct Ensemble {
    std::vector<WeightedState> members;

    BlochVector average() const;

    // Throws std::invalid_argument unless probabilities are nonnegative and
    // sum to 1 within 1e-12, and every state sits inside the Bloch ball.
    void validate() const;
};

// Equal-weight mixture of two ensembles; duplicate states (within 1e-12)
// are merged by summing probabilities.
Ensemble average_ensembles(const Ensemble& a, const Ensemble& b);

// Drops members below prune_tol and merges states closer than merge_tol,
// keeping the heavier member's position.
Ensemble pruned_merged(const Ensemble& e, double prune_tol = 1e-9, double merge_tol = 1e-6);

std::size_t effective_size(const Ensemble& e);

// Orders sorted member lists by (z, x, y, prob) tuples quantized to 1e-7,
// used for deterministic tie-breaking between equally good optima. Lists
// that agree to the quantum compare equal (returns false both ways).
bool ensemble_greater(const Ensemble& a, const Ensemble& b);

// Deterministic reporting form: prune + merge, quotient out whichever of
// the channel's symmetries (rotation about z, sign flips of x or y) apply,
// then sort members by z, x, y, prob descending.
Ensemble canonicalize(Ensemble e, const QubitChannel& ch);

// Prune + merge + sort only, leaving orientations alone.  Used where a
// measurement is reported alongside the ensemble and symmetry transforms
// would break their correspondence.
Ensemble canonicalize(Ensemble e);

}  // namespace qcap
