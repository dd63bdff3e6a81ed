// Accessible information of a channel under a fixed measurement, and the
// single-letter Shannon capacity search over in-plane ensembles and
// measurements.

#pragma once

#include <cstdint>
#include <vector>

#include "qcap/ensemble.hpp"

namespace qcap {

// E_k = weight * (I + direction . sigma); weight >= 0, |direction| <= 1.
struct PovmElement {
    double weight = 0.0;
    BlochVector direction;
};

struct Povm {
    std::vector<PovmElement> elements;

    // Throws std::invalid_argument unless every element is positive
    // semidefinite and the elements sum to the identity within 1e-12.
    void validate() const;

    // Two-outcome projective measurement along a unit axis.
    static Povm projective(const BlochVector& axis);
};

// Classical mutual information between the ensemble label and the
// measurement outcome on the channel output, in bits.
double accessible_information(const QubitChannel& ch, const Ensemble& e, const Povm& m);

struct ShannonResult {
    double value = 0.0;
    Ensemble ensemble;
    BlochVector avg_output;
    BlochVector measurement_axis;
    Povm povm;
    long evaluations = 0;
};

// Maximizes accessible information over two-state ensembles in the x-z
// plane and projective measurements with an in-plane axis; the axis search
// is nested inside the ensemble search.
ShannonResult optimize_shannon(const QubitChannel& ch, std::uint64_t seed = 0);

// Diagnostic variant with three-state ensembles and three-outcome in-plane
// measurements (outcome weights solved from completeness).
ShannonResult optimize_shannon_extended(const QubitChannel& ch, std::uint64_t seed = 0);

}  // namespace qcap
