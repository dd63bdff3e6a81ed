// Golden-value table behind the reproduce task: named scenario quantities
// with expected values and tolerances.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qcap/capacity.hpp"
#include "qcap/channel.hpp"
#include "qcap/shannon.hpp"

namespace qcap_cli {

struct ReproRow {
    std::string name;
    double expected = 0.0;
    double tolerance = 0.0;
    double observed = 0.0;
    bool pass = false;
    std::string note;
};

inline std::vector<ReproRow> run_reproduce_rows(const qcap::OptimizeOptions& opts,
                                                std::uint64_t seed) {
    using namespace qcap;
    std::vector<ReproRow> rows;
    auto add = [&](std::string name, double expected, double tol, double observed,
                   std::string note = "") {
        rows.push_back({std::move(name), expected, tol, observed,
                        std::abs(observed - expected) <= tol, std::move(note)});
    };

    {
        auto ch = make_shifted_depolarizing(0.5);
        auto v = optimize_vertical(ch);
        auto h = optimize_horizontal(ch);
        add("depol_vertical_value", 0.32193, 5e-5, v.value);
        add("depol_vertical_height", 0.600, 5e-3, v.avg_output.z);
        add("depol_horizontal_value", 0.2144, 5e-5, h.value);
        add("depol_horizontal_height", 0.474, 5e-3, h.avg_output.z,
            "reference height disagrees with the solver optimum near 0.574; "
            "the capacity value itself matches");
    }
    {
        auto v = optimize_horizontal(make_amplitude_damping(0.5));
        add("damping_horizontal_value", 0.4717, 5e-5, v.value);
        add("damping_horizontal_height", 0.596, 5e-3, v.avg_output.z);
    }
    add("stretched_crossing", 0.6015, 5e-4,
        find_crossing([](double s) { return make_stretched(0.5, s); }, 0.5, 0.7071, 1e-6));
    {
        auto ch = make_stretched(0.5, 0.6);
        auto n2 = optimize_n_state(ch, 2, PlaneRestriction::none, seed, opts);
        auto n3 = optimize_n_state(ch, 3, PlaneRestriction::none, seed, opts);
        add("stretched_two_state", 0.32193, 5e-5, n2.value);
        add("stretched_three_state", 0.32499, 5e-5, n3.value);
        const auto& m = n3.ensemble.members;
        if (m.size() == 3) {
            add("stretched_apex_weight", 0.402, 5e-3, m[0].prob);
            add("stretched_wing_x", 0.93681, 5e-3, std::abs(m[1].state.x));
            add("stretched_wing_z", -0.34984, 5e-3, m[1].state.z);
        } else {
            add("stretched_apex_weight", 0.402, 5e-3, -1.0, "expected a three-state optimum");
            add("stretched_wing_x", 0.93681, 5e-3, -1.0, "expected a three-state optimum");
            add("stretched_wing_z", -0.34984, 5e-3, 1.0, "expected a three-state optimum");
        }
    }
    {
        auto ch = make_stretched(0.8, 0.84);
        auto n2 = optimize_n_state(ch, 2, PlaneRestriction::none, seed, opts);
        auto n3 = optimize_n_state(ch, 3, PlaneRestriction::none, seed, opts);
        add("stretched_wide_two_state", 0.61823, 5e-5, n2.value);
        add("stretched_wide_three_state", 0.62088, 5e-5, n3.value);
    }
    {
        auto ch = make_squeezed(0.5, 0.435);
        add("squeezed_vertical", 0.2128, 1e-4, optimize_vertical(ch).value);
        add("squeezed_horizontal", 0.2132, 1e-4, optimize_horizontal(ch).value);
        auto n3 = optimize_n_state(ch, 3, PlaneRestriction::none, seed, opts);
        add("squeezed_three_state", 0.2140, 1e-4, n3.value);
        add("squeezed_shannon", 0.2128, 1e-4, optimize_shannon(ch, seed).value);
        double q = find_crossing([](double v) { return make_squeezed(0.5, v); }, 0.4, 0.5, 1e-6);
        add("squeezed_crossing", 0.43535, 5e-4, q);
        add("squeezed_crossing_value", 0.21325, 5e-5,
            optimize_vertical(make_squeezed(0.5, q)).value);
    }
    return rows;
}

}  // namespace qcap_cli
