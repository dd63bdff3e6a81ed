#include "qcap/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qcap {

using nlohmann::json;

double round_sig9(double v) {
    if (!std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::strtod(buf, nullptr);
}

json bloch_to_json(const BlochVector& w) {
    return json::array({round_sig9(w.x), round_sig9(w.y), round_sig9(w.z)});
}

json channel_to_json(const QubitChannel& ch) {
    return json{{"lambda", {ch.lambda[0], ch.lambda[1], ch.lambda[2]}},
                {"shift", {ch.shift[0], ch.shift[1], ch.shift[2]}}};
}

namespace {

std::array<double, 3> triple(const json& j, const char* key) {
    const json& a = j.at(key);
    if (!a.is_array() || a.size() != 3)
        throw std::invalid_argument(std::string(key) + " must be an array of 3 numbers");
    return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

}  // namespace

QubitChannel channel_from_json(const json& j, bool checked) {
    if (j.contains("family")) {
        std::string fam = j.at("family").get<std::string>();
        if (fam == "identity") return make_identity();
        if (fam == "shifted_depolarizing")
            return make_shifted_depolarizing(j.at("mu").get<double>());
        if (fam == "amplitude_damping") return make_amplitude_damping(j.at("mu").get<double>());
        if (fam == "stretched")
            return make_stretched(j.at("mu").get<double>(), j.at("s").get<double>());
        if (fam == "squeezed")
            return make_squeezed(j.at("mu").get<double>(), j.at("q").get<double>());
        if (fam == "qc") return make_qc(j.at("t3").get<double>(), j.at("mu").get<double>());
        if (fam == "cq")
            return make_cq(j.at("t1").get<double>(), j.at("t2").get<double>(),
                           j.at("t3").get<double>(), j.at("mu").get<double>());
        if (fam == "mix")
            return mix_channels(j.at("a").get<double>(),
                                channel_from_json(j.at("first"), checked),
                                channel_from_json(j.at("second"), checked));
        throw std::invalid_argument("unknown channel family: " + fam);
    }
    ChannelOptions opts;
    if (!checked) {
        opts.check_positivity = false;
        opts.require_cp = false;
    }
    return make_channel(triple(j, "lambda"), j.contains("shift") ? triple(j, "shift")
                                                                 : std::array<double, 3>{0, 0, 0},
                        opts);
}

json ensemble_to_json(const Ensemble& e) {
    json arr = json::array();
    for (const auto& m : e.members)
        arr.push_back(json{{"p", round_sig9(m.prob)}, {"w", bloch_to_json(m.state)}});
    return arr;
}

json capacity_result_to_json(const CapacityResult& r) {
    return json{{"value", round_sig9(r.value)},
                {"ensemble", ensemble_to_json(r.ensemble)},
                {"avg_output", bloch_to_json(r.avg_output)},
                {"equidistance_residual", round_sig9(r.equidistance_residual)},
                {"evaluations", r.evaluations}};
}

json shannon_result_to_json(const ShannonResult& r) {
    json povm = json::array();
    for (const auto& el : r.povm.elements)
        povm.push_back(json{{"weight", round_sig9(el.weight)},
                            {"direction", bloch_to_json(el.direction)}});
    return json{{"value", round_sig9(r.value)},
                {"ensemble", ensemble_to_json(r.ensemble)},
                {"avg_output", bloch_to_json(r.avg_output)},
                {"equidistance_residual", nullptr},
                {"evaluations", r.evaluations},
                {"measurement_axis", bloch_to_json(r.measurement_axis)},
                {"povm", povm}};
}

}  // namespace qcap
