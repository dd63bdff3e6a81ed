#include "qcap/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace qcap {

namespace {

// Sort keys quantize to 1e-7 so near-ties order by the next coordinate
// instead of by noise bits.
auto member_key(const WeightedState& m) {
    auto q = [](double v) { return std::llround(v * 1e7); };
    return std::make_tuple(q(m.state.z), q(m.state.x), q(m.state.y), q(m.prob));
}

void sort_members(Ensemble& e) {
    std::sort(e.members.begin(), e.members.end(),
              [](const WeightedState& a, const WeightedState& b) {
                  auto ka = member_key(a), kb = member_key(b);
                  if (ka != kb) return ka > kb;
                  return std::make_tuple(a.state.z, a.state.x, a.state.y, a.prob) >
                         std::make_tuple(b.state.z, b.state.x, b.state.y, b.prob);
              });
}

Ensemble merged(const Ensemble& e, double merge_tol) {
    Ensemble byweight = e;
    std::sort(byweight.members.begin(), byweight.members.end(),
              [](const WeightedState& a, const WeightedState& b) { return a.prob > b.prob; });
    Ensemble out;
    for (const auto& m : byweight.members) {
        bool absorbed = false;
        for (auto& o : out.members) {
            if (distance(o.state, m.state) <= merge_tol) {
                o.prob += m.prob;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) out.members.push_back(m);
    }
    return out;
}

}  // namespace

BlochVector Ensemble::average() const {
    BlochVector w;
    for (const auto& m : members) w = w + m.prob * m.state;
    return w;
}

void Ensemble::validate() const {
    double total = 0.0;
    for (const auto& m : members) {
        if (m.prob < -1e-12) throw std::invalid_argument("ensemble probability is negative");
        if (m.state.norm() > 1.0 + 1e-9)
            throw std::invalid_argument("ensemble state lies outside the Bloch ball");
        total += m.prob;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("ensemble probabilities do not sum to 1");
}

Ensemble average_ensembles(const Ensemble& a, const Ensemble& b) {
    a.validate();
    b.validate();
    Ensemble cat;
    for (const auto& m : a.members) cat.members.push_back({0.5 * m.prob, m.state});
    for (const auto& m : b.members) cat.members.push_back({0.5 * m.prob, m.state});
    return merged(cat, 1e-12);
}

Ensemble pruned_merged(const Ensemble& e, double prune_tol, double merge_tol) {
    Ensemble kept;
    double total = 0.0;
    for (const auto& m : e.members) {
        if (m.prob >= prune_tol) {
            kept.members.push_back(m);
            total += m.prob;
        }
    }
    if (total > 0.0)
        for (auto& m : kept.members) m.prob /= total;
    return merged(kept, merge_tol);
}

std::size_t effective_size(const Ensemble& e) { return pruned_merged(e).members.size(); }

bool ensemble_greater(const Ensemble& a, const Ensemble& b) {
    for (std::size_t i = 0; i < std::min(a.members.size(), b.members.size()); ++i) {
        auto ka = member_key(a.members[i]), kb = member_key(b.members[i]);
        if (ka != kb) return ka > kb;
    }
    return a.members.size() > b.members.size();
}

namespace {

// Components below the merge tolerance carry no information at the
// resolution the canonical form promises; zero them so orientation
// choices are driven by structure rather than solver noise.
void snap_axes(Ensemble& e) {
    for (auto& m : e.members) {
        if (std::abs(m.state.x) < 1e-6) m.state.x = 0.0;
        if (std::abs(m.state.y) < 1e-6) m.state.y = 0.0;
        if (std::abs(m.state.z) < 1e-6) m.state.z = 0.0;
    }
}

}  // namespace

Ensemble canonicalize(Ensemble e) {
    e = pruned_merged(e);
    snap_axes(e);
    sort_members(e);
    return e;
}

Ensemble canonicalize(Ensemble e, const QubitChannel& ch) {
    e = pruned_merged(e);
    snap_axes(e);

    const bool x_sym = ch.shift[0] == 0.0;
    const bool y_sym = ch.shift[1] == 0.0;
    const bool z_rot = x_sym && y_sym && ch.lambda[0] == ch.lambda[1];

    if (z_rot) {
        // Rotate about z so the member with the largest transverse part
        // lands on the x >= 0 half of the x-z plane.
        const WeightedState* ref = nullptr;
        double best_t = 1e-9;
        for (const auto& m : e.members) {
            double t = std::hypot(m.state.x, m.state.y);
            if (t > best_t + 1e-15 ||
                (std::abs(t - best_t) <= 1e-15 && ref && m.state.z > ref->state.z)) {
                best_t = t;
                ref = &m;
            }
        }
        if (ref) {
            double phi = std::atan2(ref->state.y, ref->state.x);
            double c = std::cos(phi), s = std::sin(phi);
            for (auto& m : e.members) {
                double x = c * m.state.x + s * m.state.y;
                double y = -s * m.state.x + c * m.state.y;
                m.state.x = x;
                m.state.y = y;
            }
        }
    }

    Ensemble best = e;
    sort_members(best);
    auto consider = [&](Ensemble cand) {
        sort_members(cand);
        if (ensemble_greater(cand, best)) best = cand;
    };
    if (x_sym) {
        Ensemble c = e;
        for (auto& m : c.members) m.state.x = -m.state.x;
        consider(c);
    }
    if (y_sym) {
        Ensemble c = e;
        for (auto& m : c.members) m.state.y = -m.state.y;
        consider(c);
    }
    if (x_sym && y_sym) {
        Ensemble c = e;
        for (auto& m : c.members) {
            m.state.x = -m.state.x;
            m.state.y = -m.state.y;
        }
        consider(c);
    }
    snap_axes(best);
    return best;
}

}  // namespace qcap
