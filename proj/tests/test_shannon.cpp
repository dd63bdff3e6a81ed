#include <doctest.h>

#include <cmath>

#include "qcap/bloch.hpp"
#include "qcap/capacity.hpp"
#include "qcap/channel.hpp"
#include "qcap/shannon.hpp"
#include "support/oracles.hpp"

using namespace qcap;

namespace {

Povm trine_povm() {
    const double t = 2.0 * M_PI / 3.0;
    Povm m;
    for (int k = 0; k < 3; ++k)
        m.elements.push_back({1.0 / 3.0, {std::sin(k * t), 0.0, std::cos(k * t)}});
    return m;
}

}  // namespace

TEST_CASE("povm validation") {
    CHECK_NOTHROW(Povm::projective({0, 0, 1}).validate());
    CHECK_NOTHROW(trine_povm().validate());

    Povm neg{{{-0.1, {0, 0, 1}}, {1.1, {0, 0, -1}}}};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);

    Povm long_dir{{{0.5, {1.5, 0, 0}}, {0.5, {-1.5, 0, 0}}}};
    CHECK_THROWS_AS(long_dir.validate(), std::invalid_argument);

    Povm not_identity{{{0.5, {0, 0, 1}}, {0.5, {0, 0, 1}}}};
    CHECK_THROWS_AS(not_identity.validate(), std::invalid_argument);

    Povm short_sum{{{0.4, {0, 0, 1}}, {0.4, {0, 0, -1}}}};
    CHECK_THROWS_AS(short_sum.validate(), std::invalid_argument);

    CHECK_THROWS_AS(Povm::projective({0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Povm::projective({0.5, 0, 0.5}), std::invalid_argument);
}

TEST_CASE("accessible information reference values") {
    Ensemble poles{{{0.5, {0, 0, 1}}, {0.5, {0, 0, -1}}}};
    auto mz = Povm::projective({0, 0, 1});
    auto d = make_shifted_depolarizing(0.5);
    // outputs: north pole and center, measured along z
    CHECK(accessible_information(d, poles, mz) ==
          doctest::Approx(binary_entropy(0.75) - 0.5).epsilon(1e-14));
    CHECK(accessible_information(d, poles, mz) ==
          doctest::Approx(0.311278124459133).epsilon(1e-12));

    auto id = make_identity();
    CHECK(accessible_information(id, poles, mz) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(accessible_information(id, poles, Povm::projective({1, 0, 0})) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("accessible information never exceeds the Holevo quantity") {
    oracle::TestRng rng(51);
    auto channels = oracle::test_channels();
    for (int trial = 0; trial < 300; ++trial) {
        const auto& ch = channels[trial % channels.size()];
        auto e = rng.ensemble(2 + trial % 3);
        Povm m = trial % 2 == 0 ? Povm::projective(rng.sphere()) : trine_povm();
        CHECK(accessible_information(ch, e, m) <= chi(ch, e) + 1e-10);
    }
}

TEST_CASE("shannon search on a channel with commuting optimal outputs") {
    // outputs of the poles lie on the z-axis, so measuring along z loses
    // nothing and the one-shot Shannon value meets the Holevo one
    auto ch = make_stretched(0.5, 0.6);
    auto r = optimize_shannon(ch);
    CHECK(r.value == doctest::Approx(0.321928095).epsilon(1e-6));
    REQUIRE(r.ensemble.members.size() == 2);
    CHECK(r.ensemble.members[0].prob == doctest::Approx(0.6).epsilon(1e-3));
    CHECK(std::abs(r.ensemble.members[0].state.z) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(r.measurement_axis.z == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(r.measurement_axis.x) <= 1e-5);
}

TEST_CASE("shannon search on the squeezed channel") {
    auto ch = make_squeezed(0.5, 0.435);
    auto r = optimize_shannon(ch);
    CHECK(r.value == doctest::Approx(0.212803).epsilon(1e-4));
    REQUIRE(r.ensemble.members.size() == 2);
    BlochVector w1 = r.ensemble.members[0].state, w2 = r.ensemble.members[1].state;
    CHECK(dot(w1, w2) <= -0.999);  // antipodal input pair

    // reported measurement reproduces the reported value
    CHECK(accessible_information(ch, r.ensemble, r.povm) ==
          doctest::Approx(r.value).epsilon(1e-9));

    // the axis is locally optimal for the reported ensemble
    double phi = std::atan2(r.measurement_axis.x, r.measurement_axis.z);
    for (double dphi : {-0.01, 0.01}) {
        BlochVector axis{std::sin(phi + dphi), 0.0, std::cos(phi + dphi)};
        CHECK(accessible_information(ch, r.ensemble, Povm::projective(axis)) <=
              r.value + 1e-9);
    }

    // one-shot readout cannot beat the regularized-ensemble bound
    auto g = optimize_global(ch, 3);
    CHECK(r.value <= g.best.value + 1e-6);
}

TEST_CASE("shannon search is deterministic and respects per-ensemble bounds") {
    auto ch = make_squeezed(0.5, 0.435);
    auto a = optimize_shannon(ch, 11);
    auto b = optimize_shannon(ch, 11);
    CHECK(a.value == b.value);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.value <= chi(ch, a.ensemble) + 1e-9);
}

TEST_CASE("three-outcome search brackets the two-outcome one") {
    auto ch = make_squeezed(0.5, 0.435);
    auto two = optimize_shannon(ch);
    auto three = optimize_shannon_extended(ch);
    CHECK(three.value >= two.value - 1e-3);
    CHECK(three.value <= chi(ch, three.ensemble) + 1e-9);

    double wsum = 0.0;
    BlochVector dsum;
    for (const auto& el : three.povm.elements) {
        CHECK(el.weight >= 0.0);
        CHECK(el.direction.norm() <= 1.0 + 1e-9);
        wsum += el.weight;
        dsum = dsum + el.weight * el.direction;
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(dsum.norm() <= 1e-8);
}

TEST_CASE("shannon search on the identity channel") {
    auto r = optimize_shannon(make_identity());
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
}
