#include <doctest.h>

#include <cmath>
#include <complex>

#include "qcap/channel.hpp"
#include "qcap/choi.hpp"
#include "support/oracles.hpp"

using namespace qcap;

namespace {

QubitChannel raw_channel(const std::array<double, 3>& lambda, const std::array<double, 3>& shift) {
    ChannelOptions opts;
    opts.check_positivity = false;
    opts.require_cp = false;
    return make_channel(lambda, shift, opts);
}

}  // namespace

TEST_CASE("choi eigenvalues of reference maps") {
    auto id_eigs = choi_eigenvalues(choi_matrix(make_identity()));
    CHECK(std::abs(id_eigs[0]) < 1e-14);
    CHECK(std::abs(id_eigs[1]) < 1e-14);
    CHECK(std::abs(id_eigs[2]) < 1e-14);
    CHECK(id_eigs[3] == doctest::Approx(2.0).epsilon(1e-14));

    // total erasure to the maximally mixed state
    auto erase = raw_channel({0, 0, 0}, {0, 0, 0});
    auto eigs = choi_eigenvalues(choi_matrix(erase));
    for (double v : eigs) CHECK(v == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("choi matrix is hermitian with trace 2") {
    oracle::TestRng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        auto ch = raw_channel({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)},
                              {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)});
        auto c = choi_matrix(ch);
        std::complex<double> tr = 0.0;
        for (int i = 0; i < 4; ++i) tr += c.at(i, i);
        CHECK(std::abs(tr - 2.0) < 1e-14);
        for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 4; ++col)
                CHECK(std::abs(c.at(r, col) - std::conj(c.at(col, r))) < 1e-14);
    }
}

TEST_CASE("choi matrix matches the Kraus construction for amplitude damping") {
    for (double mu : {0.25, 0.5, 0.8}) {
        auto lib = choi_matrix(make_amplitude_damping(mu));
        auto ref = oracle::choi_from_kraus(oracle::damping_kraus(mu));
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(std::abs(lib.at(r, c) - ref(r, c)) < 1e-12);
        CHECK(std::abs(min_choi_eigenvalue(make_amplitude_damping(mu))) < 1e-12);
    }
}

TEST_CASE("choi construction is affine in the channel") {
    oracle::TestRng rng(32);
    auto channels = oracle::test_channels();
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t i = std::size_t(rng.uniform() * channels.size()) % channels.size();
        std::size_t j = std::size_t(rng.uniform() * channels.size()) % channels.size();
        double a = rng.uniform();
        auto mixed = choi_matrix(mix_channels(a, channels[i], channels[j]));
        auto ci = choi_matrix(channels[i]);
        auto cj = choi_matrix(channels[j]);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                CHECK(std::abs(mixed.at(r, c) - (a * ci.at(r, c) + (1.0 - a) * cj.at(r, c))) <
                      1e-12);
    }
}

TEST_CASE("cp decision agrees with the analytic block conditions") {
    oracle::TestRng rng(33);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::array<double, 3> lambda{rng.uniform(-1.1, 1.1), rng.uniform(-1.1, 1.1),
                                     rng.uniform(-1.1, 1.1)};
        double t3 = rng.uniform(-0.7, 0.7);
        auto ch = raw_channel(lambda, {0, 0, t3});
        double min_eig = min_choi_eigenvalue(ch);
        if (std::abs(min_eig) <= 1e-8) continue;  // too close to the boundary to classify
        CHECK(is_cp(ch) == oracle::cp_z_analytic(lambda, t3));
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("is_cp on the named families") {
    for (const auto& ch : oracle::test_channels()) CHECK(is_cp(ch));
    CHECK_FALSE(is_cp(raw_channel({1.0, -1.0, 1.0}, {0, 0, 0})));
    CHECK_FALSE(is_cp(raw_channel({0.72, 0.72, 0.5}, {0, 0, 0.5})));
    CHECK_FALSE(is_cp(make_stretched(0.5, 0.75, /*allow_out_of_range=*/true)));
    CHECK(is_cp(make_stretched(0.5, 0.70, /*allow_out_of_range=*/true)));
}
