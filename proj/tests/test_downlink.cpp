// SPDX-License-Identifier: Apache-2.0
//
// smphy - link-level simulator for spatial modulation with compact
// reconfigurable antennas and massive MIMO base stations
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "smphy/channel.hpp"
#include "smphy/downlink.hpp"
#include "smphy/errors.hpp"
#include "smphy/modem.hpp"
#include "smphy/patterns.hpp"
#include "smphy/rng.hpp"

using namespace smphy;
using cplx = std::complex<double>;

namespace {

AntennaModel reference_antenna() {
    return synthesize_antenna(4, builtin_psi_table(1), AngularGrid(360), "table1");
}

ChannelMatrix random_downlink(std::uint64_t seed, int m = 8) {
    const auto ant = reference_antenna();
    PhiloxRng rng(seed);
    return assemble_downlink(draw_scatterers(10, rng), ant, m);
}

ChannelMatrix manual_downlink(Eigen::MatrixXcd entries) {
    ChannelMatrix h;
    h.p_ports = static_cast<int>(entries.rows());
    h.m_antennas = static_cast<int>(entries.cols());
    h.orientation = LinkDirection::downlink;
    h.entries = std::move(entries);
    return h;
}

} // namespace

TEST_SUITE("downlink") {

TEST_CASE("precoders are unit-norm conjugated rows") {
    Eigen::MatrixXcd m(2, 3);
    m << cplx(1, 0), cplx(0, 2), cplx(-1, 1), cplx(2, 2), cplx(0, 0), cplx(1, -1);
    const auto bank = mrt_precoders(manual_downlink(m));
    REQUIRE(bank.vectors.rows() == 3);
    REQUIRE(bank.vectors.cols() == 2);
    for (int p = 0; p < 2; ++p) {
        const Eigen::VectorXcd expect = m.row(p).conjugate().transpose() / m.row(p).norm();
        CHECK((bank.vectors.col(p) - expect).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK(std::abs(bank.vectors.col(p).norm() - 1.0) <= 1e-12);
    }
}

TEST_CASE("precoder norms on random channels") {
    for (std::uint64_t seed : {41ull, 42ull}) {
        const auto h = random_downlink(seed, 16);
        const auto bank = mrt_precoders(h);
        for (int p = 0; p < 4; ++p)
            CHECK(std::abs(bank.vectors.col(p).norm() - 1.0) <= 1e-12);
        // beamforming gain: the targeted port sees ||row p|| on its own beam
        for (int p = 0; p < 4; ++p) {
            const cplx gain = (h.entries.row(p) * bank.vectors.col(p)).value();
            CHECK(std::abs(gain - cplx(h.entries.row(p).norm(), 0.0)) <= 1e-12);
        }
    }
}

TEST_CASE("precoder guards") {
    const auto ant = reference_antenna();
    PhiloxRng rng(43);
    const auto up = assemble_uplink(draw_scatterers(10, rng), ant, 8);
    CHECK_THROWS_AS(mrt_precoders(up), invalid_parameter_error); // wrong orientation

    Eigen::MatrixXcd with_zero_row = Eigen::MatrixXcd::Ones(2, 3);
    with_zero_row.row(1).setZero();
    CHECK_THROWS_AS(mrt_precoders(manual_downlink(with_zero_row)), degenerate_channel_error);
}

TEST_CASE("reference set enumerates beams times symbols") {
    const auto h = random_downlink(44);
    const Scheme scheme = scheme_from_token("16qam-p2");
    const double snr = 1.5;
    const auto refs = build_reference_set_downlink(h, scheme, snr);
    REQUIRE(refs.entries.size() == 16);
    CHECK(refs.word_bits == 4);

    const auto bank = mrt_precoders(h);
    const Eigen::MatrixXcd beams = h.entries * bank.vectors; // P x P
    for (std::uint32_t w = 0; w < 16; ++w) {
        const auto mod = modulate(BitWord{w, 4}, scheme);
        CHECK(mod.pattern == 2); // fixed-pattern scheme always beams at port 2
        const Eigen::VectorXcd expect =
            beams.col(mod.pattern - 1) * (mod.symbol * std::sqrt(snr));
        CHECK((refs.entries[w] - expect).cwiseAbs().maxCoeff() <= 1e-12);
    }

    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = a + 1; b < 16; ++b)
            CHECK((refs.entries[a] - refs.entries[b]).norm() > 1e-9);
}

TEST_CASE("transmit power per symbol equals the configured power") {
    const auto h = random_downlink(45, 32);
    const auto bank = mrt_precoders(h);
    const Scheme scheme = scheme_from_token("qpsk-sm4");
    const double snr = 2.0;
    // average over the word set of || w^{(p)} s sqrt(P_U) ||^2 = P_U
    double acc = 0.0;
    for (std::uint32_t w = 0; w < scheme.word_count(); ++w) {
        const auto mod = modulate(BitWord{w, 4}, scheme);
        acc += std::norm(mod.symbol) * snr * bank.vectors.col(mod.pattern - 1).squaredNorm();
    }
    CHECK(std::abs(acc / scheme.word_count() - snr) <= 1e-12);
}

TEST_CASE("noise-free transmission reproduces the reference") {
    const auto h = random_downlink(46);
    const auto bank = mrt_precoders(h);
    PhiloxRng rng(1);
    for (const auto &scheme : downlink_schemes()) {
        const auto refs = build_reference_set_downlink(h, bank, scheme, 2.0);
        for (std::uint32_t w = 0; w < scheme.word_count(); ++w) {
            const BitWord word{w, scheme.total_bits()};
            const auto obs = transmit_downlink(h, bank, word, scheme, 2.0, rng, 0.0);
            // transmit and reference-set paths associate the products
            // differently, so agreement is to rounding, not bitwise
            CHECK((obs.received - refs.entries[w]).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK(detect_downlink(obs, refs) == word);
        }
    }
}

TEST_CASE("observation dimension is the port count") {
    const auto h = random_downlink(47);
    const auto bank = mrt_precoders(h);
    PhiloxRng rng(2);
    const Scheme scheme = scheme_from_token("qpsk-sm4");
    const auto obs = transmit_downlink(h, bank, BitWord{5, 4}, scheme, 1.0, rng);
    CHECK(obs.received.size() == 4);
}

TEST_CASE("detection shares the minimum-MSE tie policy") {
    ReferenceSet refs;
    refs.word_bits = 1;
    Eigen::VectorXcd a(2), b(2);
    a << cplx(1, 0), cplx(0, 0);
    b << cplx(-1, 0), cplx(0, 0);
    refs.entries = {a, b};
    DownlinkObservation obs;
    obs.received = Eigen::VectorXcd::Zero(2); // equidistant
    CHECK(detect_downlink(obs, refs) == BitWord{0, 1});
}

TEST_CASE("guards") {
    const auto h = random_downlink(48);
    const auto bank = mrt_precoders(h);
    PhiloxRng rng(3);
    CHECK_THROWS_AS(build_reference_set_downlink(h, scheme_from_token("qpsk-sm4"), 0.0),
                    invalid_parameter_error);
    CHECK_THROWS_AS(transmit_downlink(h, bank, BitWord{0, 4}, scheme_from_token("qpsk-sm4"), 1.0,
                                      rng, -1.0),
                    invalid_parameter_error);

    Eigen::MatrixXcd two_ports = Eigen::MatrixXcd::Identity(2, 6);
    CHECK_THROWS_AS(
        build_reference_set_downlink(manual_downlink(two_ports), scheme_from_token("qpsk-sm4"), 1.0),
        invalid_parameter_error);
}

} // TEST_SUITE
