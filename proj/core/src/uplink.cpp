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

#include "smphy/uplink.hpp"

#include <cmath>
#include <string>

#include "smphy/errors.hpp"

namespace smphy {

namespace {

void require_uplink(const ChannelMatrix &h, const char *where) {
    if (h.orientation != LinkDirection::uplink)
        throw invalid_parameter_error(std::string(where) + " expects an uplink-oriented channel");
}

void require_ports(const ChannelMatrix &h, const Scheme &scheme) {
    if (scheme.min_ports() > h.p_ports)
        throw invalid_parameter_error("scheme '" + scheme.name + "' addresses " +
                                      std::to_string(scheme.min_ports()) +
                                      " patterns but the channel has " +
                                      std::to_string(h.p_ports) + " ports");
}

void require_snr(double snr_linear) {
    if (!(snr_linear > 0.0) || !std::isfinite(snr_linear))
        throw invalid_parameter_error("snr must be positive and finite");
}

} // namespace

MrcCombiner mrc_matrix(const ChannelMatrix &uplink) {
    require_uplink(uplink, "mrc_matrix");
    const int M = uplink.m_antennas;
    const int P = uplink.p_ports;
    Eigen::MatrixXcd gamma(P, M);
    for (int p = 0; p < P; ++p) {
        const double col_power = uplink.entries.col(p).squaredNorm();
        if (col_power == 0.0)
            throw degenerate_channel_error("uplink channel column " + std::to_string(p + 1) +
                                           " has zero power, MRC undefined");
        gamma.row(p) = uplink.entries.col(p).conjugate().transpose() / col_power;
    }
    return {std::move(gamma)};
}

ReferenceSet build_reference_set(const ChannelMatrix &uplink, const MrcCombiner &combiner,
                                 const Scheme &scheme, double snr_linear) {
    require_uplink(uplink, "build_reference_set");
    require_ports(uplink, scheme);
    require_snr(snr_linear);
    // Combined clean response per port: column p of (gamma * H); the one-hot
    // selector turns H x into a column pick.
    const Eigen::MatrixXcd combined = combiner.gamma * uplink.entries;
    const double amp = std::sqrt(snr_linear);

    ReferenceSet refs;
    refs.word_bits = scheme.total_bits();
    refs.entries.reserve(scheme.word_count());
    for (std::uint32_t w = 0; w < scheme.word_count(); ++w) {
        const Modulated mod = modulate(BitWord{w, refs.word_bits}, scheme);
        refs.entries.push_back(combined.col(mod.pattern - 1) * (mod.symbol * amp));
    }
    return refs;
}

ReferenceSet build_reference_set(const ChannelMatrix &uplink, const Scheme &scheme,
                                 double snr_linear) {
    return build_reference_set(uplink, mrc_matrix(uplink), scheme, snr_linear);
}

Observation transmit_uplink(const ChannelMatrix &uplink, const MrcCombiner &combiner,
                            const BitWord &word, const Scheme &scheme, double snr_linear,
                            PhiloxRng &rng, double noise_power) {
    require_uplink(uplink, "transmit_uplink");
    require_ports(uplink, scheme);
    require_snr(snr_linear);
    if (noise_power < 0.0)
        throw invalid_parameter_error("noise power must be >= 0");

    const Modulated mod = modulate(word, scheme);
    Eigen::VectorXcd received =
        uplink.entries.col(mod.pattern - 1) * (mod.symbol * std::sqrt(snr_linear));
    for (int m = 0; m < uplink.m_antennas; ++m)
        received(m) += rng.normal_complex(noise_power);
    return {combiner.gamma * received};
}

BitWord detail::detect_min_mse(const Eigen::VectorXcd &observed, const ReferenceSet &references) {
    if (references.entries.empty())
        throw invalid_parameter_error("empty reference set");
    std::uint32_t best = 0;
    double best_d = (observed - references.entries.front()).squaredNorm();
    for (std::uint32_t w = 1; w < references.entries.size(); ++w) {
        const double d = (observed - references.entries[w]).squaredNorm();
        if (d < best_d) { // strict: ties keep the lowest word index
            best_d = d;
            best = w;
        }
    }
    return {best, references.word_bits};
}

BitWord detect_uplink(const Observation &obs, const ReferenceSet &references) {
    return detail::detect_min_mse(obs.combined, references);
}

double bit_error_rate(const BitWord &sent, const BitWord &detected) {
    if (sent.length != detected.length || sent.length == 0)
        throw invalid_parameter_error("bit words have different or zero lengths");
    return static_cast<double>(hamming_distance(sent, detected)) / sent.length;
}

} // namespace smphy
