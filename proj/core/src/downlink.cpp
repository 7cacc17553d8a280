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

#include "smphy/downlink.hpp"

#include <cmath>
#include <string>

#include "smphy/errors.hpp"

namespace smphy {

namespace {

void require_downlink(const ChannelMatrix &h, const char *where) {
    if (h.orientation != LinkDirection::downlink)
        throw invalid_parameter_error(std::string(where) + " expects a downlink-oriented channel");
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

MrtPrecoderBank mrt_precoders(const ChannelMatrix &downlink) {
    require_downlink(downlink, "mrt_precoders");
    const int M = downlink.m_antennas;
    const int P = downlink.p_ports;
    Eigen::MatrixXcd w(M, P);
    for (int p = 0; p < P; ++p) {
        const double row_norm = downlink.entries.row(p).norm();
        if (row_norm == 0.0)
            throw degenerate_channel_error("downlink channel row " + std::to_string(p + 1) +
                                           " has zero power, MRT undefined");
        w.col(p) = downlink.entries.row(p).conjugate().transpose() / row_norm;
    }
    return {std::move(w)};
}

ReferenceSet build_reference_set_downlink(const ChannelMatrix &downlink,
                                          const MrtPrecoderBank &precoders, const Scheme &scheme,
                                          double snr_linear) {
    require_downlink(downlink, "build_reference_set_downlink");
    require_ports(downlink, scheme);
    require_snr(snr_linear);
    // Clean receive vector per beam target: column p of (H * W).
    const Eigen::MatrixXcd beams = downlink.entries * precoders.vectors;
    const double amp = std::sqrt(snr_linear);

    ReferenceSet refs;
    refs.word_bits = scheme.total_bits();
    refs.entries.reserve(scheme.word_count());
    for (std::uint32_t w = 0; w < scheme.word_count(); ++w) {
        const Modulated mod = modulate(BitWord{w, refs.word_bits}, scheme);
        refs.entries.push_back(beams.col(mod.pattern - 1) * (mod.symbol * amp));
    }
    return refs;
}

ReferenceSet build_reference_set_downlink(const ChannelMatrix &downlink, const Scheme &scheme,
                                          double snr_linear) {
    return build_reference_set_downlink(downlink, mrt_precoders(downlink), scheme, snr_linear);
}

DownlinkObservation transmit_downlink(const ChannelMatrix &downlink,
                                      const MrtPrecoderBank &precoders, const BitWord &word,
                                      const Scheme &scheme, double snr_linear, PhiloxRng &rng,
                                      double noise_power) {
    require_downlink(downlink, "transmit_downlink");
    require_ports(downlink, scheme);
    require_snr(snr_linear);
    if (noise_power < 0.0)
        throw invalid_parameter_error("noise power must be >= 0");

    const Modulated mod = modulate(word, scheme);
    Eigen::VectorXcd received = downlink.entries * precoders.vectors.col(mod.pattern - 1) *
                                (mod.symbol * std::sqrt(snr_linear));
    for (int p = 0; p < downlink.p_ports; ++p)
        received(p) += rng.normal_complex(noise_power);
    return {std::move(received)};
}

BitWord detect_downlink(const DownlinkObservation &obs, const ReferenceSet &references) {
    return detail::detect_min_mse(obs.received, references);
}

} // namespace smphy
