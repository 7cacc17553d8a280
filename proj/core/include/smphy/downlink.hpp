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

#ifndef SMPHY_DOWNLINK_HPP
#define SMPHY_DOWNLINK_HPP

#include <Eigen/Dense>

#include "smphy/channel.hpp"
#include "smphy/modem.hpp"
#include "smphy/rng.hpp"
#include "smphy/uplink.hpp" // ReferenceSet and the shared detector core

namespace smphy {

// Maximum-ratio-transmission (matched-filter) precoders: column p is the
// unit-norm conjugate of downlink channel row p, steering the array beam at
// object port p.
struct MrtPrecoderBank {
    Eigen::MatrixXcd vectors; // M x P
};

MrtPrecoderBank mrt_precoders(const ChannelMatrix &downlink);

// references[b] = H w^{(p(b))} s(b) sqrt(snr_linear): the noise-free P-port
// receive vector when the base station beamforms at pattern p(b) and sends
// symbol s(b).
ReferenceSet build_reference_set_downlink(const ChannelMatrix &downlink,
                                          const MrtPrecoderBank &precoders, const Scheme &scheme,
                                          double snr_linear);
ReferenceSet build_reference_set_downlink(const ChannelMatrix &downlink, const Scheme &scheme,
                                          double snr_linear);

// Receive vector at the object's P ports.
struct DownlinkObservation {
    Eigen::VectorXcd received;
};

// One symbol period: y = H w^{(p)} s sqrt(P_U) + v with v a P-vector of
// i.i.d. complex Gaussian noise of per-element variance noise_power.
DownlinkObservation transmit_downlink(const ChannelMatrix &downlink,
                                      const MrtPrecoderBank &precoders, const BitWord &word,
                                      const Scheme &scheme, double snr_linear, PhiloxRng &rng,
                                      double noise_power = 1.0);

// Same minimum-MSE argmin contract as detect_uplink (lowest index on ties).
BitWord detect_downlink(const DownlinkObservation &obs, const ReferenceSet &references);

} // namespace smphy

#endif // SMPHY_DOWNLINK_HPP
