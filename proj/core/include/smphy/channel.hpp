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

#ifndef SMPHY_CHANNEL_HPP
#define SMPHY_CHANNEL_HPP

#include <complex>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "smphy/patterns.hpp"
#include "smphy/rng.hpp"

namespace smphy {

// One 2-D multipath realization: Q planar scatterers, each with a complex
// gain, an angle of departure and an angle of arrival.
struct ScattererSet {
    std::vector<std::complex<double>> gains; // Gamma_q
    std::vector<double> aod;                 // departure angles, [0, 2*pi)
    std::vector<double> aoa;                 // arrival angles, [0, 2*pi)

    int count() const { return static_cast<int>(gains.size()); }
};

// Q i.i.d. scatterers: complex Gaussian gains with E|Gamma_q|^2 = 1/Q (so the
// expected total path power is 1) and angles uniform over the circle.
ScattererSet draw_scatterers(int count, PhiloxRng &rng);

// Exchange departure and arrival angles (turns an uplink draw into the
// reciprocal downlink draw).
ScattererSet swap_directions(ScattererSet s);

enum class LinkDirection { uplink, downlink };

// A normalized narrowband channel between a P-port antenna and an M-element
// half-wavelength ULA.  Uplink matrices are M x P (antenna m, port p);
// downlink matrices are P x M.  Every realization satisfies
// |H|_F^2 / (P*M) = 1 exactly.
struct ChannelMatrix {
    Eigen::MatrixXcd entries;
    LinkDirection orientation;
    int m_antennas;
    int p_ports;
};

// Uplink entries: H(m,p) = rho * sum_q Gamma_q * delta_p(aod_q)
//                          * e^{j*pi*sin(aoa_q)*(m-1)}
// with rho the per-realization normalizer.  Port patterns are evaluated at
// the departure side (the compact antenna transmits), array steering at the
// arrival side (the ULA receives).
ChannelMatrix assemble_uplink(const ScattererSet &s, const AntennaModel &antenna, int m_antennas);

// Downlink entries: H(p,m) = rho * sum_q Gamma_q * delta_p(aoa_q)
//                            * e^{j*pi*sin(aod_q)*(m-1)}
// (the ULA transmits, the compact antenna receives).
ChannelMatrix assemble_downlink(const ScattererSet &s, const AntennaModel &antenna, int m_antennas);

// Debug dump: header "uplink|downlink M P", then one line "m p re im" per
// entry (both indices 1-based), 17 significant digits.
void dump_channel(const ChannelMatrix &h, std::ostream &out);

} // namespace smphy

#endif // SMPHY_CHANNEL_HPP
