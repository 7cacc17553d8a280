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

#include "smphy/channel.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <utility>

#include "smphy/errors.hpp"

namespace smphy {

ScattererSet draw_scatterers(int count, PhiloxRng &rng) {
    if (count < 1)
        throw invalid_parameter_error("scatterer count must be >= 1, got " + std::to_string(count));
    ScattererSet s;
    s.gains.reserve(static_cast<std::size_t>(count));
    s.aod.reserve(static_cast<std::size_t>(count));
    s.aoa.reserve(static_cast<std::size_t>(count));
    const double variance = 1.0 / count;
    for (int q = 0; q < count; ++q) {
        s.gains.push_back(rng.normal_complex(variance));
        s.aod.push_back(rng.angle());
        s.aoa.push_back(rng.angle());
    }
    return s;
}

ScattererSet swap_directions(ScattererSet s) {
    std::swap(s.aod, s.aoa);
    return s;
}

namespace {

void validate_scatterers(const ScattererSet &s) {
    const std::size_t q = s.gains.size();
    if (q == 0)
        throw invalid_parameter_error("empty scatterer set");
    if (s.aod.size() != q || s.aoa.size() != q)
        throw invalid_parameter_error("scatterer gain/angle sequences have mismatched lengths");
}

// Shared assembly kernel: raw(m,p) = sum_q Gamma_q * delta_p(pattern_angle_q)
// * e^{j*pi*sin(steering_angle_q)*m} (m 0-based here).  Uplink and the
// reciprocal downlink use the same summation order, so reciprocity holds
// bitwise, not just to rounding.
Eigen::MatrixXcd raw_matrix(const ScattererSet &s, const AntennaModel &antenna, int m_antennas,
                            const std::vector<double> &pattern_angles,
                            const std::vector<double> &steering_angles) {
    const int p_ports = antenna.port_count();
    Eigen::MatrixXcd raw = Eigen::MatrixXcd::Zero(m_antennas, p_ports);
    std::vector<std::complex<double>> port_gain(static_cast<std::size_t>(p_ports));
    for (int q = 0; q < s.count(); ++q) {
        const std::complex<double> gamma = s.gains[static_cast<std::size_t>(q)];
        for (int p = 0; p < p_ports; ++p)
            port_gain[static_cast<std::size_t>(p)] =
                gamma * antenna.port(p + 1).gain_at(pattern_angles[static_cast<std::size_t>(q)]);
        const std::complex<double> step =
            std::polar(1.0, std::numbers::pi * std::sin(steering_angles[static_cast<std::size_t>(q)]));
        std::complex<double> phase{1.0, 0.0};
        for (int m = 0; m < m_antennas; ++m) {
            for (int p = 0; p < p_ports; ++p)
                raw(m, p) += port_gain[static_cast<std::size_t>(p)] * phase;
            phase *= step;
        }
    }
    return raw;
}

Eigen::MatrixXcd normalized(Eigen::MatrixXcd raw) {
    const double norm2 = raw.squaredNorm();
    if (norm2 == 0.0)
        throw degenerate_channel_error("channel realization has zero energy");
    raw *= std::sqrt(static_cast<double>(raw.size()) / norm2);
    return raw;
}

} // namespace

ChannelMatrix assemble_uplink(const ScattererSet &s, const AntennaModel &antenna, int m_antennas) {
    if (m_antennas < 1)
        throw invalid_parameter_error("antenna element count must be >= 1");
    validate_scatterers(s);
    Eigen::MatrixXcd h = normalized(raw_matrix(s, antenna, m_antennas, s.aod, s.aoa));
    return {std::move(h), LinkDirection::uplink, m_antennas, antenna.port_count()};
}

ChannelMatrix assemble_downlink(const ScattererSet &s, const AntennaModel &antenna, int m_antennas) {
    if (m_antennas < 1)
        throw invalid_parameter_error("antenna element count must be >= 1");
    validate_scatterers(s);
    // Same kernel as uplink with the roles of the angle sets exchanged:
    // pattern gain at the arrival side, steering at the departure side.
    Eigen::MatrixXcd h =
        normalized(raw_matrix(s, antenna, m_antennas, s.aoa, s.aod)).transpose();
    return {std::move(h), LinkDirection::downlink, m_antennas, antenna.port_count()};
}

void dump_channel(const ChannelMatrix &h, std::ostream &out) {
    out << (h.orientation == LinkDirection::uplink ? "uplink" : "downlink") << " " << h.m_antennas
        << " " << h.p_ports << "\n";
    out << std::setprecision(17);
    for (int m = 1; m <= h.m_antennas; ++m)
        for (int p = 1; p <= h.p_ports; ++p) {
            const std::complex<double> v = h.orientation == LinkDirection::uplink
                                               ? h.entries(m - 1, p - 1)
                                               : h.entries(p - 1, m - 1);
            out << m << " " << p << " " << v.real() << " " << v.imag() << "\n";
        }
}

} // namespace smphy
