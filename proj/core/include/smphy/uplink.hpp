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

#ifndef SMPHY_UPLINK_HPP
#define SMPHY_UPLINK_HPP

#include <Eigen/Dense>

#include "smphy/channel.hpp"
#include "smphy/modem.hpp"
#include "smphy/rng.hpp"

namespace smphy {

// Maximum-ratio-combining matrix for an uplink channel: row p is the
// conjugated p-th channel column divided by that column's total power, so
// (gamma * H) has a unit diagonal and the combiner output for a clean
// transmission on port p is exactly the sent symbol (times sqrt(P_U)).
struct MrcCombiner {
    Eigen::MatrixXcd gamma; // P x M
};

MrcCombiner mrc_matrix(const ChannelMatrix &uplink);

// The 2^r noise-free post-combining hypotheses of a scheme at a given
// transmit power; entries[word] corresponds to the bit word with that
// integer index.
struct ReferenceSet {
    std::vector<Eigen::VectorXcd> entries;
    int word_bits;
};

// references[b] = gamma * H * x(b) * s(b) * sqrt(snr_linear), where x(b) is
// the one-hot pattern selector and s(b) the constellation point of word b.
// Noise power is normalized to 1, so snr_linear is the transmit power P_U.
ReferenceSet build_reference_set(const ChannelMatrix &uplink, const MrcCombiner &combiner,
                                 const Scheme &scheme, double snr_linear);
// Convenience overload that derives the combiner itself.
ReferenceSet build_reference_set(const ChannelMatrix &uplink, const Scheme &scheme,
                                 double snr_linear);

// Post-combining observation at the base station, dimension P.
struct Observation {
    Eigen::VectorXcd combined;
};

// One symbol period: y = gamma * (H x s sqrt(P_U) + v) with v an M-vector of
// i.i.d. complex Gaussian noise of per-element variance noise_power
// (noise_power = 0 is the no-noise test hook).
Observation transmit_uplink(const ChannelMatrix &uplink, const MrcCombiner &combiner,
                            const BitWord &word, const Scheme &scheme, double snr_linear,
                            PhiloxRng &rng, double noise_power = 1.0);

// Minimum-MSE detection: the word whose reference entry is closest to the
// observation in squared Euclidean distance (the constant 1/M factor of the
// MSE is dropped; ties break to the lowest word index).
BitWord detect_uplink(const Observation &obs, const ReferenceSet &references);

// Fraction of differing bits between two equal-length words.
double bit_error_rate(const BitWord &sent, const BitWord &detected);

namespace detail {
// Shared argmin core for uplink and downlink detection.
BitWord detect_min_mse(const Eigen::VectorXcd &observed, const ReferenceSet &references);
} // namespace detail

} // namespace smphy

#endif // SMPHY_UPLINK_HPP
