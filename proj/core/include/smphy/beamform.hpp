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

#ifndef SMPHY_BEAMFORM_HPP
#define SMPHY_BEAMFORM_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "smphy/rng.hpp"

namespace smphy {

// Symbol-spaced multipath channel between one object antenna and M array
// elements: taps(m, l) is delay tap l of element m.
struct WidebandChannel {
    Eigen::MatrixXcd taps; // M x L
};

// Beamformed (matched-filter / time-reversal) impulse response: length
// 2L-1 taps, peak at the center index L-1.
struct EffectiveChannel {
    std::vector<std::complex<double>> taps;
    std::size_t peak_index() const; // max |tap|; lowest index on ties
};

// Sum over antennas of each element response convolved with its conjugated
// time reverse, normalized so the (real, positive) center tap is 1.
EffectiveChannel matched_filter_channel(const WidebandChannel &channel);

// 10*log10(peak tap power / total off-peak power); +infinity when the
// response is a pure single tap.
double single_tap_sir_db(const EffectiveChannel &effective);

// Root-raised-cosine link parameters.  The long default span keeps the
// filter's truncation ISI far below the >20 dB SIR regime probed here: at
// rolloff 0.001 the pulse decays ~1/t, and a 16-symbol span would leave
// cascade ISI around -19 dB, i.e. above the channel ISI being measured.
// 512 symbols push it to about -36 dB.
struct RrcLink {
    double rolloff = 0.001;
    int span_symbols = 512; // total filter length in symbol periods
    int oversampling = 8;   // samples per symbol
};

// Unit-energy RRC filter taps sampled at link.oversampling per symbol,
// span_symbols * oversampling + 1 samples, symmetric around the center.
std::vector<double> rrc_taps(const RrcLink &link);

// Single-carrier Gray-16QAM transmission through tx RRC -> effective channel
// -> rx RRC, sampled at the cascade peak, scalar-equalized by the known peak
// gain, hard-detected.  noise_variance is the complex noise power per
// receive sample (0 = noiseless); returns the bit error ratio.
double rrc_single_carrier_ber(const EffectiveChannel &effective, const RrcLink &link,
                              std::int64_t n_bits, double noise_variance, PhiloxRng &rng);

// Synthetic M x L channel with i.i.d. complex Gaussian taps of variance 1/L
// (unit expected energy per antenna element).
WidebandChannel synth_wideband(int m_antennas, int n_taps, PhiloxRng &rng);

} // namespace smphy

#endif // SMPHY_BEAMFORM_HPP
