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

#ifndef SMPHY_REPORT_HPP
#define SMPHY_REPORT_HPP

#include <string>
#include <vector>

#include "smphy/harness.hpp"

namespace smphy {

// CSV with header `scheme,snr_db,ber,n_bits,stderr`, one row per curve
// point, 15 significant digits.  Identical curves give identical bytes.
std::string curves_to_csv(const std::vector<BerCurve> &curves);
void emit_csv(const std::vector<BerCurve> &curves, const std::string &path);

// Log-y BER plot: one polyline per scheme (zero-BER points are omitted,
// log10 is undefined there), linear SNR axis, labels "SNR (dB)" and "BER".
// Output is deterministic for identical inputs.
std::string curves_to_svg(const std::vector<BerCurve> &curves);
void emit_svg(const std::vector<BerCurve> &curves, const std::string &path);

} // namespace smphy

#endif // SMPHY_REPORT_HPP
