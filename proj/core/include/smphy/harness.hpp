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

#ifndef SMPHY_HARNESS_HPP
#define SMPHY_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "smphy/channel.hpp"
#include "smphy/modem.hpp"
#include "smphy/patterns.hpp"

namespace smphy {

// Inclusive dB sweep start, start+step, ..., up to stop.
struct SnrSweep {
    double start_db = -10.0;
    double stop_db = 30.0;
    double step_db = 2.0;

    std::vector<double> points() const; // validates step > 0, start <= stop
};

// Everything a Monte-Carlo BER experiment needs.  `antenna` is either a
// pattern file path or one of the built-in tokens "table1" / "table2"
// (synthesized 4-port / 2-port reference antennas).
struct SimulationPlan {
    LinkDirection direction = LinkDirection::uplink;
    std::string antenna = "table1";
    int m_antennas = 64;         // base-station array elements
    int scatterers = 10;         // Q
    std::vector<std::string> scheme_tokens;
    SnrSweep snr;
    int runs_per_point = 20000;
    std::uint64_t master_seed = 42;
    int workers = 0;             // 0 = use hardware concurrency
    bool noise_enabled = true;   // test hook: false transmits with v = 0
};

// Outcome of one run (one channel draw, one noise draw, all 2^r words).
struct RunRecord {
    std::uint32_t run_index = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t bits_sent = 0;
    std::uint32_t redraws = 0; // degenerate channel draws discarded
};

struct BerPoint {
    double snr_db;
    double ber;
    std::uint64_t n_bits;
    double std_err; // sqrt(ber*(1-ber)/n_bits)
};

struct BerCurve {
    std::string scheme;
    std::vector<BerPoint> points; // sorted by snr_db
    std::uint64_t redraws = 0;
};

// Materialize an antenna from a plan's antenna field.
AntennaModel resolve_antenna(const std::string &source);

// Look up a scheme token and check it is usable in the given direction
// (the monoport catalog is uplink-only).
Scheme scheme_for_direction(const std::string &token, LinkDirection direction);

// One Monte-Carlo run of one scheme at sweep point `point_index`: draws a
// scatterer set (redrawing degenerate channels) and a noise vector from
// substream(master_seed, point_index, run_index), then transmits and detects
// every word of the scheme with that shared noise.  Pure function of
// (plan, antenna, scheme, point_index, run_index) — worker count and
// execution order cannot change its output.
RunRecord run_point(const SimulationPlan &plan, const AntennaModel &antenna, const Scheme &scheme,
                    int point_index, std::uint32_t run_index);

// Full sweep: every scheme token over every SNR point, runs distributed
// over plan.workers threads.  BER is total bit errors over total bits
// (n_bits = runs * 2^r * r per point).
std::vector<BerCurve> run_sweep(const SimulationPlan &plan, const AntennaModel &antenna);
std::vector<BerCurve> run_sweep(const SimulationPlan &plan); // resolves plan.antenna

// True when the curve is non-increasing in SNR, allowing at most one
// adjacent-point increase and only if that increase is within
// `sigma` combined standard errors (Monte-Carlo noise allowance).
bool ber_curve_monotone(const BerCurve &curve, double sigma = 2.0);

} // namespace smphy

#endif // SMPHY_HARNESS_HPP
