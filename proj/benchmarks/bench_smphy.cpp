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
//
// Micro-benchmarks for the Monte-Carlo hot paths: channel assembly,
// reference-set construction, detection, whole simulation runs, and the
// wideband matched filter.

#include <benchmark/benchmark.h>

#include "smphy/beamform.hpp"
#include "smphy/channel.hpp"
#include "smphy/downlink.hpp"
#include "smphy/harness.hpp"
#include "smphy/modem.hpp"
#include "smphy/patterns.hpp"
#include "smphy/rng.hpp"
#include "smphy/uplink.hpp"

namespace {

const smphy::AntennaModel &reference_antenna() {
    static const smphy::AntennaModel antenna = smphy::resolve_antenna("table1");
    return antenna;
}

void bm_channel_assembly(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    smphy::PhiloxRng rng(1);
    for (auto _ : state) {
        const auto scatterers = smphy::draw_scatterers(10, rng);
        benchmark::DoNotOptimize(smphy::assemble_uplink(scatterers, reference_antenna(), m));
    }
}
BENCHMARK(bm_channel_assembly)->Arg(16)->Arg(64)->Arg(256);

void bm_reference_set(benchmark::State &state) {
    smphy::PhiloxRng rng(2);
    const auto scheme = smphy::scheme_from_token("qpsk-sm4");
    const auto scatterers = smphy::draw_scatterers(10, rng);
    const auto h = smphy::assemble_uplink(scatterers, reference_antenna(),
                                          static_cast<int>(state.range(0)));
    const auto combiner = smphy::mrc_matrix(h);
    for (auto _ : state)
        benchmark::DoNotOptimize(smphy::build_reference_set(h, combiner, scheme, 10.0));
}
BENCHMARK(bm_reference_set)->Arg(64);

void bm_detection(benchmark::State &state) {
    smphy::PhiloxRng rng(3);
    const auto scheme = smphy::scheme_from_token("qpsk-sm4");
    const auto scatterers = smphy::draw_scatterers(10, rng);
    const auto h = smphy::assemble_uplink(scatterers, reference_antenna(), 64);
    const auto combiner = smphy::mrc_matrix(h);
    const auto refs = smphy::build_reference_set(h, combiner, scheme, 10.0);
    const auto obs =
        smphy::transmit_uplink(h, combiner, smphy::BitWord{5, 4}, scheme, 10.0, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(smphy::detect_uplink(obs, refs));
}
BENCHMARK(bm_detection);

void bm_run_point(benchmark::State &state, smphy::LinkDirection direction) {
    smphy::SimulationPlan plan;
    plan.direction = direction;
    plan.antenna = "table1";
    plan.m_antennas = 64;
    plan.scatterers = 10;
    plan.scheme_tokens = {"qpsk-sm4"};
    plan.snr = {10.0, 10.0, 1.0};
    const auto scheme = smphy::scheme_from_token("qpsk-sm4");
    std::uint32_t run = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            smphy::run_point(plan, reference_antenna(), scheme, 0, run++));
}
BENCHMARK_CAPTURE(bm_run_point, uplink, smphy::LinkDirection::uplink);
BENCHMARK_CAPTURE(bm_run_point, downlink, smphy::LinkDirection::downlink);

void bm_matched_filter(benchmark::State &state) {
    smphy::PhiloxRng rng(4);
    const auto channel = smphy::synth_wideband(static_cast<int>(state.range(0)), 10, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(smphy::matched_filter_channel(channel));
}
BENCHMARK(bm_matched_filter)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();
