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

#include "smphy/harness.hpp"

#include <cmath>
#include <exception>
#include <thread>

#include "smphy/downlink.hpp"
#include "smphy/errors.hpp"
#include "smphy/rng.hpp"
#include "smphy/uplink.hpp"

namespace smphy {

std::vector<double> SnrSweep::points() const {
    if (!(step_db > 0.0))
        throw invalid_parameter_error("snr step must be > 0");
    if (start_db > stop_db)
        throw invalid_parameter_error("snr sweep start exceeds stop");
    std::vector<double> pts;
    // Half-step tolerance so e.g. -10:30:2 lands exactly on 30.
    for (int i = 0;; ++i) {
        const double v = start_db + i * step_db;
        if (v > stop_db + step_db * 1e-9)
            break;
        pts.push_back(v);
    }
    return pts;
}

AntennaModel resolve_antenna(const std::string &source) {
    if (source == "table1")
        return synthesize_antenna(4, builtin_psi_table(1), AngularGrid(360), "table1");
    if (source == "table2")
        return synthesize_antenna(2, builtin_psi_table(2), AngularGrid(360), "table2");
    return load_antenna(source);
}

Scheme scheme_for_direction(const std::string &token, LinkDirection direction) {
    const Scheme scheme = scheme_from_token(token);
    if (direction == LinkDirection::downlink) {
        bool found = false;
        for (const auto &s : downlink_schemes())
            found |= (s.name == token);
        if (!found)
            throw invalid_parameter_error("scheme '" + token + "' is not a downlink scheme");
    }
    return scheme;
}

namespace {

void validate_plan(const SimulationPlan &plan, const AntennaModel &antenna) {
    if (plan.runs_per_point < 1)
        throw invalid_parameter_error("runs_per_point must be >= 1");
    if (plan.m_antennas < 1)
        throw invalid_parameter_error("m (array elements) must be >= 1");
    if (plan.scatterers < 1)
        throw invalid_parameter_error("q (scatterers) must be >= 1");
    if (plan.workers < 0)
        throw invalid_parameter_error("workers must be >= 0");
    if (plan.scheme_tokens.empty())
        throw invalid_parameter_error("plan lists no schemes");
    for (const auto &token : plan.scheme_tokens) {
        const Scheme s = scheme_for_direction(token, plan.direction);
        if (s.min_ports() > antenna.port_count())
            throw invalid_parameter_error("scheme '" + token + "' needs " +
                                          std::to_string(s.min_ports()) +
                                          " antenna ports, antenna has " +
                                          std::to_string(antenna.port_count()));
    }
    (void)plan.snr.points(); // validates the sweep
}

} // namespace

RunRecord run_point(const SimulationPlan &plan, const AntennaModel &antenna, const Scheme &scheme,
                    int point_index, std::uint32_t run_index) {
    const std::vector<double> snrs = plan.snr.points();
    if (point_index < 0 || point_index >= static_cast<int>(snrs.size()))
        throw invalid_parameter_error("sweep point index out of range");
    const double p_u = std::pow(10.0, snrs[static_cast<std::size_t>(point_index)] / 10.0);

    RunRecord rec;
    rec.run_index = run_index;
    PhiloxRng rng = substream(plan.master_seed, static_cast<std::uint32_t>(point_index), run_index);

    const int r = scheme.total_bits();
    const std::uint32_t words = scheme.word_count();

    if (plan.direction == LinkDirection::uplink) {
        ChannelMatrix h;
        MrcCombiner combiner;
        for (;;) {
            ScattererSet s = draw_scatterers(plan.scatterers, rng);
            try {
                h = assemble_uplink(s, antenna, plan.m_antennas);
                combiner = mrc_matrix(h);
                break;
            } catch (const degenerate_channel_error &) {
                if (++rec.redraws > 1000)
                    throw;
            }
        }
        const ReferenceSet refs = build_reference_set(h, combiner, scheme, p_u);
        // One noise draw per run, shared by every candidate word.
        Eigen::VectorXcd combined_noise = Eigen::VectorXcd::Zero(h.p_ports);
        if (plan.noise_enabled) {
            Eigen::VectorXcd v(h.m_antennas);
            for (int m = 0; m < h.m_antennas; ++m)
                v(m) = rng.normal_complex(1.0);
            combined_noise = combiner.gamma * v;
        }
        for (std::uint32_t w = 0; w < words; ++w) {
            const Observation obs{refs.entries[w] + combined_noise};
            const BitWord detected = detect_uplink(obs, refs);
            rec.bit_errors += static_cast<std::uint64_t>(hamming_distance(BitWord{w, r}, detected));
            rec.bits_sent += static_cast<std::uint64_t>(r);
        }
    } else {
        ChannelMatrix h;
        MrtPrecoderBank precoders;
        for (;;) {
            ScattererSet s = draw_scatterers(plan.scatterers, rng);
            try {
                h = assemble_downlink(s, antenna, plan.m_antennas);
                precoders = mrt_precoders(h);
                break;
            } catch (const degenerate_channel_error &) {
                if (++rec.redraws > 1000)
                    throw;
            }
        }
        const ReferenceSet refs = build_reference_set_downlink(h, precoders, scheme, p_u);
        Eigen::VectorXcd noise = Eigen::VectorXcd::Zero(h.p_ports);
        if (plan.noise_enabled)
            for (int p = 0; p < h.p_ports; ++p)
                noise(p) = rng.normal_complex(1.0);
        for (std::uint32_t w = 0; w < words; ++w) {
            const DownlinkObservation obs{refs.entries[w] + noise};
            const BitWord detected = detect_downlink(obs, refs);
            rec.bit_errors += static_cast<std::uint64_t>(hamming_distance(BitWord{w, r}, detected));
            rec.bits_sent += static_cast<std::uint64_t>(r);
        }
    }
    return rec;
}

std::vector<BerCurve> run_sweep(const SimulationPlan &plan, const AntennaModel &antenna) {
    validate_plan(plan, antenna);
    const std::vector<double> snrs = plan.snr.points();
    const int workers = plan.workers > 0
                            ? plan.workers
                            : std::max(1u, std::thread::hardware_concurrency());

    std::vector<BerCurve> curves;
    curves.reserve(plan.scheme_tokens.size());
    for (const auto &token : plan.scheme_tokens) {
        const Scheme scheme = scheme_for_direction(token, plan.direction);
        BerCurve curve;
        curve.scheme = token;
        for (int pi = 0; pi < static_cast<int>(snrs.size()); ++pi) {
            struct Totals {
                std::uint64_t errors = 0, bits = 0, redraws = 0;
            };
            std::vector<Totals> totals(static_cast<std::size_t>(workers));
            std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
            auto work = [&](int t) {
                try {
                    Totals local;
                    for (std::uint32_t run = static_cast<std::uint32_t>(t);
                         run < static_cast<std::uint32_t>(plan.runs_per_point);
                         run += static_cast<std::uint32_t>(workers)) {
                        const RunRecord rec = run_point(plan, antenna, scheme, pi, run);
                        local.errors += rec.bit_errors;
                        local.bits += rec.bits_sent;
                        local.redraws += rec.redraws;
                    }
                    totals[static_cast<std::size_t>(t)] = local;
                } catch (...) {
                    failures[static_cast<std::size_t>(t)] = std::current_exception();
                }
            };
            if (workers == 1) {
                work(0);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(static_cast<std::size_t>(workers));
                for (int t = 0; t < workers; ++t)
                    pool.emplace_back(work, t);
                for (auto &th : pool)
                    th.join();
            }
            // Integer totals make the aggregation independent of scheduling.
            Totals sum;
            for (int t = 0; t < workers; ++t) {
                if (failures[static_cast<std::size_t>(t)])
                    std::rethrow_exception(failures[static_cast<std::size_t>(t)]);
                sum.errors += totals[static_cast<std::size_t>(t)].errors;
                sum.bits += totals[static_cast<std::size_t>(t)].bits;
                sum.redraws += totals[static_cast<std::size_t>(t)].redraws;
            }
            const double ber = static_cast<double>(sum.errors) / static_cast<double>(sum.bits);
            const double se = std::sqrt(ber * (1.0 - ber) / static_cast<double>(sum.bits));
            curve.points.push_back(BerPoint{snrs[static_cast<std::size_t>(pi)], ber, sum.bits, se});
            curve.redraws += sum.redraws;
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

std::vector<BerCurve> run_sweep(const SimulationPlan &plan) {
    return run_sweep(plan, resolve_antenna(plan.antenna));
}

bool ber_curve_monotone(const BerCurve &curve, double sigma) {
    int increases = 0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const BerPoint &a = curve.points[i - 1];
        const BerPoint &b = curve.points[i];
        if (b.ber <= a.ber)
            continue;
        ++increases;
        const double combined = std::sqrt(a.std_err * a.std_err + b.std_err * b.std_err);
        if (b.ber - a.ber > sigma * combined)
            return false; // beyond Monte-Carlo noise
    }
    return increases <= 1;
}

} // namespace smphy
