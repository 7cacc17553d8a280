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
// Command-line front end: Monte-Carlo BER sweeps, antenna correlation
// queries, antenna synthesis, and the beamforming/SIR experiment.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smphy/beamform.hpp"
#include "smphy/errors.hpp"
#include "smphy/harness.hpp"
#include "smphy/patterns.hpp"
#include "smphy/report.hpp"
#include "smphy/rng.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_runtime = 3;

smphy::SnrSweep parse_snr(const std::string &text) {
    smphy::SnrSweep sweep;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &sweep.start_db, &sweep.stop_db,
                    &sweep.step_db) != 3)
        throw smphy::invalid_parameter_error("bad --snr '" + text +
                                             "', expected start:stop:step");
    return sweep;
}

std::string fmt(double v, int significant = 15) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

struct SimulateArgs {
    std::string direction = "uplink";
    std::string antenna = "table1";
    int m = 64;
    int q = 10;
    std::vector<std::string> schemes;
    std::string snr = "-10:30:2";
    int runs = 20000;
    std::uint64_t seed = 42;
    std::string out;
    std::string svg;
    int workers = 0;
};

// Returns exit_ok / exit_runtime; configuration problems throw out of the
// setup phase and are mapped by the caller.
int run_simulate(const SimulateArgs &args, bool &setup_done) {
    smphy::SimulationPlan plan;
    plan.direction = args.direction == "uplink" ? smphy::LinkDirection::uplink
                                                : smphy::LinkDirection::downlink;
    plan.antenna = args.antenna;
    plan.m_antennas = args.m;
    plan.scatterers = args.q;
    plan.scheme_tokens = args.schemes;
    plan.snr = parse_snr(args.snr);
    plan.runs_per_point = args.runs;
    plan.master_seed = args.seed;
    plan.workers = args.workers;

    const smphy::AntennaModel antenna = smphy::resolve_antenna(plan.antenna);
    for (const auto &token : plan.scheme_tokens)
        (void)smphy::scheme_for_direction(token, plan.direction);
    (void)plan.snr.points();
    setup_done = true;

    const std::vector<smphy::BerCurve> curves = smphy::run_sweep(plan, antenna);
    smphy::emit_csv(curves, args.out);
    if (!args.svg.empty())
        smphy::emit_svg(curves, args.svg);

    std::uint64_t redraws = 0;
    for (const auto &c : curves)
        redraws += c.redraws;
    std::cout << "wrote " << args.out << ": " << curves.size() << " scheme(s) x "
              << curves.front().points.size() << " SNR point(s), " << plan.runs_per_point
              << " runs/point\n";
    if (redraws > 0)
        std::cout << "degenerate channel draws redrawn: " << redraws << "\n";
    return exit_ok;
}

int run_correlate(const std::string &antenna_src, const std::string &out, bool &setup_done) {
    const smphy::AntennaModel antenna = smphy::resolve_antenna(antenna_src);
    setup_done = true;
    const Eigen::MatrixXd psi = smphy::correlation_matrix(antenna);
    std::string text = "p,q,psi\n";
    for (int p = 0; p < psi.rows(); ++p)
        for (int q = 0; q < psi.cols(); ++q)
            text += std::to_string(p + 1) + "," + std::to_string(q + 1) + "," + fmt(psi(p, q)) + "\n";
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw smphy::format_error("csv file " + out + ": cannot open for writing");
    f << text;
    std::cout << "wrote " << out << ": " << psi.rows() << "x" << psi.cols()
              << " correlation matrix\n";
    return exit_ok;
}

int run_synthesize(int table, const std::string &out, bool &setup_done) {
    const Eigen::MatrixXd psi = smphy::builtin_psi_table(table);
    const int ports = static_cast<int>(psi.rows());
    const smphy::AntennaModel antenna = smphy::synthesize_antenna(
        ports, psi, smphy::AngularGrid(360), "table" + std::to_string(table));
    setup_done = true;
    smphy::save_antenna(antenna, out);
    std::cout << "wrote " << out << ": " << ports << "-port antenna, 360 angular samples\n";
    return exit_ok;
}

struct BeamformArgs {
    int m = 64;
    int l = 10;
    int draws = 200;
    std::uint64_t seed = 7;
    std::string out;
    bool rrc_ber = false;
    std::int64_t bits = 100000;
    double rolloff = 0.001;
};

int run_beamform(const BeamformArgs &args, bool &setup_done) {
    if (args.draws < 1)
        throw smphy::invalid_parameter_error("--draws must be >= 1");
    setup_done = true;

    std::vector<double> sirs(static_cast<std::size_t>(args.draws));
    int worst_draw = 0;
    std::string text = "draw,M,L,sir_db\n";
    for (int i = 0; i < args.draws; ++i) {
        smphy::PhiloxRng rng = smphy::substream(args.seed, 0, static_cast<std::uint32_t>(i));
        const smphy::WidebandChannel ch = smphy::synth_wideband(args.m, args.l, rng);
        const double sir = smphy::single_tap_sir_db(smphy::matched_filter_channel(ch));
        sirs[static_cast<std::size_t>(i)] = sir;
        if (sir < sirs[static_cast<std::size_t>(worst_draw)])
            worst_draw = i;
        text += std::to_string(i) + "," + std::to_string(args.m) + "," + std::to_string(args.l) +
                "," + fmt(sir) + "\n";
    }
    std::ofstream f(args.out, std::ios::binary);
    if (!f)
        throw smphy::format_error("csv file " + args.out + ": cannot open for writing");
    f << text;

    std::vector<double> sorted = sirs;
    std::sort(sorted.begin(), sorted.end());
    const double median = sorted[sorted.size() / 2];
    std::cout << "wrote " << args.out << ": " << args.draws << " draws, median sir_db="
              << fmt(median, 6) << "\n";

    if (args.rrc_ber) {
        // Re-derive the worst draw's channel and push bits through the RRC
        // link: the most adversarial ISI this ensemble produced.
        smphy::PhiloxRng rng = smphy::substream(args.seed, 0, static_cast<std::uint32_t>(worst_draw));
        const smphy::WidebandChannel ch = smphy::synth_wideband(args.m, args.l, rng);
        const smphy::EffectiveChannel eff = smphy::matched_filter_channel(ch);
        smphy::RrcLink link;
        link.rolloff = args.rolloff;
        smphy::PhiloxRng bits_rng = smphy::substream(args.seed, 1, 0);
        const double ber = smphy::rrc_single_carrier_ber(eff, link, args.bits, 0.0, bits_rng);
        std::cout << "rrc_ber=" << fmt(ber, 6) << " bits=" << args.bits
                  << " draw=" << worst_draw
                  << " sir_db=" << fmt(sirs[static_cast<std::size_t>(worst_draw)], 6)
                  << " rolloff=" << fmt(args.rolloff, 6) << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"smphy - spatial-modulation link simulator"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI config file; command-line flags override it");

    SimulateArgs sim;
    CLI::App *simulate = app.add_subcommand("simulate", "Monte-Carlo BER sweep over SNR");
    simulate->add_option("--direction", sim.direction, "Link direction")
        ->check(CLI::IsMember({"uplink", "downlink"}))
        ->capture_default_str();
    simulate->add_option("--antenna", sim.antenna, "Pattern file, or table1/table2 built-ins")
        ->capture_default_str();
    simulate->add_option("--m", sim.m, "Base-station array elements")->capture_default_str();
    simulate->add_option("--q", sim.q, "Scatterers per channel draw")->capture_default_str();
    simulate->add_option("--schemes", sim.schemes, "Comma-separated scheme tokens")
        ->required()
        ->delimiter(',');
    simulate->add_option("--snr", sim.snr, "Sweep start:stop:step in dB")->capture_default_str();
    simulate->add_option("--runs", sim.runs, "Monte-Carlo runs per SNR point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--seed", sim.seed, "Master RNG seed")->capture_default_str();
    simulate->add_option("--out", sim.out, "Output CSV path")->required();
    simulate->add_option("--svg", sim.svg, "Optional SVG plot path");
    simulate->add_option("--workers", sim.workers, "Worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    std::string cor_antenna, cor_out;
    CLI::App *correlate = app.add_subcommand("correlate", "Pattern-correlation matrix of an antenna");
    correlate->add_option("--antenna", cor_antenna, "Pattern file, or table1/table2 built-ins")
        ->required();
    correlate->add_option("--out", cor_out, "Output CSV path")->required();

    int synth_table = 1;
    std::string synth_out;
    CLI::App *synthesize = app.add_subcommand("synthesize", "Write a built-in reference antenna");
    synthesize->add_option("--table", synth_table, "Correlation table (1 = 4-port, 2 = 2-port)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    synthesize->add_option("--out", synth_out, "Output pattern file path")->required();

    BeamformArgs bf;
    CLI::App *beamform = app.add_subcommand("beamform", "Matched-filter SIR ensemble (and RRC link)");
    beamform->add_option("--m", bf.m, "Array elements")->capture_default_str();
    beamform->add_option("--l", bf.l, "Channel taps")->capture_default_str();
    beamform->add_option("--draws", bf.draws, "Channel draws")->capture_default_str();
    beamform->add_option("--seed", bf.seed, "Master RNG seed")->capture_default_str();
    beamform->add_option("--out", bf.out, "Output CSV path")->required();
    beamform->add_flag("--rrc-ber", bf.rrc_ber, "Run the noiseless RRC 16QAM link on the worst draw");
    beamform->add_option("--bits", bf.bits, "Bits for --rrc-ber")->capture_default_str();
    beamform->add_option("--rolloff", bf.rolloff, "RRC roll-off for --rrc-ber")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    bool setup_done = false;
    try {
        if (simulate->parsed())
            return run_simulate(sim, setup_done);
        if (correlate->parsed())
            return run_correlate(cor_antenna, cor_out, setup_done);
        if (synthesize->parsed())
            return run_synthesize(synth_table, synth_out, setup_done);
        if (beamform->parsed())
            return run_beamform(bf, setup_done);
        return exit_config;
    } catch (const smphy::error &e) {
        std::cerr << "smphy: " << e.what() << "\n";
        return setup_done ? exit_runtime : exit_config;
    } catch (const std::exception &e) {
        std::cerr << "smphy: " << e.what() << "\n";
        return exit_runtime;
    }
}
