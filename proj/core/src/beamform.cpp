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

#include "smphy/beamform.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "smphy/errors.hpp"
#include "smphy/modem.hpp"

namespace smphy {

std::size_t EffectiveChannel::peak_index() const {
    std::size_t best = 0;
    double best_p = -1.0;
    for (std::size_t i = 0; i < taps.size(); ++i) {
        const double p = std::norm(taps[i]);
        if (p > best_p) {
            best_p = p;
            best = i;
        }
    }
    return best;
}

EffectiveChannel matched_filter_channel(const WidebandChannel &channel) {
    const Eigen::Index M = channel.taps.rows();
    const Eigen::Index L = channel.taps.cols();
    if (M < 1 || L < 1)
        throw invalid_parameter_error("wideband channel needs at least one antenna and one tap");
    if (channel.taps.squaredNorm() == 0.0)
        throw degenerate_channel_error("wideband channel is identically zero");

    // Sum of per-antenna autocorrelations; lag tau lives at index tau + L - 1.
    std::vector<std::complex<double>> eff(static_cast<std::size_t>(2 * L - 1), {0.0, 0.0});
    for (Eigen::Index m = 0; m < M; ++m)
        for (Eigen::Index tau = -(L - 1); tau <= L - 1; ++tau) {
            std::complex<double> acc{0.0, 0.0};
            for (Eigen::Index l = std::max<Eigen::Index>(0, -tau); l < L - std::max<Eigen::Index>(0, tau); ++l)
                acc += channel.taps(m, l + tau) * std::conj(channel.taps(m, l));
            eff[static_cast<std::size_t>(tau + L - 1)] += acc;
        }

    // The zero-lag tap is the total channel energy: real, positive, maximal.
    const double center = eff[static_cast<std::size_t>(L - 1)].real();
    for (auto &t : eff)
        t /= center;
    return {std::move(eff)};
}

double single_tap_sir_db(const EffectiveChannel &effective) {
    if (effective.taps.empty())
        throw invalid_parameter_error("empty effective channel");
    const std::size_t pk = effective.peak_index();
    double off = 0.0;
    for (std::size_t i = 0; i < effective.taps.size(); ++i)
        if (i != pk)
            off += std::norm(effective.taps[i]);
    if (off == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(std::norm(effective.taps[pk]) / off);
}

std::vector<double> rrc_taps(const RrcLink &link) {
    if (!(link.rolloff > 0.0) || link.rolloff > 1.0)
        throw invalid_parameter_error("rrc rolloff must lie in (0, 1]");
    if (link.span_symbols < 1)
        throw invalid_parameter_error("rrc span must be >= 1 symbol");
    if (link.oversampling < 2)
        throw invalid_parameter_error("rrc oversampling must be >= 2");

    const double beta = link.rolloff;
    const int n = link.span_symbols * link.oversampling + 1;
    const double center = (n - 1) / 2.0;
    std::vector<double> g(static_cast<std::size_t>(n));
    double energy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (i - center) / link.oversampling; // symbol periods
        double v;
        if (t == 0.0) {
            v = 1.0 - beta + 4.0 * beta / std::numbers::pi;
        } else if (std::abs(std::abs(4.0 * beta * t) - 1.0) < 1e-9) {
            // Removable singularity at |t| = 1/(4 beta).
            const double s = std::sin(std::numbers::pi / (4.0 * beta));
            const double c = std::cos(std::numbers::pi / (4.0 * beta));
            v = beta / std::sqrt(2.0) *
                ((1.0 + 2.0 / std::numbers::pi) * s + (1.0 - 2.0 / std::numbers::pi) * c);
        } else {
            const double num = std::sin(std::numbers::pi * t * (1.0 - beta)) +
                               4.0 * beta * t * std::cos(std::numbers::pi * t * (1.0 + beta));
            const double den =
                std::numbers::pi * t * (1.0 - (4.0 * beta * t) * (4.0 * beta * t));
            v = num / den;
        }
        g[static_cast<std::size_t>(i)] = v;
        energy += v * v;
    }
    // Unit energy: the tx+rx cascade then has peak gain 1 and white noise
    // keeps its variance through the receive filter.
    const double scale = 1.0 / std::sqrt(energy);
    for (auto &v : g)
        v *= scale;
    return g;
}

double rrc_single_carrier_ber(const EffectiveChannel &effective, const RrcLink &link,
                              std::int64_t n_bits, double noise_variance, PhiloxRng &rng) {
    if (n_bits < 4 || n_bits % 4 != 0)
        throw invalid_parameter_error("n_bits must be a positive multiple of 4 for 16QAM");
    if (noise_variance < 0.0)
        throw invalid_parameter_error("noise variance must be >= 0");
    if (effective.taps.empty())
        throw invalid_parameter_error("empty effective channel");

    const std::vector<double> g = rrc_taps(link);
    const int os = link.oversampling;

    // Cascade tx filter * channel * rx filter on the oversampled grid.  The
    // channel taps are symbol spaced, i.e. os samples apart.
    const std::size_t glen = g.size();
    std::vector<double> gg(2 * glen - 1, 0.0);
    for (std::size_t i = 0; i < glen; ++i)
        for (std::size_t j = 0; j < glen; ++j)
            gg[i + j] += g[i] * g[j];
    const std::size_t taps_len = effective.taps.size();
    std::vector<std::complex<double>> cascade(gg.size() + (taps_len - 1) * static_cast<std::size_t>(os),
                                              {0.0, 0.0});
    for (std::size_t tau = 0; tau < taps_len; ++tau) {
        const std::complex<double> h = effective.taps[tau];
        if (h == std::complex<double>{0.0, 0.0})
            continue;
        const std::size_t base = tau * static_cast<std::size_t>(os);
        for (std::size_t i = 0; i < gg.size(); ++i)
            cascade[base + i] += h * gg[i];
    }

    // Sampling instant locked to the channel's peak tap (both filters are
    // symmetric, so they add a pure center delay of glen-1 samples total).
    const std::size_t delay = (glen - 1) + effective.peak_index() * static_cast<std::size_t>(os);
    const std::complex<double> peak_gain = cascade[delay];

    // Symbol-spaced slice of the cascade around the sampling instant: the
    // receiver output for symbol k is sum_d slice[d] * s[k-d] (+ noise).
    const int d_min = -static_cast<int>(delay / static_cast<std::size_t>(os));
    const int d_max = static_cast<int>((cascade.size() - 1 - delay) / static_cast<std::size_t>(os));
    std::vector<std::complex<double>> slice(static_cast<std::size_t>(d_max - d_min + 1));
    for (int d = d_min; d <= d_max; ++d)
        slice[static_cast<std::size_t>(d - d_min)] =
            cascade[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(delay) + d * os)];

    const SymbolSet qam = symbol_set(ModulationKind::qam16);
    const std::int64_t n_sym = n_bits / 4;
    std::vector<int> labels(static_cast<std::size_t>(n_sym));
    std::vector<std::complex<double>> sym(static_cast<std::size_t>(n_sym));
    for (std::int64_t k = 0; k < n_sym; ++k) {
        const int label = static_cast<int>(rng() & 0xF);
        labels[static_cast<std::size_t>(k)] = label;
        sym[static_cast<std::size_t>(k)] = qam.points[static_cast<std::size_t>(label)];
    }

    std::int64_t bit_errors = 0;
    for (std::int64_t k = 0; k < n_sym; ++k) {
        std::complex<double> y{0.0, 0.0};
        const std::int64_t j_lo = std::max<std::int64_t>(0, k - d_max);
        const std::int64_t j_hi = std::min<std::int64_t>(n_sym - 1, k - d_min);
        for (std::int64_t j = j_lo; j <= j_hi; ++j)
            y += slice[static_cast<std::size_t>(k - j - d_min)] * sym[static_cast<std::size_t>(j)];
        if (noise_variance > 0.0)
            y += rng.normal_complex(noise_variance);
        const int detected = nearest_symbol(qam, y / peak_gain);
        bit_errors += std::popcount(static_cast<unsigned>(labels[static_cast<std::size_t>(k)] ^ detected));
    }
    return static_cast<double>(bit_errors) / static_cast<double>(n_bits);
}

WidebandChannel synth_wideband(int m_antennas, int n_taps, PhiloxRng &rng) {
    if (m_antennas < 1 || n_taps < 1)
        throw invalid_parameter_error("wideband channel needs M >= 1 and L >= 1");
    Eigen::MatrixXcd taps(m_antennas, n_taps);
    const double variance = 1.0 / n_taps;
    for (int m = 0; m < m_antennas; ++m)
        for (int l = 0; l < n_taps; ++l)
            taps(m, l) = rng.normal_complex(variance);
    return {std::move(taps)};
}

} // namespace smphy
