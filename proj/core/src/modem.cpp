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

#include "smphy/modem.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "smphy/errors.hpp"

namespace smphy {

namespace {

std::vector<std::complex<double>> qpsk_points() {
    const double a = 1.0 / std::sqrt(2.0);
    // Labels 0..3 = bit strings 00, 10, 01, 11 (b1 is the label LSB).
    return {{a, a}, {a, -a}, {-a, a}, {-a, -a}};
}

std::vector<std::complex<double>> psk8_points() {
    std::vector<std::complex<double>> pts(8);
    for (int n = 0; n < 8; ++n) {
        const double phi = 2.0 * std::numbers::pi * n / 8.0;
        pts[static_cast<std::size_t>(n ^ (n >> 1))] = {std::cos(phi), std::sin(phi)};
    }
    return pts;
}

// Gray PAM-4 amplitude for a bit pair (lo, hi): 00 -> -3, 01 -> -1,
// 11 -> +1, 10 -> +3 (pair written lo-bit first).
double gray_pam4(unsigned lo, unsigned hi) {
    static constexpr double amp[4] = {-3.0, -1.0, 3.0, 1.0}; // indexed lo*2+hi
    return amp[lo * 2 + hi];
}

std::vector<std::complex<double>> qam16_points() {
    const double scale = 1.0 / std::sqrt(10.0);
    std::vector<std::complex<double>> pts(16);
    for (unsigned label = 0; label < 16; ++label) {
        const double i = gray_pam4(label & 1u, (label >> 1) & 1u);
        const double q = gray_pam4((label >> 2) & 1u, (label >> 3) & 1u);
        pts[label] = {i * scale, q * scale};
    }
    return pts;
}

Scheme make_scheme(std::string name, ModulationKind kind, int pattern_bits, int fixed_pattern) {
    SymbolSet set = symbol_set(kind);
    const int u = set.bits_per_symbol;
    return Scheme{std::move(name), std::move(set), u, pattern_bits, fixed_pattern};
}

} // namespace

SymbolSet symbol_set(ModulationKind kind) {
    switch (kind) {
    case ModulationKind::qpsk:
        return {kind, 2, qpsk_points()};
    case ModulationKind::psk8:
        return {kind, 3, psk8_points()};
    case ModulationKind::qam16:
        return {kind, 4, qam16_points()};
    }
    throw invalid_parameter_error("unknown modulation kind");
}

int nearest_symbol(const SymbolSet &set, std::complex<double> x) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        const double d = std::norm(x - set.points[i]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::string BitWord::to_string() const {
    std::string s(static_cast<std::size_t>(length), '0');
    for (int k = 1; k <= length; ++k)
        s[static_cast<std::size_t>(k - 1)] = static_cast<char>('0' + bit(k));
    return s;
}

Modulated modulate(const BitWord &word, const Scheme &scheme) {
    if (word.length != scheme.total_bits())
        throw invalid_word_error("word has " + std::to_string(word.length) + " bits, scheme '" +
                                 scheme.name + "' expects " + std::to_string(scheme.total_bits()));
    if (word.value >> word.length)
        throw invalid_word_error("word value does not fit in " + std::to_string(word.length) + " bits");

    const std::uint32_t u_mask = (1u << scheme.symbol_bits) - 1u;
    const int symbol_index = static_cast<int>(word.value & u_mask);
    const int pattern = scheme.spatial()
                            ? 1 + static_cast<int>(word.value >> scheme.symbol_bits)
                            : scheme.fixed_pattern;
    return {scheme.symbols.points[static_cast<std::size_t>(symbol_index)], symbol_index, pattern};
}

BitWord demodulate(int symbol_index, int pattern, const Scheme &scheme) {
    if (symbol_index < 0 || symbol_index >= static_cast<int>(scheme.symbols.points.size()))
        throw invalid_word_error("symbol index " + std::to_string(symbol_index) + " out of range");
    std::uint32_t value = static_cast<std::uint32_t>(symbol_index);
    if (scheme.spatial()) {
        const int max_pattern = 1 << scheme.pattern_bits;
        if (pattern < 1 || pattern > max_pattern)
            throw invalid_word_error("pattern " + std::to_string(pattern) + " out of range 1.." +
                                     std::to_string(max_pattern));
        value |= static_cast<std::uint32_t>(pattern - 1) << scheme.symbol_bits;
    } else if (pattern != scheme.fixed_pattern) {
        throw invalid_word_error("scheme '" + scheme.name + "' always uses pattern " +
                                 std::to_string(scheme.fixed_pattern));
    }
    return {value, scheme.total_bits()};
}

std::vector<Scheme> uplink_multiport_schemes() {
    std::vector<Scheme> cat;
    for (int p = 1; p <= 4; ++p)
        cat.push_back(make_scheme("16qam-p" + std::to_string(p), ModulationKind::qam16, 0, p));
    cat.push_back(make_scheme("qpsk-sm4", ModulationKind::qpsk, 2, 0));
    return cat;
}

std::vector<Scheme> uplink_monoport_schemes() {
    std::vector<Scheme> cat;
    for (int p = 1; p <= 2; ++p)
        cat.push_back(make_scheme("8psk-p" + std::to_string(p), ModulationKind::psk8, 0, p));
    cat.push_back(make_scheme("qpsk-sm2", ModulationKind::qpsk, 1, 0));
    return cat;
}

std::vector<Scheme> downlink_schemes() { return uplink_multiport_schemes(); }

Scheme scheme_from_token(const std::string &token) {
    for (auto catalog : {uplink_multiport_schemes(), uplink_monoport_schemes()})
        for (auto &s : catalog)
            if (s.name == token)
                return s;
    throw invalid_parameter_error("unknown scheme token '" + token + "'");
}

} // namespace smphy
