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

#ifndef SMPHY_MODEM_HPP
#define SMPHY_MODEM_HPP

#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace smphy {

enum class ModulationKind { qpsk, psk8, qam16 };

// A complex constellation with unit average power.  points[label] is the
// symbol whose bit label is `label`; labels are Gray-coded, so
// nearest-neighbor symbol errors flip a single bit.
struct SymbolSet {
    ModulationKind kind;
    int bits_per_symbol; // u
    std::vector<std::complex<double>> points;
};

// Build one of the three supported constellations.
//
// Bit-to-symbol labeling (bit 1 is the least significant bit of the label):
//   QPSK : 00 -> (1+j)/sqrt(2), 01 -> (-1+j)/sqrt(2),
//          11 -> (-1-j)/sqrt(2), 10 -> (1-j)/sqrt(2)   (strings are b1 b2)
//   8PSK : points e^{2*pi*j*n/8}, n = 0..7, labeled Gray around the circle
//          (position n carries label n XOR (n >> 1))
//   16QAM: amplitudes {-3,-1,+1,+3}/sqrt(10) per axis; in-phase bits (b1,b2)
//          and quadrature bits (b3,b4) each Gray-mapped as
//          00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3
SymbolSet symbol_set(ModulationKind kind);

// Index of the constellation point closest to x (hard decision).
int nearest_symbol(const SymbolSet &set, std::complex<double> x);

// A word of r payload bits.  Bit k (1-based) lives at value bit k-1, so the
// word's integer index is sum_k b_k 2^(k-1).
struct BitWord {
    std::uint32_t value = 0;
    int length = 0;

    int bit(int k) const { return static_cast<int>((value >> (k - 1)) & 1u); } // k in 1..length
    std::string to_string() const; // "b1 b2 ... br" without separators
    friend bool operator==(const BitWord &, const BitWord &) = default;
};

inline int hamming_distance(const BitWord &a, const BitWord &b) {
    return std::popcount(a.value ^ b.value);
}

// One entry of a scheme catalog: a constellation plus the rule that turns
// the trailing K bits into a radiation pattern choice.  fixed_pattern == 0
// means spatial mode (the pattern is data-driven); otherwise every symbol
// period uses that constant pattern and K == 0.
struct Scheme {
    std::string name;     // CLI token, e.g. "qpsk-sm4" or "16qam-p2"
    SymbolSet symbols;
    int symbol_bits;      // u
    int pattern_bits;     // K
    int fixed_pattern;    // 1-based constant pattern, or 0 in spatial mode

    int total_bits() const { return symbol_bits + pattern_bits; } // r
    bool spatial() const { return fixed_pattern == 0; }
    std::uint32_t word_count() const { return 1u << total_bits(); }
    // Number of antenna ports the scheme needs to address.
    int min_ports() const { return spatial() ? (1 << pattern_bits) : fixed_pattern; }
};

struct Modulated {
    std::complex<double> symbol;
    int symbol_index; // label into symbols.points
    int pattern;      // 1-based port
};

// Split a word into u symbol bits and K pattern bits.  The leading u bits
// select the constellation point; the trailing K bits select the pattern as
// p = 1 + (b_{u+1} + 2 b_{u+2} + ...), i.e. bit strings b_{u+1}..b_r of
// 00 -> 1, 10 -> 2, 01 -> 3, 11 -> 4 for K = 2 and 0 -> 1, 1 -> 2 for K = 1.
Modulated modulate(const BitWord &word, const Scheme &scheme);

// Inverse of modulate: reassemble the word from a detected symbol label and
// pattern index.
BitWord demodulate(int symbol_index, int pattern, const Scheme &scheme);

// Scheme catalogs.  The multiport uplink set pits four fixed-pattern 16QAM
// variants against QPSK with 4-way pattern keying at r = 4 bits/period; the
// monoport set compares 8PSK against QPSK with 2-way keying at r = 3.  The
// downlink catalog mirrors the multiport uplink one.
std::vector<Scheme> uplink_multiport_schemes();
std::vector<Scheme> uplink_monoport_schemes();
std::vector<Scheme> downlink_schemes();

// Look up any catalog scheme by CLI token (16qam-p1..p4, qpsk-sm4,
// 8psk-p1..p2, qpsk-sm2).  Unknown tokens raise invalid_parameter_error.
Scheme scheme_from_token(const std::string &token);

} // namespace smphy

#endif // SMPHY_MODEM_HPP
