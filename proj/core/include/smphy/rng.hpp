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

#ifndef SMPHY_RNG_HPP
#define SMPHY_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace smphy {

// Counter-based generator (Philox-4x32-10).  Every (seed, stream) pair
// yields an independent, reproducible sequence, so Monte-Carlo runs can be
// scheduled on any number of workers in any order without changing the
// numbers they produce.  The stream id packs two 32-bit indices, see
// substream() below.
class PhiloxRng {
  public:
    using result_type = std::uint64_t;

    PhiloxRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }

    // Next 64 random bits.
    result_type operator()() {
        if (word_pos_ == 0) {
            block_ = generate_block();
            ++block_counter_;
        }
        const int i = 2 * word_pos_;
        word_pos_ = (word_pos_ + 1) % 2;
        return (static_cast<result_type>(block_[i + 1]) << 32) | block_[i];
    }

    // Uniform double in [0, 1), 53 significant bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform angle in [0, 2*pi).
    double angle() { return 2.0 * std::numbers::pi * uniform(); }

    // Circularly-symmetric complex Gaussian with E|x|^2 = variance
    // (Box-Muller on two uniforms).
    std::complex<double> normal_complex(double variance = 1.0) {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-variance * std::log1p(-u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    // Real standard normal; consumes one complex draw and caches half.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const std::complex<double> z = normal_complex(2.0);
        spare_ = z.imag();
        have_spare_ = true;
        return z.real();
    }

  private:
    std::array<std::uint32_t, 4> generate_block() const {
        std::array<std::uint32_t, 4> ctr = {static_cast<std::uint32_t>(block_counter_),
                                            static_cast<std::uint32_t>(block_counter_ >> 32),
                                            stream_[0], stream_[1]};
        std::array<std::uint32_t, 2> key = key_;
        for (int round = 0; round < 10; ++round) {
            if (round != 0) {
                key[0] += 0x9E3779B9u; // golden-ratio Weyl constants
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(0xD2511F53u) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(0xCD9E8D57u) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_;
    std::uint64_t block_counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int word_pos_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Independent generator for one (Monte-Carlo point, run) cell.  All schemes
// evaluated at the same cell share this stream, which keeps their fading and
// noise realizations common and their BER curves directly comparable.
inline PhiloxRng substream(std::uint64_t seed, std::uint32_t point_index, std::uint32_t run_index) {
    return PhiloxRng(seed, (static_cast<std::uint64_t>(point_index) << 32) | run_index);
}

} // namespace smphy

#endif // SMPHY_RNG_HPP
