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

#ifndef SMPHY_PATTERNS_HPP
#define SMPHY_PATTERNS_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace smphy {

// Uniform circle of n_samples angles theta_k = 2*pi*k/n_samples covering
// [0, 2*pi) once.  Radiation patterns are stored as samples on this grid and
// angular integrals use the periodic trapezoidal rule (spectrally accurate
// for the band-limited patterns generated here).
class AngularGrid {
  public:
    explicit AngularGrid(int n_samples); // n_samples >= 8
    int n_samples() const { return n_; }
    double angle(int k) const;
    // Index of the grid angle closest to theta (any real theta; wraps).
    int nearest_index(double theta) const;
    friend bool operator==(const AngularGrid &, const AngularGrid &) = default;

  private:
    int n_;
};

// Complex field gain delta_p(theta) of one antenna port, sampled on a grid.
struct RadiationPattern {
    AngularGrid grid;
    std::vector<std::complex<double>> gains; // gains[k] = delta(theta_k)

    RadiationPattern(AngularGrid g, std::vector<std::complex<double>> gain_samples);
    // Gain at an arbitrary azimuth via nearest-grid-point lookup.
    std::complex<double> gain_at(double theta) const;
};

// A P-port antenna: one pattern per port, all on the same grid.
class AntennaModel {
  public:
    AntennaModel(std::vector<RadiationPattern> ports, std::string label);
    int port_count() const { return static_cast<int>(ports_.size()); }
    const RadiationPattern &port(int p) const { return ports_[static_cast<std::size_t>(p - 1)]; } // 1-based
    const std::vector<RadiationPattern> &ports() const { return ports_; }
    const AngularGrid &grid() const { return ports_.front().grid; }
    const std::string &label() const { return label_; }

  private:
    std::vector<RadiationPattern> ports_;
    std::string label_;
};

// Normalized power correlation between two patterns:
//   psi = |∫ a(θ) b*(θ) dθ|² / (∫|a|²dθ · ∫|b|²dθ)  in [0, 1].
// Throws grid_mismatch_error for different grids and
// degenerate_pattern_error if either pattern has zero energy.
double pattern_correlation(const RadiationPattern &a, const RadiationPattern &b);

// P x P matrix of pairwise correlations; symmetric with unit diagonal.
Eigen::MatrixXd correlation_matrix(const AntennaModel &antenna);

// Manufacture a P-port antenna whose correlation matrix reproduces
// target_psi.  The inter-port Gram matrix is chosen real nonnegative,
// G_pq = sqrt(target_psi_pq); G is projected to the nearest PSD matrix
// (eigenvalue clipping, diagonal renormalized to 1) and Cholesky-factored
// G = L L^T; port p is delta_p(theta_k) = sum_n L_pn e^{j n theta_k}.  The
// complex exponentials are orthogonal under the periodic trapezoid rule, so
// the realized Gram matrix equals G exactly and psi = G² elementwise.
AntennaModel synthesize_antenna(int ports, const Eigen::MatrixXd &target_psi,
                                const AngularGrid &grid, std::string label = "synthesized");

// Built-in correlation targets for the two reference antennas: the 4-port
// multiport switchable antenna (table 1) and the 2-port monoport
// reconfigurable antenna (table 2).
Eigen::MatrixXd builtin_psi_table(int table);

// Antenna file I/O.  Format: header line "ports=<P> samples=<N>", then one
// line "p k re im" per port p (1-based) and grid index k (0-based).  The
// writer emits 17 significant digits so round-trips are exact.
AntennaModel load_antenna(const std::string &path);
void save_antenna(const AntennaModel &antenna, const std::string &path);

} // namespace smphy

#endif // SMPHY_PATTERNS_HPP
