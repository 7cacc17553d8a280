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

#include "smphy/patterns.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "smphy/errors.hpp"

namespace smphy {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

AngularGrid::AngularGrid(int n_samples) : n_(n_samples) {
    if (n_samples < 8)
        throw invalid_parameter_error("angular grid needs at least 8 samples, got " +
                                      std::to_string(n_samples));
}

double AngularGrid::angle(int k) const { return two_pi * k / n_; }

int AngularGrid::nearest_index(double theta) const {
    const long long k = std::llround(theta * n_ / two_pi);
    return static_cast<int>(((k % n_) + n_) % n_);
}

RadiationPattern::RadiationPattern(AngularGrid g, std::vector<std::complex<double>> gain_samples)
    : grid(g), gains(std::move(gain_samples)) {
    if (static_cast<int>(gains.size()) != grid.n_samples())
        throw invalid_parameter_error("pattern has " + std::to_string(gains.size()) +
                                      " gains but the grid has " +
                                      std::to_string(grid.n_samples()) + " samples");
    bool any_nonzero = false;
    for (const auto &g_k : gains)
        any_nonzero |= (g_k != std::complex<double>{0.0, 0.0});
    if (!any_nonzero)
        throw degenerate_pattern_error("radiation pattern is identically zero");
}

std::complex<double> RadiationPattern::gain_at(double theta) const {
    return gains[static_cast<std::size_t>(grid.nearest_index(theta))];
}

AntennaModel::AntennaModel(std::vector<RadiationPattern> ports, std::string label)
    : ports_(std::move(ports)), label_(std::move(label)) {
    if (ports_.empty())
        throw invalid_parameter_error("antenna needs at least one port");
    for (const auto &p : ports_)
        if (!(p.grid == ports_.front().grid))
            throw grid_mismatch_error("antenna ports use different angular grids");
}

double pattern_correlation(const RadiationPattern &a, const RadiationPattern &b) {
    if (!(a.grid == b.grid))
        throw grid_mismatch_error("patterns sampled on different angular grids");
    // Periodic trapezoid rule: every integral is (2*pi/N) * sum of samples;
    // the quadrature weights cancel in the normalized ratio.
    std::complex<double> inner{0.0, 0.0};
    double energy_a = 0.0, energy_b = 0.0;
    for (std::size_t k = 0; k < a.gains.size(); ++k) {
        inner += a.gains[k] * std::conj(b.gains[k]);
        energy_a += std::norm(a.gains[k]);
        energy_b += std::norm(b.gains[k]);
    }
    if (energy_a == 0.0 || energy_b == 0.0)
        throw degenerate_pattern_error("pattern with zero energy in correlation");
    return std::norm(inner) / (energy_a * energy_b);
}

Eigen::MatrixXd correlation_matrix(const AntennaModel &antenna) {
    const int P = antenna.port_count();
    Eigen::MatrixXd psi(P, P);
    for (int p = 0; p < P; ++p)
        for (int q = p; q < P; ++q) {
            const double v = pattern_correlation(antenna.ports()[static_cast<std::size_t>(p)],
                                                 antenna.ports()[static_cast<std::size_t>(q)]);
            psi(p, q) = v;
            psi(q, p) = v;
        }
    return psi;
}

AntennaModel synthesize_antenna(int ports, const Eigen::MatrixXd &target_psi,
                                const AngularGrid &grid, std::string label) {
    if (ports < 1)
        throw invalid_parameter_error("port count must be >= 1");
    if (target_psi.rows() != ports || target_psi.cols() != ports)
        throw invalid_target_error("target matrix is " + std::to_string(target_psi.rows()) + "x" +
                                   std::to_string(target_psi.cols()) + ", expected " +
                                   std::to_string(ports) + "x" + std::to_string(ports));
    if (grid.n_samples() < 2 * ports)
        throw invalid_parameter_error("grid too coarse for " + std::to_string(ports) + " ports");
    for (int p = 0; p < ports; ++p) {
        if (std::abs(target_psi(p, p) - 1.0) > 1e-12)
            throw invalid_target_error("target diagonal must be 1");
        for (int q = 0; q < ports; ++q) {
            if (std::abs(target_psi(p, q) - target_psi(q, p)) > 1e-12)
                throw invalid_target_error("target matrix is not symmetric");
            if (target_psi(p, q) < 0.0 || target_psi(p, q) > 1.0)
                throw invalid_target_error("target correlations must lie in [0, 1]");
        }
    }

    // Gram target with real nonnegative inter-port inner products (psi only
    // constrains magnitudes, so the phase is free and we pick zero).
    Eigen::MatrixXd gram = target_psi.array().sqrt().matrix();

    // Nearest-PSD repair: clip negative eigenvalues, then restore the unit
    // diagonal so port energies stay equal.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(0.0);
    gram = eig.eigenvectors() * lam.asDiagonal() * eig.eigenvectors().transpose();
    Eigen::VectorXd d = gram.diagonal();
    for (int p = 0; p < ports; ++p)
        if (d(p) <= 0.0)
            throw invalid_target_error("target collapses a port to zero energy");
    Eigen::VectorXd dinv = d.cwiseSqrt().cwiseInverse();
    gram = dinv.asDiagonal() * gram * dinv.asDiagonal();

    // Cholesky factor; semidefinite targets (e.g. fully correlated ports)
    // need a whisper of diagonal jitter to factor.
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    double jitter = 1e-15;
    while (llt.info() != Eigen::Success) {
        if (jitter > 1e-6)
            throw invalid_target_error("target matrix could not be factored");
        llt.compute(gram + jitter * Eigen::MatrixXd::Identity(ports, ports));
        jitter *= 10.0;
    }
    const Eigen::MatrixXd L = llt.matrixL();

    // Mix orthogonal Fourier modes e^{j n theta} with the Cholesky rows; the
    // resulting patterns have Gram matrix N * gram under the trapezoid rule.
    const int N = grid.n_samples();
    std::vector<RadiationPattern> result;
    result.reserve(static_cast<std::size_t>(ports));
    for (int p = 0; p < ports; ++p) {
        std::vector<std::complex<double>> gains(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) {
            std::complex<double> v{0.0, 0.0};
            for (int n = 0; n <= p; ++n) // L is lower triangular
                v += L(p, n) * std::polar(1.0, n * grid.angle(k));
            gains[static_cast<std::size_t>(k)] = v;
        }
        result.emplace_back(grid, std::move(gains));
    }
    return AntennaModel(std::move(result), std::move(label));
}

Eigen::MatrixXd builtin_psi_table(int table) {
    if (table == 1) {
        Eigen::MatrixXd psi(4, 4);
        psi << 1.0000, 0.0722, 0.0593, 0.0007, //
            0.0722, 1.0000, 0.0158, 0.0522,    //
            0.0593, 0.0158, 1.0000, 0.0688,    //
            0.0007, 0.0522, 0.0688, 1.0000;
        return psi;
    }
    if (table == 2) {
        Eigen::MatrixXd psi(2, 2);
        psi << 1.0000, 0.3190, //
            0.3190, 1.0000;
        return psi;
    }
    throw invalid_parameter_error("no built-in correlation table " + std::to_string(table));
}

namespace {

[[noreturn]] void fail_format(const std::string &path, int line_no, const std::string &what) {
    throw format_error("antenna file " + path + ": line " + std::to_string(line_no) + ": " + what);
}

} // namespace

AntennaModel load_antenna(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw format_error("antenna file " + path + ": cannot open");

    std::string line;
    int line_no = 0;
    int P = 0, N = 0;
    // Header.
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (std::sscanf(line.c_str(), "ports=%d samples=%d", &P, &N) != 2)
            fail_format(path, line_no, "expected header 'ports=<P> samples=<N>'");
        break;
    }
    if (P < 1 || N < 8)
        fail_format(path, line_no, "invalid header values (need ports >= 1, samples >= 8)");

    std::vector<std::vector<std::complex<double>>> gains(
        static_cast<std::size_t>(P), std::vector<std::complex<double>>(static_cast<std::size_t>(N)));
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(P),
                                        std::vector<bool>(static_cast<std::size_t>(N), false));
    long entries = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        int p = 0, k = 0;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%d %d %lf %lf", &p, &k, &re, &im) != 4)
            fail_format(path, line_no, "expected 'p k re im'");
        if (p < 1 || p > P)
            fail_format(path, line_no, "port index " + std::to_string(p) + " outside 1.." + std::to_string(P));
        if (k < 0 || k >= N)
            fail_format(path, line_no, "sample index " + std::to_string(k) + " outside 0.." + std::to_string(N - 1));
        if (seen[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(k)])
            fail_format(path, line_no, "duplicate entry for port " + std::to_string(p) + " sample " + std::to_string(k));
        seen[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(k)] = true;
        gains[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(k)] = {re, im};
        ++entries;
    }
    if (entries != static_cast<long>(P) * N)
        throw format_error("antenna file " + path + ": has " + std::to_string(entries) +
                           " entries, expected " + std::to_string(static_cast<long>(P) * N) +
                           " (inconsistent sample counts across ports?)");

    const AngularGrid grid(N);
    std::vector<RadiationPattern> ports;
    ports.reserve(static_cast<std::size_t>(P));
    for (auto &g : gains)
        ports.emplace_back(grid, std::move(g));
    return AntennaModel(std::move(ports), path);
}

void save_antenna(const AntennaModel &antenna, const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw format_error("antenna file " + path + ": cannot open for writing");
    const int P = antenna.port_count();
    const int N = antenna.grid().n_samples();
    out << "ports=" << P << " samples=" << N << "\n";
    out << std::setprecision(17);
    for (int p = 1; p <= P; ++p) {
        const auto &gains = antenna.port(p).gains;
        for (int k = 0; k < N; ++k)
            out << p << " " << k << " " << gains[static_cast<std::size_t>(k)].real() << " "
                << gains[static_cast<std::size_t>(k)].imag() << "\n";
    }
    if (!out)
        throw format_error("antenna file " + path + ": write failed");
}

} // namespace smphy
