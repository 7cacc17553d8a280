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

#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "smphy/errors.hpp"
#include "smphy/patterns.hpp"

using namespace smphy;
using cplx = std::complex<double>;

namespace {

RadiationPattern harmonic(const AngularGrid &grid, int order) {
    std::vector<cplx> g(static_cast<std::size_t>(grid.n_samples()));
    for (int k = 0; k < grid.n_samples(); ++k)
        g[static_cast<std::size_t>(k)] = std::polar(1.0, order * grid.angle(k));
    return {grid, std::move(g)};
}

std::filesystem::path scratch_file(const char *name) {
    auto dir = std::filesystem::temp_directory_path() / "smphy-pattern-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_SUITE("patterns") {

TEST_CASE("angular grid basics") {
    CHECK_THROWS_AS(AngularGrid(7), invalid_parameter_error);
    AngularGrid g(360);
    CHECK(g.n_samples() == 360);
    CHECK(g.angle(0) == 0.0);
    CHECK(g.angle(90) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    // wrapping nearest-index lookups
    CHECK(g.nearest_index(0.0) == 0);
    CHECK(g.nearest_index(2.0 * std::numbers::pi - 1e-9) == 0);
    CHECK(g.nearest_index(-0.01) == 359);
    CHECK(g.nearest_index(g.angle(123) + 1e-7) == 123);
    CHECK(g.nearest_index(g.angle(123) + 0.6 * (g.angle(1) - g.angle(0))) == 124);
}

TEST_CASE("pattern construction guards") {
    AngularGrid g(16);
    CHECK_THROWS_AS(RadiationPattern(g, std::vector<cplx>(8, cplx(1, 0))),
                    invalid_parameter_error); // wrong sample count
    CHECK_THROWS_AS(RadiationPattern(g, std::vector<cplx>(16, cplx(0, 0))),
                    degenerate_pattern_error); // zero everywhere
}

TEST_CASE("gain lookup snaps to the nearest grid angle") {
    AngularGrid g(8);
    std::vector<cplx> v(8);
    for (int k = 0; k < 8; ++k) v[static_cast<std::size_t>(k)] = cplx(k + 1, 0);
    RadiationPattern p(g, v);
    CHECK(p.gain_at(g.angle(3)) == cplx(4, 0));
    CHECK(p.gain_at(g.angle(3) + 0.1) == cplx(4, 0));
    CHECK(p.gain_at(2.0 * std::numbers::pi - 0.01) == cplx(1, 0));
}

TEST_CASE("correlation identities") {
    AngularGrid g(360);
    const auto e1 = harmonic(g, 1);
    const auto e2 = harmonic(g, 2);

    CHECK(std::abs(pattern_correlation(e1, e1) - 1.0) <= 1e-12);
    // distinct complex exponentials are orthogonal under the periodic rule
    CHECK(std::abs(pattern_correlation(e1, e2)) <= 1e-12);
    // symmetry
    CHECK(pattern_correlation(e1, e2) == pattern_correlation(e2, e1));
    // scale invariance: psi(a, c*a) = 1
    std::vector<cplx> scaled = e1.gains;
    for (auto &x : scaled) x *= cplx(0.0, -3.7);
    CHECK(std::abs(pattern_correlation(e1, RadiationPattern(g, scaled)) - 1.0) <= 1e-12);

    AngularGrid other(180);
    CHECK_THROWS_AS(pattern_correlation(e1, harmonic(other, 1)), grid_mismatch_error);
}

TEST_CASE("antenna model construction") {
    AngularGrid g(64), h(32);
    std::vector<RadiationPattern> mixed = {harmonic(g, 0), harmonic(h, 1)};
    CHECK_THROWS_AS(AntennaModel(mixed, "broken"), grid_mismatch_error);
    CHECK_THROWS_AS(AntennaModel({}, "empty"), invalid_parameter_error);

    AntennaModel ant({harmonic(g, 0), harmonic(g, 1)}, "pair");
    CHECK(ant.port_count() == 2);
    CHECK(ant.label() == "pair");
    CHECK(&ant.port(1) == &ant.ports()[0]); // 1-based port access
}

TEST_CASE("built-in correlation targets") {
    const auto t1 = builtin_psi_table(1);
    const auto t2 = builtin_psi_table(2);
    REQUIRE(t1.rows() == 4);
    REQUIRE(t2.rows() == 2);
    CHECK(t1(0, 1) == 0.0722);
    CHECK(t1(0, 2) == 0.0593);
    CHECK(t1(0, 3) == 0.0007);
    CHECK(t1(1, 2) == 0.0158);
    CHECK(t1(1, 3) == 0.0522);
    CHECK(t1(2, 3) == 0.0688);
    CHECK(t2(0, 1) == 0.3190);
    for (int i = 0; i < 4; ++i) CHECK(t1(i, i) == 1.0);
    CHECK_THROWS_AS(builtin_psi_table(3), invalid_parameter_error);
}

TEST_CASE("synthesis reproduces its correlation target") {
    AngularGrid g(360);
    for (int table : {1, 2}) {
        const auto target = builtin_psi_table(table);
        const auto ant = synthesize_antenna(static_cast<int>(target.rows()), target, g);
        const auto realized = correlation_matrix(ant);
        for (int i = 0; i < target.rows(); ++i)
            for (int j = 0; j < target.cols(); ++j)
                CHECK(std::abs(realized(i, j) - target(i, j)) <= 1e-6);
    }
}

TEST_CASE("synthesis corner targets") {
    AngularGrid g(64);
    // orthogonal ports
    Eigen::MatrixXd zero = Eigen::MatrixXd::Identity(2, 2);
    auto orth = synthesize_antenna(2, zero, g);
    CHECK(std::abs(pattern_correlation(orth.port(1), orth.port(2))) <= 1e-12);
    // fully correlated ports survive the semidefinite factorization
    Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(2, 2);
    auto merged = synthesize_antenna(2, ones, g);
    CHECK(pattern_correlation(merged.port(1), merged.port(2)) ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("synthesis respects the sampling theorem bound") {
    // realized correlations must be grid-independent once n >= 2P
    const auto target = builtin_psi_table(1);
    const auto a360 = correlation_matrix(synthesize_antenna(4, target, AngularGrid(360)));
    const auto a720 = correlation_matrix(synthesize_antenna(4, target, AngularGrid(720)));
    const auto a16 = correlation_matrix(synthesize_antenna(4, target, AngularGrid(16)));
    CHECK((a360 - a720).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((a360 - a16).cwiseAbs().maxCoeff() < 1e-10);
    // five ports need at least ten samples
    CHECK_THROWS_AS(synthesize_antenna(5, Eigen::MatrixXd::Identity(5, 5), AngularGrid(8)),
                    invalid_parameter_error);
}

TEST_CASE("synthesis target validation") {
    AngularGrid g(64);
    Eigen::MatrixXd bad = builtin_psi_table(2);

    Eigen::MatrixXd wrong_shape = Eigen::MatrixXd::Identity(3, 2);
    CHECK_THROWS_AS(synthesize_antenna(2, wrong_shape, g), invalid_target_error);

    bad(0, 0) = 0.9; // diagonal must be one
    CHECK_THROWS_AS(synthesize_antenna(2, bad, g), invalid_target_error);

    bad = builtin_psi_table(2);
    bad(0, 1) = 0.2; // asymmetric
    CHECK_THROWS_AS(synthesize_antenna(2, bad, g), invalid_target_error);

    bad = builtin_psi_table(2);
    bad(0, 1) = bad(1, 0) = 1.2; // out of [0, 1]
    CHECK_THROWS_AS(synthesize_antenna(2, bad, g), invalid_target_error);
    bad(0, 1) = bad(1, 0) = -0.1;
    CHECK_THROWS_AS(synthesize_antenna(2, bad, g), invalid_target_error);
}

TEST_CASE("file round-trip is exact") {
    const auto ant = synthesize_antenna(4, builtin_psi_table(1), AngularGrid(360), "table1");
    const auto path = scratch_file("roundtrip.pat");
    save_antenna(ant, path.string());
    const auto back = load_antenna(path.string());
    REQUIRE(back.port_count() == 4);
    REQUIRE(back.grid() == ant.grid());
    for (int p = 1; p <= 4; ++p)
        for (int k = 0; k < 360; ++k) {
            // 17 significant digits round-trip doubles exactly
            CHECK(back.port(p).gains[static_cast<std::size_t>(k)] ==
                  ant.port(p).gains[static_cast<std::size_t>(k)]);
        }
    const auto psi = correlation_matrix(back);
    const auto target = builtin_psi_table(1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(psi(i, j) - target(i, j)) <= 1e-3);
    std::filesystem::remove(path);
}

TEST_CASE("antenna file parsing errors carry line context") {
    const auto path = scratch_file("bad.pat");

    auto write = [&](const char *text) {
        std::ofstream out(path);
        out << text;
    };

    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_antenna((path.parent_path() / "nope.pat").string()), format_error);
    }
    SUBCASE("bad header") {
        write("ports=x samples=16\n");
        CHECK_THROWS_WITH_AS(load_antenna(path.string()),
                             doctest::Contains("line 1"), format_error);
    }
    SUBCASE("garbage row") {
        write("ports=1 samples=8\n1 0 1 0\nnot a row\n");
        CHECK_THROWS_WITH_AS(load_antenna(path.string()),
                             doctest::Contains("line 3"), format_error);
    }
    SUBCASE("port index out of range") {
        write("ports=1 samples=8\n2 0 1 0\n");
        CHECK_THROWS_AS(load_antenna(path.string()), format_error);
    }
    SUBCASE("duplicate sample") {
        write("ports=1 samples=8\n1 3 1 0\n1 3 1 0\n");
        CHECK_THROWS_AS(load_antenna(path.string()), format_error);
    }
    SUBCASE("mismatched sample counts between ports") {
        std::string text = "ports=2 samples=8\n";
        for (int k = 0; k < 8; ++k) text += "1 " + std::to_string(k) + " 1 0\n";
        for (int k = 0; k < 4; ++k) text += "2 " + std::to_string(k) + " 1 0\n";
        write(text.c_str());
        CHECK_THROWS_AS(load_antenna(path.string()), format_error);
    }
    std::filesystem::remove(path);
}

} // TEST_SUITE
