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
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "smphy/errors.hpp"
#include "smphy/harness.hpp"
#include "smphy/report.hpp"

using namespace smphy;

namespace {

std::vector<BerCurve> sample_curves() {
    BerCurve a;
    a.scheme = "qpsk-sm4";
    a.points = {{-10.0, 0.123456789012345, 1280000, 2.9055e-4},
                {-8.0, 0.0123456789012345, 1280000, 9.7596e-5}};
    BerCurve b;
    b.scheme = "16qam-p1";
    b.points = {{-10.0, 0.2, 1280000, 3.5355e-4}, {-8.0, 0.0, 1280000, 0.0}};
    return {a, b};
}

std::size_t count_occurrences(const std::string &text, const std::string &needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("csv layout") {
    BerCurve c;
    c.scheme = "one";
    c.points = {{0.0, 0.5, 100, 0.05}, {2.0, 0.25, 100, 0.0433}};
    const std::string text = curves_to_csv({c});

    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 3); // header + one row per point
    CHECK(lines[0] == "scheme,snr_db,ber,n_bits,stderr");
    CHECK(lines[1].substr(0, 4) == "one,");
    CHECK(text.back() == '\n');
}

TEST_CASE("csv round-trips values to high precision") {
    const auto curves = sample_curves();
    const std::string text = curves_to_csv(curves);
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);

    for (const auto &curve : curves)
        for (const auto &pt : curve.points) {
            std::string line;
            REQUIRE(std::getline(in, line));
            for (auto &ch : line)
                if (ch == ',') ch = ' ';
            std::istringstream row(line);
            std::string scheme;
            double snr = 0.0, ber = 0.0, se = 0.0;
            std::uint64_t bits = 0;
            row >> scheme >> snr >> ber >> bits >> se;
            CHECK(scheme == curve.scheme);
            CHECK(snr == doctest::Approx(pt.snr_db).epsilon(1e-12));
            CHECK(ber == doctest::Approx(pt.ber).epsilon(1e-12));
            CHECK(bits == pt.n_bits);
            CHECK(se == doctest::Approx(pt.std_err).epsilon(1e-12));
        }
}

TEST_CASE("csv and svg bytes are deterministic") {
    const auto curves = sample_curves();
    CHECK(curves_to_csv(curves) == curves_to_csv(curves));
    CHECK(curves_to_svg(curves) == curves_to_svg(curves));
}

TEST_CASE("svg structure") {
    const auto curves = sample_curves();
    const std::string svg = curves_to_svg(curves);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "<polyline") == curves.size());
    CHECK(svg.find("SNR (dB)") != std::string::npos);
    CHECK(svg.find(">BER<") != std::string::npos);
    // legend carries each scheme name
    CHECK(svg.find("qpsk-sm4") != std::string::npos);
    CHECK(svg.find("16qam-p1") != std::string::npos);
}

TEST_CASE("file emission matches the in-memory text") {
    const auto dir = std::filesystem::temp_directory_path() / "smphy-report-tests";
    std::filesystem::create_directories(dir);
    const auto csv_path = (dir / "out.csv").string();
    const auto svg_path = (dir / "out.svg").string();
    const auto curves = sample_curves();

    emit_csv(curves, csv_path);
    emit_svg(curves, svg_path);

    const auto slurp = [](const std::string &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    CHECK(slurp(csv_path) == curves_to_csv(curves));
    CHECK(slurp(svg_path) == curves_to_svg(curves));
    std::filesystem::remove(csv_path);
    std::filesystem::remove(svg_path);
}

TEST_CASE("report guards") {
    CHECK_THROWS_AS(curves_to_csv({}), invalid_parameter_error);
    BerCurve empty;
    empty.scheme = "void";
    CHECK_THROWS_AS(curves_to_svg({empty}), invalid_parameter_error);
    CHECK_THROWS_AS(emit_csv(sample_curves(), "/nonexistent-dir/out.csv"), format_error);
}

} // TEST_SUITE
