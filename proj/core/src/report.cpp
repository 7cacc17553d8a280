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

#include "smphy/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "smphy/errors.hpp"

namespace smphy {

namespace {

std::string fmt(double v, int significant = 15) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, v);
    return buf;
}

void write_file(const std::string &text, const std::string &path, const char *what) {
    std::ofstream out(path, std::ios::binary); // binary: byte-stable across platforms
    if (!out)
        throw format_error(std::string(what) + " file " + path + ": cannot open for writing");
    out << text;
    if (!out)
        throw format_error(std::string(what) + " file " + path + ": write failed");
}

void require_curves(const std::vector<BerCurve> &curves) {
    if (curves.empty())
        throw invalid_parameter_error("no curves to report");
}

} // namespace

std::string curves_to_csv(const std::vector<BerCurve> &curves) {
    require_curves(curves);
    std::string text = "scheme,snr_db,ber,n_bits,stderr\n";
    for (const auto &curve : curves)
        for (const auto &pt : curve.points) {
            text += curve.scheme;
            text += ',';
            text += fmt(pt.snr_db);
            text += ',';
            text += fmt(pt.ber);
            text += ',';
            text += std::to_string(pt.n_bits);
            text += ',';
            text += fmt(pt.std_err);
            text += '\n';
        }
    return text;
}

void emit_csv(const std::vector<BerCurve> &curves, const std::string &path) {
    write_file(curves_to_csv(curves), path, "csv");
}

std::string curves_to_svg(const std::vector<BerCurve> &curves) {
    require_curves(curves);
    static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
    constexpr int n_colors = static_cast<int>(sizeof(palette) / sizeof(palette[0]));
    constexpr double width = 840.0, height = 560.0;
    constexpr double ml = 78.0, mr = 24.0, mt = 24.0, mb = 58.0;
    const double plot_w = width - ml - mr;
    const double plot_h = height - mt - mb;

    // Axis ranges: linear SNR from the data, log10 BER by whole decades.
    double x_lo = 0.0, x_hi = 0.0;
    double ber_lo = 1.0, ber_hi = 0.0;
    bool first = true, any_nonzero = false;
    for (const auto &curve : curves)
        for (const auto &pt : curve.points) {
            x_lo = first ? pt.snr_db : std::min(x_lo, pt.snr_db);
            x_hi = first ? pt.snr_db : std::max(x_hi, pt.snr_db);
            first = false;
            if (pt.ber > 0.0) {
                any_nonzero = true;
                ber_lo = std::min(ber_lo, pt.ber);
                ber_hi = std::max(ber_hi, pt.ber);
            }
        }
    if (first)
        throw invalid_parameter_error("curves contain no points");
    if (x_hi == x_lo) {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    int dec_lo = any_nonzero ? static_cast<int>(std::floor(std::log10(ber_lo))) : -6;
    int dec_hi = any_nonzero ? static_cast<int>(std::ceil(std::log10(ber_hi))) : 0;
    if (dec_hi <= dec_lo)
        dec_hi = dec_lo + 1;

    auto x_at = [&](double snr) { return ml + (snr - x_lo) / (x_hi - x_lo) * plot_w; };
    auto y_at = [&](double ber) {
        const double l = std::log10(ber);
        return mt + (dec_hi - l) / (dec_hi - dec_lo) * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width, 6) + "\" height=\"" +
           fmt(height, 6) + "\" viewBox=\"0 0 " + fmt(width, 6) + " " + fmt(height, 6) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Decade grid lines and y tick labels.
    for (int d = dec_lo; d <= dec_hi; ++d) {
        const double y = y_at(std::pow(10.0, d));
        svg += "<line x1=\"" + fmt(ml, 6) + "\" y1=\"" + fmt(y, 6) + "\" x2=\"" +
               fmt(width - mr, 6) + "\" y2=\"" + fmt(y, 6) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(ml - 8, 6) + "\" y=\"" + fmt(y + 4, 6) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" +
               std::to_string(d) + "</text>\n";
    }
    // X ticks: 9 evenly spaced positions.
    for (int i = 0; i <= 8; ++i) {
        const double snr = x_lo + (x_hi - x_lo) * i / 8.0;
        const double x = x_at(snr);
        svg += "<line x1=\"" + fmt(x, 6) + "\" y1=\"" + fmt(mt, 6) + "\" x2=\"" + fmt(x, 6) +
               "\" y2=\"" + fmt(height - mb, 6) + "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(x, 6) + "\" y=\"" + fmt(height - mb + 18, 6) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               fmt(snr, 6) + "</text>\n";
    }
    // Frame.
    svg += "<rect x=\"" + fmt(ml, 6) + "\" y=\"" + fmt(mt, 6) + "\" width=\"" + fmt(plot_w, 6) +
           "\" height=\"" + fmt(plot_h, 6) + "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // Curves (zero-BER points have no finite log position and are skipped).
    int color = 0;
    for (const auto &curve : curves) {
        std::string pts;
        for (const auto &pt : curve.points) {
            if (pt.ber <= 0.0)
                continue;
            pts += fmt(x_at(pt.snr_db), 8) + "," + fmt(y_at(pt.ber), 8) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(palette[color % n_colors]) +
               "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        // Legend entry.
        const double ly = mt + 18.0 + 18.0 * color;
        svg += "<line x1=\"" + fmt(width - mr - 150, 6) + "\" y1=\"" + fmt(ly - 4, 6) + "\" x2=\"" +
               fmt(width - mr - 122, 6) + "\" y2=\"" + fmt(ly - 4, 6) + "\" stroke=\"" +
               palette[color % n_colors] + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt(width - mr - 116, 6) + "\" y=\"" + fmt(ly, 6) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + curve.scheme + "</text>\n";
        ++color;
    }

    // Axis labels.
    svg += "<text x=\"" + fmt(ml + plot_w / 2, 6) + "\" y=\"" + fmt(height - 14, 6) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">SNR (dB)</text>\n";
    svg += "<text x=\"20\" y=\"" + fmt(mt + plot_h / 2, 6) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 20 " +
           fmt(mt + plot_h / 2, 6) + ")\">BER</text>\n";
    svg += "</svg>\n";
    return svg;
}

void emit_svg(const std::vector<BerCurve> &curves, const std::string &path) {
    write_file(curves_to_svg(curves), path, "svg");
}

} // namespace smphy
