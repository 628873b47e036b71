// Copyright 2026 The qubobs-sim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qubobs/render.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace qubobs {

namespace {

struct Point {
    double x, y;
};

struct Ring {
    double cx, cy, inner, outer;
};

// Angle t is a fraction of a turn measured clockwise from 12 o'clock.
Point at(const Ring &g, double t, double r) {
    const double a = 2.0 * std::numbers::pi * t;
    return {g.cx + r * std::sin(a), g.cy - r * std::cos(a)};
}

std::string sector_path(const Ring &g, double t0, double t1) {
    if (t1 - t0 >= 1.0 - 1e-12) {
        // Full turn: two half arcs per radius.
        std::string d = fmt::format(
            "M {0:.3f} {1:.3f} A {2:.3f} {2:.3f} 0 1 1 {0:.3f} {3:.3f} "
            "A {2:.3f} {2:.3f} 0 1 1 {0:.3f} {1:.3f} Z",
            g.cx, g.cy - g.outer, g.outer, g.cy + g.outer);
        if (g.inner > 0.0) {
            d += fmt::format(
                " M {0:.3f} {1:.3f} A {2:.3f} {2:.3f} 0 1 0 {0:.3f} {3:.3f} "
                "A {2:.3f} {2:.3f} 0 1 0 {0:.3f} {1:.3f} Z",
                g.cx, g.cy - g.inner, g.inner, g.cy + g.inner);
        }
        return d;
    }
    const int large = t1 - t0 > 0.5 ? 1 : 0;
    const Point o0 = at(g, t0, g.outer);
    const Point o1 = at(g, t1, g.outer);
    if (g.inner <= 0.0) {
        return fmt::format("M {:.3f} {:.3f} L {:.3f} {:.3f} A {:.3f} {:.3f} 0 "
                           "{} 1 {:.3f} {:.3f} Z",
                           g.cx, g.cy, o0.x, o0.y, g.outer, g.outer, large,
                           o1.x, o1.y);
    }
    const Point i0 = at(g, t0, g.inner);
    const Point i1 = at(g, t1, g.inner);
    return fmt::format("M {:.3f} {:.3f} A {:.3f} {:.3f} 0 {} 1 {:.3f} {:.3f} "
                       "L {:.3f} {:.3f} A {:.3f} {:.3f} 0 {} 0 {:.3f} {:.3f} Z",
                       o0.x, o0.y, g.outer, g.outer, large, o1.x, o1.y, i1.x,
                       i1.y, g.inner, g.inner, large, i0.x, i0.y);
}

void draw_ring(std::string &out, const DiskSystem &disk, std::size_t qubit,
               const Ring &g, const RenderSpec &spec) {
    out += fmt::format("  <g class=\"ring\" data-qubit=\"{}\">\n", qubit);
    const auto sweeps = sector_angles(disk);
    double t0 = 0.0;
    for (std::size_t i = 0; i < disk.size(); ++i) {
        const Region &r = disk[i];
        const double t1 = t0 + r.fraction;
        const std::string d = sector_path(g, t0, t1);
        out += fmt::format(
            "    <path d=\"{}\" fill=\"{}\" stroke=\"#ffffff\" "
            "stroke-width=\"0.5\" fill-rule=\"evenodd\" "
            "data-sweep=\"{:.6f}\"/>\n",
            d, r.colors[qubit] == Color::Blue ? kBlueHex : kOrangeHex,
            sweeps[i]);
        if (spec.show_signs && r.sign < 0) {
            out += fmt::format("    <path d=\"{}\" fill=\"url(#hatch)\" "
                               "fill-rule=\"evenodd\"/>\n",
                               d);
            const Point mid = at(g, (t0 + t1) / 2.0, (g.inner + g.outer) / 2.0);
            out += fmt::format(
                "    <text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"{:.1f}\" "
                "text-anchor=\"middle\" dominant-baseline=\"middle\" "
                "fill=\"#000000\">&#8722;</text>\n",
                mid.x, mid.y, std::max(8.0, (g.outer - g.inner) * 0.4));
        }
        t0 = t1;
    }
    if (spec.window_angle) {
        const double mid_r = g.inner > 0.0 ? (g.inner + g.outer) / 2.0
                                           : g.outer * 0.8;
        const Point w = at(g, *spec.window_angle, mid_r);
        out += fmt::format("    <circle class=\"window\" cx=\"{:.3f}\" "
                           "cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"none\" "
                           "stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
                           w.x, w.y, std::max(3.0, (g.outer - g.inner) * 0.15));
    }
    out += "  </g>\n";
}

} // namespace

std::vector<double> sector_angles(const DiskSystem &disk) {
    std::vector<double> out;
    out.reserve(disk.size());
    for (const auto &r : disk.regions()) {
        out.push_back(r.fraction * 360.0);
    }
    return out;
}

std::string render_svg(const DiskSystem &disk, const RenderSpec &spec) {
    if (spec.size <= 0) {
        throw std::invalid_argument("render size must be positive");
    }
    if (spec.layout == Layout::Stacked && disk.num_qubits() < 2) {
        throw std::invalid_argument("stacked layout needs at least two qubits");
    }
    if (spec.window_angle &&
        !(*spec.window_angle >= 0.0 && *spec.window_angle < 1.0)) {
        throw std::invalid_argument("window angle must lie in [0, 1)");
    }
    const double s = spec.size;
    const std::size_t n = disk.num_qubits();
    const double width = spec.layout == Layout::Stacked ? s : s * n;

    std::string out = fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
        width, s);
    out += "  <defs>\n"
           "    <pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" "
           "width=\"6\" height=\"6\" patternTransform=\"rotate(45)\">\n"
           "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#000000\" "
           "stroke-width=\"1.5\" stroke-opacity=\"0.6\"/>\n"
           "    </pattern>\n"
           "  </defs>\n";

    const double outer = s * 0.45;
    if (spec.layout == Layout::SideBySide) {
        for (std::size_t q = 0; q < n; ++q) {
            draw_ring(out, disk, q,
                      {s * (static_cast<double>(q) + 0.5), s / 2.0, 0.0, outer},
                      spec);
        }
    } else {
        const double w = outer / static_cast<double>(n);
        for (std::size_t q = 0; q < n; ++q) {
            const double ro = outer - w * static_cast<double>(q);
            const double ri = q + 1 == n ? 0.0 : ro - w;
            draw_ring(out, disk, q, {s / 2.0, s / 2.0, ri, ro}, spec);
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_text(const DiskSystem &disk) {
    std::string out;
    for (const auto &r : disk.regions()) {
        out += fmt::format("[{} {:.3f} {}]", r.color_string(), r.fraction,
                           r.sign < 0 ? '-' : '+');
    }
    return out;
}

} // namespace qubobs
