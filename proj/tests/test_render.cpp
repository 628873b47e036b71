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
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "qubobs/dynamics.hpp"
#include "qubobs/render.hpp"
#include "test_util.hpp"

using namespace qubobs;
using qubobs::testing::disk;
using qubobs::testing::random_state;
using qubobs::testing::region;

namespace {

struct Sector {
    double sweep;
    std::string fill;
};

// Region paths in document order, read back out of the SVG text.
std::vector<Sector> sectors(const std::string &svg) {
    static const std::regex re(
        R"re(fill="(#[0-9a-f]{6})"[^>]*data-sweep="([0-9.]+)")re");
    std::vector<Sector> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re);
         it != std::sregex_iterator(); ++it) {
        out.push_back({std::stod((*it)[2]), (*it)[1]});
    }
    return out;
}

std::size_t count(const std::string &text, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

DiskSystem pair_disk() {
    const double a = 1 / std::sqrt(3.0);
    const double b = 1 / std::sqrt(6.0);
    return encode_pair({a, b, a, b}).disk;
}

DiskSystem broken_disk() {
    return apply_gate_disk(
        encode_qubit(std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0)), Gate::H(), 0);
}

} // namespace

TEST(RenderSvg, SingleBlueCircle) {
    const auto svg = render_svg(disk({region(1.0, "B")}), {});
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
    const auto s = sectors(svg);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_NEAR(s[0].sweep, 360.0, 1e-6);
    EXPECT_EQ(s[0].fill, kBlueHex);
    EXPECT_EQ(count(svg, kOrangeHex), 0u);
    EXPECT_EQ(count(svg, "&#8722;"), 0u);
}

TEST(RenderSvg, StackedPairSectors) {
    const auto svg = render_svg(pair_disk(), {Layout::Stacked});
    const auto s = sectors(svg);
    // Two rings, four sectors each, outer ring (qubit 0) first.
    ASSERT_EQ(s.size(), 8u);
    const double expect[] = {120, 60, 120, 60};
    const char *outer[] = {kBlueHex, kBlueHex, kOrangeHex, kOrangeHex};
    const char *inner[] = {kBlueHex, kOrangeHex, kOrangeHex, kBlueHex};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(s[i].sweep, expect[i], 1e-6);
        EXPECT_NEAR(s[i + 4].sweep, expect[i], 1e-6);
        EXPECT_EQ(s[i].fill, outer[i]);
        EXPECT_EQ(s[i + 4].fill, inner[i]);
    }
    EXPECT_NE(svg.find("data-qubit=\"0\""), std::string::npos);
    EXPECT_NE(svg.find("data-qubit=\"1\""), std::string::npos);
}

TEST(RenderSvg, NegativeSectorIsHatched) {
    const auto svg = render_svg(broken_disk(), {});
    const auto s = sectors(svg);
    ASSERT_EQ(s.size(), 4u);
    const double expect[] = {120, 120, 60, 60};
    for (int i = 0; i < 4; ++i) {
        EXPECT_NEAR(s[i].sweep, expect[i], 1e-6);
    }
    EXPECT_EQ(count(svg, "url(#hatch)"), 1u);
    EXPECT_EQ(count(svg, "&#8722;"), 1u);
    // The hatch overlay follows the last sector.
    EXPECT_GT(svg.find("url(#hatch)"), svg.rfind("data-sweep"));

    RenderSpec plain;
    plain.show_signs = false;
    const auto unsigned_svg = render_svg(broken_disk(), plain);
    EXPECT_EQ(count(unsigned_svg, "url(#hatch)"), 0u);
    EXPECT_EQ(count(unsigned_svg, "&#8722;"), 0u);
}

TEST(RenderSvg, WindowOnEveryRing) {
    RenderSpec spec;
    spec.window_angle = 0.25;
    EXPECT_EQ(count(render_svg(pair_disk(), spec), "class=\"window\""), 2u);
    spec.layout = Layout::Stacked;
    EXPECT_EQ(count(render_svg(pair_disk(), spec), "class=\"window\""), 2u);
    // At 12 o'clock the window sits straight above the centre.
    spec.layout = Layout::SideBySide;
    spec.window_angle = 0.0;
    const auto svg = render_svg(disk({region(1.0, "B")}), spec);
    EXPECT_NE(svg.find("cx=\"120.000\" cy=\"33.600\""), std::string::npos);
}

TEST(RenderSvg, SweepsSumToFullTurn) {
    std::mt19937_64 gen(61);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto d = encode_state(random_state(gen, n));
        double total = 0.0;
        for (double a : sector_angles(d)) {
            total += a;
        }
        EXPECT_NEAR(total, 360.0, 1e-3);
        double rendered = 0.0;
        for (const auto &s : sectors(render_svg(d, {}))) {
            rendered += s.sweep;
        }
        EXPECT_NEAR(rendered, 360.0 * static_cast<double>(n), 1e-3);
    }
}

TEST(RenderSvg, Deterministic) {
    std::mt19937_64 gen(62);
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = encode_state(random_state(gen, 2));
        RenderSpec spec{Layout::Stacked, 0.3, true, 300};
        EXPECT_EQ(render_svg(d, spec), render_svg(d, spec));
    }
}

TEST(RenderSvg, MatchesGoldenFile) {
    const char *dir = std::getenv("QUBOBS_TEST_DATA");
    if (dir == nullptr) {
        GTEST_SKIP() << "QUBOBS_TEST_DATA not set";
    }
    std::ifstream in(std::string(dir) + "/pair_stacked.svg");
    ASSERT_TRUE(in.good());
    std::stringstream golden;
    golden << in.rdbuf();
    RenderSpec spec;
    spec.layout = Layout::Stacked;
    spec.window_angle = 0.5;
    EXPECT_EQ(render_svg(pair_disk(), spec), golden.str());
}

TEST(RenderSvg, Errors) {
    EXPECT_THROW(render_svg(disk({region(1.0, "B")}), {Layout::Stacked}),
                 std::invalid_argument);
    RenderSpec bad;
    bad.size = 0;
    EXPECT_THROW(render_svg(pair_disk(), bad), std::invalid_argument);
    bad = {};
    bad.window_angle = 1.0;
    EXPECT_THROW(render_svg(pair_disk(), bad), std::invalid_argument);
}

TEST(RenderText, Examples) {
    EXPECT_EQ(render_text(disk({region(0.5, "B"), region(0.5, "O", -1)})),
              "[B 0.500 +][O 0.500 -]");
    EXPECT_EQ(render_text(pair_disk()),
              "[BB 0.333 +][BO 0.167 +][OO 0.333 +][OB 0.167 +]");
    const auto text = render_text(broken_disk());
    EXPECT_EQ(text, "[B 0.333 +][O 0.333 +][B 0.167 +][O 0.167 -]");
    for (char c : text) {
        EXPECT_LT(static_cast<unsigned char>(c), 128);
    }
}
