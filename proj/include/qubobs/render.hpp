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
/**
 * @file
 * Diagram output for DiskSystems: SVG (side-by-side disks or stacked rings)
 * and a one-line ASCII form.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qubobs/disk.hpp"

namespace qubobs {

enum class Layout { SideBySide, Stacked };

struct RenderSpec {
    Layout layout = Layout::SideBySide;
    /// Fraction of a turn; drawn as a small circle on every ring.
    std::optional<double> window_angle;
    bool show_signs = true;
    int size = 240;
};

inline constexpr const char *kBlueHex = "#1f77b4";
inline constexpr const char *kOrangeHex = "#ff7f0e";

/// Sweep of each region in degrees, clockwise from 12 o'clock.
std::vector<double> sector_angles(const DiskSystem &disk);

/**
 * Deterministic SVG 1.1 document. In the stacked layout qubit 0 is the
 * outermost ring and rings have equal width. Throws std::invalid_argument for
 * a stacked one-qubit disk or a non-positive size.
 */
std::string render_svg(const DiskSystem &disk, const RenderSpec &spec);

/// `[B 0.500 +][O 0.500 -]`
std::string render_text(const DiskSystem &disk);

} // namespace qubobs
