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
 * Operations on DiskSystems: gate splitting, the spinning measurement window,
 * and the explicit cancellation shortcut.
 *
 * Gate application is exact term by term: a region of area f and sign s stands
 * for the amplitude term s*sqrt(f), and a gate splits it into one child per
 * image component. Only cancel() merges opposite-sign terms, and it reports
 * whether doing so agreed with the amplitudes.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qubobs/disk.hpp"
#include "qubobs/exact.hpp"

namespace qubobs {

struct MeasurementOutcome {
    std::size_t qubit;
    Color color;
    /// Unsigned area of all regions showing `color` on `qubit`.
    double probability;
    double window_angle;
};

struct WindowReading {
    std::vector<MeasurementOutcome> outcomes;
    /// Area of the regions consistent with every observed color.
    double joint_probability;
    DiskSystem residual;
};

struct CancelReport {
    std::size_t cancelled_pairs = 0;
    double removed_fraction = 0.0;
    double renormalization_factor = 1.0;
    bool sound = true;
};

struct CancelResult {
    DiskSystem disk;
    CancelReport report;
};

DiskSystem apply_gate_disk(const DiskSystem &disk, const Gate &gate,
                           std::size_t target);

DiskSystem apply_controlled_disk(const DiskSystem &disk, const Gate &gate,
                                 std::size_t control, std::size_t target);

/**
 * Reads the region under the window at `random_draw` (arcs are half-open, so a
 * boundary belongs to the region starting there) and keeps only the regions
 * that agree with it on every measured qubit.
 */
WindowReading spin_window(const DiskSystem &disk,
                          std::span<const std::size_t> qubits,
                          double random_draw);

/// Index of the region under the window at `angle`.
[[nodiscard]] std::size_t region_at(const DiskSystem &disk, double angle);

/**
 * Midpoint angle of the first region showing `color` on `qubit`, or -1 when no
 * region does. Spinning the window to this angle forces that outcome.
 */
[[nodiscard]] double angle_for(const DiskSystem &disk, std::size_t qubit,
                               Color color);

CancelResult cancel(const DiskSystem &disk);

/// Sign-blind area totals per outcome, binary order.
[[nodiscard]] std::vector<double> naive_probabilities(const DiskSystem &disk);

} // namespace qubobs
