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
#include "qubobs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace qubobs {

namespace {

int sgn(double x) { return x < 0.0 ? -1 : +1; }

void check_index(const DiskSystem &disk, std::size_t q, const char *what) {
    if (q >= disk.num_qubits()) {
        throw std::out_of_range(fmt::format("{} qubit {} out of range for {} "
                                            "qubits",
                                            what, q, disk.num_qubits()));
    }
}

// Appends the two children of r under gate on target.
void split_region(const Region &r, const Gate &gate, std::size_t target,
                  std::vector<Region> &out) {
    const bool blue = r.colors[target] == Color::Blue;
    const double first = blue ? gate.a() : gate.c();
    const double second = blue ? gate.b() : gate.d();
    Region zero{r.fraction * first * first, r.colors, r.sign * sgn(first)};
    zero.colors[target] = Color::Blue;
    Region one{r.fraction * second * second, r.colors, r.sign * sgn(second)};
    one.colors[target] = Color::Orange;
    if (zero.fraction > 0.0) {
        out.push_back(std::move(zero));
    }
    if (one.fraction > 0.0) {
        out.push_back(std::move(one));
    }
}

} // namespace

DiskSystem apply_gate_disk(const DiskSystem &disk, const Gate &gate,
                           std::size_t target) {
    check_index(disk, target, "target");
    std::vector<Region> out;
    out.reserve(disk.size() * 2);
    for (const auto &r : disk.regions()) {
        split_region(r, gate, target, out);
    }
    return {disk.num_qubits(), std::move(out)};
}

DiskSystem apply_controlled_disk(const DiskSystem &disk, const Gate &gate,
                                 std::size_t control, std::size_t target) {
    check_index(disk, control, "control");
    check_index(disk, target, "target");
    if (control == target) {
        throw std::invalid_argument("control equals target");
    }
    std::vector<Region> out;
    out.reserve(disk.size() * 2);
    for (const auto &r : disk.regions()) {
        if (r.colors[control] == Color::Blue) {
            out.push_back(r);
        } else {
            split_region(r, gate, target, out);
        }
    }
    return {disk.num_qubits(), std::move(out)};
}

std::size_t region_at(const DiskSystem &disk, double angle) {
    double acc = 0.0;
    for (std::size_t i = 0; i < disk.size(); ++i) {
        acc += disk[i].fraction;
        if (angle < acc) {
            return i;
        }
    }
    // Rounding can leave the cumulative sum a hair under 1.
    return disk.size() - 1;
}

double angle_for(const DiskSystem &disk, std::size_t qubit, Color color) {
    check_index(disk, qubit, "measured");
    double acc = 0.0;
    for (const auto &r : disk.regions()) {
        if (r.colors[qubit] == color) {
            return acc + r.fraction / 2.0;
        }
        acc += r.fraction;
    }
    return -1.0;
}

WindowReading spin_window(const DiskSystem &disk,
                          std::span<const std::size_t> qubits,
                          double random_draw) {
    if (qubits.empty()) {
        throw std::invalid_argument("spin_window needs at least one qubit");
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        check_index(disk, qubits[i], "measured");
        if (std::find(qubits.begin(), qubits.begin() + i, qubits[i]) !=
            qubits.begin() + i) {
            throw std::invalid_argument("measured qubits must be distinct");
        }
    }
    if (!(random_draw >= 0.0 && random_draw < 1.0)) {
        throw std::invalid_argument("random draw must lie in [0, 1)");
    }
    const Region &hit = disk[region_at(disk, random_draw)];

    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(qubits.size());
    for (std::size_t q : qubits) {
        const Color c = hit.colors[q];
        const auto [blue, orange] = marginals(disk, q);
        outcomes.push_back(
            {q, c, c == Color::Blue ? blue : orange, random_draw});
    }

    std::vector<Region> kept;
    double kept_total = 0.0;
    for (const auto &r : disk.regions()) {
        const bool match = std::all_of(
            qubits.begin(), qubits.end(),
            [&](std::size_t q) { return r.colors[q] == hit.colors[q]; });
        if (match) {
            kept_total += r.fraction;
            kept.push_back(r);
        }
    }
    for (auto &r : kept) {
        r.fraction /= kept_total;
    }
    return {std::move(outcomes), kept_total,
            DiskSystem(disk.num_qubits(), std::move(kept))};
}

std::vector<double> naive_probabilities(const DiskSystem &disk) {
    std::vector<double> p(std::size_t{1} << disk.num_qubits(), 0.0);
    for (const auto &r : disk.regions()) {
        p[r.outcome_index()] += r.fraction;
    }
    return p;
}

CancelResult cancel(const DiskSystem &disk) {
    std::vector<Region> live(disk.regions());
    CancelReport report;
    bool found = true;
    while (found) {
        found = false;
        for (std::size_t i = 0; i < live.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < live.size(); ++j) {
                if (live[i].colors == live[j].colors &&
                    live[i].sign == -live[j].sign &&
                    std::abs(live[i].fraction - live[j].fraction) <=
                        kDiskTol) {
                    report.removed_fraction +=
                        live[i].fraction + live[j].fraction;
                    ++report.cancelled_pairs;
                    live.erase(live.begin() + static_cast<std::ptrdiff_t>(j));
                    live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
                    found = true;
                    break;
                }
            }
        }
    }
    if (report.removed_fraction >= 1.0 - kDiskTol || live.empty()) {
        throw std::domain_error("disk cancels completely");
    }
    report.renormalization_factor = 1.0 / (1.0 - report.removed_fraction);
    double total = 0.0;
    for (const auto &r : live) {
        total += r.fraction;
    }
    // Rescale by the remaining total, which equals 1 - removed up to rounding.
    for (auto &r : live) {
        r.fraction /= total;
    }
    DiskSystem result(disk.num_qubits(), std::move(live));

    const auto naive = naive_probabilities(result);
    try {
        const auto exact = probabilities(decode(disk));
        for (std::size_t k = 0; k < naive.size(); ++k) {
            if (std::abs(naive[k] - exact[k]) > kDiskTol) {
                report.sound = false;
            }
        }
    } catch (const std::domain_error &) {
        // The input implies the zero vector; nothing to agree with.
        report.sound = false;
    }
    return {std::move(result), report};
}

} // namespace qubobs
