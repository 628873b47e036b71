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
 * Cross-track comparison. Every step runs on the disk track and on the exact
 * track in lockstep; a step is Sound when the sign-blind disk probabilities
 * agree with the Born probabilities, and Breakdown otherwise.
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qubobs/disk.hpp"
#include "qubobs/dynamics.hpp"
#include "qubobs/exact.hpp"

namespace qubobs {

enum class Classification { Sound, Breakdown };

[[nodiscard]] constexpr const char *to_string(Classification c) noexcept {
    return c == Classification::Sound ? "Sound" : "Breakdown";
}

struct StepReport {
    std::size_t step_index = 0;
    std::vector<double> disk_probs;
    std::vector<double> exact_probs;
    double max_abs_gap = 0.0;
    Classification classification = Classification::Sound;
    std::string note;
};

StepReport compare(const DiskSystem &disk, const RealState &exact);

namespace step {

/// Appends one qubit alpha|0> + beta|1>.
struct PrepareQubit {
    double alpha, beta;
};
/// Appends two qubits; amplitudes in Gray order 00, 01, 11, 10.
struct PreparePair {
    std::array<double, 4> gray_amplitudes;
};
struct ApplyGate {
    Gate gate;
    std::size_t target;
};
struct ApplyControlled {
    Gate gate;
    std::size_t control, target;
};
struct Measure {
    std::vector<std::size_t> qubits;
    double draw;
};
struct Cancel {};

} // namespace step

using Step = std::variant<step::PrepareQubit, step::PreparePair,
                          step::ApplyGate, step::ApplyControlled,
                          step::Measure, step::Cancel>;

[[nodiscard]] std::string describe(const Step &s);

/// A step failure, tagged with the index of the failing step.
class StepError : public std::runtime_error {
  public:
    StepError(std::size_t step_index, const std::string &what);
    [[nodiscard]] std::size_t step_index() const noexcept { return index_; }

  private:
    std::size_t index_;
};

/**
 * Runs both tracks in lockstep. Measurements sample on the disk track and the
 * exact track collapses onto the same colors, so the two stay comparable path
 * by path. cancel() touches only the disk track.
 */
class Auditor {
  public:
    Auditor() = default;

    StepReport apply(const Step &s);

    [[nodiscard]] bool empty() const noexcept { return !disk_.has_value(); }
    [[nodiscard]] std::size_t num_qubits() const noexcept;
    [[nodiscard]] const DiskSystem &disk() const;
    [[nodiscard]] const RealState &exact() const;
    [[nodiscard]] const std::vector<StepReport> &reports() const noexcept {
        return reports_;
    }
    /// Outcomes of the most recent Measure step.
    [[nodiscard]] const std::vector<MeasurementOutcome> &
    last_outcomes() const noexcept {
        return last_outcomes_;
    }
    /// Exact probability of the most recent Measure step's joint outcome.
    [[nodiscard]] double last_exact_probability() const noexcept {
        return last_exact_probability_;
    }
    [[nodiscard]] double last_disk_probability() const noexcept {
        return last_disk_probability_;
    }
    [[nodiscard]] const std::optional<CancelReport> &
    last_cancel() const noexcept {
        return last_cancel_;
    }

  private:
    void append(const DiskSystem &d, const RealState &e);

    std::optional<DiskSystem> disk_;
    std::optional<RealState> exact_;
    std::vector<StepReport> reports_;
    std::vector<MeasurementOutcome> last_outcomes_;
    double last_exact_probability_ = 1.0;
    double last_disk_probability_ = 1.0;
    std::optional<CancelReport> last_cancel_;
};

std::vector<StepReport> audit_run(const std::vector<Step> &script);

/// Audits many independent scripts; parallel over scripts when OpenMP is on.
std::vector<std::vector<StepReport>>
audit_batch(const std::vector<std::vector<Step>> &scripts);
/// Serial reference for audit_batch.
std::vector<std::vector<StepReport>>
audit_batch_serial(const std::vector<std::vector<Step>> &scripts);

/// Fixed-width table: step, gap, classification, note.
std::string format_audit_table(const std::vector<StepReport> &reports);

} // namespace qubobs
