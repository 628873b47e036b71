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
 * Exact signed-real state-vector simulator. This is the reference track that
 * every disk computation is checked against.
 *
 * Amplitudes are indexed in standard binary order with qubit 0 as the most
 * significant bit, so for two qubits the index of |q0 q1> is 2*q0 + q1.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qubobs {

/// Tolerance for oracle arithmetic.
inline constexpr double kOracleTol = 1e-12;
/// Tolerance for disk fractions and normalization checks.
inline constexpr double kDiskTol = 1e-9;
inline constexpr std::size_t kMaxQubits = 10;

/**
 * Real 2x2 unitary. The image of |0> is a|0> + b|1> and the image of |1> is
 * c|0> + d|1>.
 */
class Gate {
  public:
    Gate(double a, double b, double c, double d, std::string name = "G");

    static Gate X();
    static Gate Z();
    static Gate H();
    static Gate I();
    /// Looks up one of the presets by name ("X", "Z", "H", "I").
    static Gate preset(std::string_view name);

    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] double c() const noexcept { return c_; }
    [[nodiscard]] double d() const noexcept { return d_; }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }

  private:
    double a_, b_, c_, d_;
    std::string name_;
};

class RealState {
  public:
    /// Validates length and norm, then renormalizes exactly.
    explicit RealState(std::vector<double> amplitudes);

    /// Computational basis state |index> on n qubits.
    static RealState basis(std::size_t n_qubits, std::size_t index);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const double> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] double operator[](std::size_t i) const { return amps_[i]; }

  private:
    std::size_t n_qubits_;
    std::vector<double> amps_;
};

RealState make_state(std::span<const double> amplitudes);
RealState make_state(std::initializer_list<double> amplitudes);

/// Bit mask of `qubit` inside a binary amplitude index.
[[nodiscard]] std::size_t qubit_mask(std::size_t n_qubits, std::size_t qubit);

RealState apply_gate(const RealState &state, const Gate &gate,
                     std::size_t target,
                     std::optional<std::size_t> control = std::nullopt);

struct ExactMeasurement {
    int outcome;
    /// Probability of the returned outcome.
    double probability;
    RealState residual;
};

/// Born probability that `target` reads 0.
[[nodiscard]] double probability_zero(const RealState &state,
                                      std::size_t target);

/**
 * Outcome 0 iff random_draw < P(0). The residual is the renormalized
 * projection onto the chosen outcome.
 */
ExactMeasurement measure(const RealState &state, std::size_t target,
                         double random_draw);

/// Projects onto a prescribed outcome. Throws if its probability is below
/// kOracleTol.
ExactMeasurement collapse(const RealState &state, std::size_t target,
                          int outcome);

[[nodiscard]] std::vector<double> probabilities(const RealState &state);

/// Kronecker product; qubits of `a` come first.
RealState tensor(const RealState &a, const RealState &b);

[[nodiscard]] double inner_product(const RealState &a, const RealState &b);

/**
 * Single-qubit factor of `qubit`, valid when every other qubit sits in a
 * definite basis state (as after measuring all of them).
 */
RealState factor_qubit(const RealState &state, std::size_t qubit);

/// Euclidean distance between amplitude vectors.
[[nodiscard]] double distance(const RealState &a, const RealState &b);

} // namespace qubobs
