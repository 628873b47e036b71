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
 * Protocol engines: BB84 key distribution with an optional intercept-resend
 * eavesdropper, and two-stage teleportation (classical coin, then full).
 * Every protocol step runs through the lockstep Auditor so transcripts carry
 * both tracks.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qubobs/disk.hpp"
#include "qubobs/exact.hpp"
#include "qubobs/verifier.hpp"

namespace qubobs {

enum class Basis : unsigned char { Standard = 0, Hadamard = 1 };

[[nodiscard]] constexpr char basis_letter(Basis b) noexcept {
    return b == Basis::Standard ? 'S' : 'H';
}

struct BB84Params {
    std::size_t rounds = 8;
    bool eve_present = false;
    std::uint64_t seed = 0;
    /// Share of sifted rounds disclosed to estimate the error rate.
    double sample_fraction = 0.5;
};

struct BB84Round {
    int alice_bit = 0;
    Basis alice_basis = Basis::Standard;
    std::optional<Basis> eve_basis;
    std::optional<int> eve_outcome;
    Basis bob_basis = Basis::Standard;
    int bob_outcome = 0;
    bool sifted = false;
    bool sampled = false;
    /// Every measurement and cancellation step in the round audited Sound.
    bool sound = true;
};

struct BB84Result {
    std::vector<BB84Round> rounds;
    std::vector<int> sifted_key_alice;
    std::vector<int> sifted_key_bob;
    std::size_t sampled = 0;
    std::size_t sampled_errors = 0;
    /// Error rate on the sampled sifted rounds; empty when none were sampled.
    std::optional<double> qber;
};

/**
 * Draws per round are consumed in this order: alice_bit, alice_basis,
 * eve_basis (if Eve), bob_basis, eve measurement (if Eve), bob measurement,
 * sample selection. Rounds are evaluated in parallel once drawn.
 */
BB84Result bb84_run(const BB84Params &params);
/// Serial reference for bb84_run; identical output.
BB84Result bb84_run_serial(const BB84Params &params);

std::string format_bb84_transcript(const BB84Result &result);

enum class TeleportStage { Classical, Full };

struct TeleportTranscript {
    double alpha = 1.0, beta = 0.0;
    TeleportStage stage = TeleportStage::Classical;
    /// Not measured in the classical stage.
    std::optional<Color> m_inner;
    Color m_outer = Color::Blue;
    std::vector<std::string> corrections_applied;
    DiskSystem bob_final_disk{1, {{1.0, {Color::Blue}, +1}}};
    RealState bob_final_exact = RealState::basis(1, 0);
    /// Joint probability of the observed branch on each track.
    double branch_probability_exact = 1.0;
    double branch_probability_disk = 1.0;
    std::vector<StepReport> steps;
    /// Disk after each step, aligned with `steps`.
    std::vector<DiskSystem> disks;
};

/// Qubit layout used by both teleportation stages.
inline constexpr std::size_t kAliceInner = 0;
inline constexpr std::size_t kAliceOuter = 1;
inline constexpr std::size_t kBob = 2;

/// Bob's corrections for the full protocol, in application order.
std::vector<std::string> teleport_corrections(Color inner, Color outer);

TeleportTranscript teleport_classical(double alpha_sq, double random_draw);
/// Same, with Alice's outcome forced instead of sampled.
TeleportTranscript teleport_classical_branch(double alpha_sq, Color outer);

TeleportTranscript teleport_full(double alpha, double beta,
                                 std::array<double, 2> random_draws);
TeleportTranscript teleport_full_branch(double alpha, double beta,
                                        Color inner, Color outer);

std::string format_teleport_transcript(const TeleportTranscript &t);

} // namespace qubobs
