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
 * The slice-disk representation. A DiskSystem is a cyclic list of signed
 * regions sharing one angular coordinate that starts at 12 o'clock and runs
 * clockwise. Each region carries one color per qubit; the disk of a single
 * qubit is the projection of the system onto that qubit's colors.
 *
 * Angles are fractions of a full turn in [0, 1).
 */
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qubobs/exact.hpp"

namespace qubobs {

/// Blue is |0>, Orange is |1>.
enum class Color : unsigned char { Blue = 0, Orange = 1 };

[[nodiscard]] constexpr char color_letter(Color c) noexcept {
    return c == Color::Blue ? 'B' : 'O';
}
[[nodiscard]] constexpr Color flip(Color c) noexcept {
    return c == Color::Blue ? Color::Orange : Color::Blue;
}

struct Region {
    double fraction;
    std::vector<Color> colors;
    int sign = +1;

    /// Outcome index of the colors in binary order (qubit 0 most significant).
    [[nodiscard]] std::size_t outcome_index() const noexcept;
    [[nodiscard]] std::string color_string() const;

    /// Same colors and same sign.
    [[nodiscard]] bool same_kind(const Region &other) const noexcept {
        return sign == other.sign && colors == other.colors;
    }

    /// Exact equality, fractions included.
    friend bool operator==(const Region &, const Region &) = default;
};

class DiskSystem {
  public:
    /**
     * Drops zero-area regions, checks that fractions sum to 1 within kDiskTol
     * and that every color tuple has n_qubits entries, then merges identical
     * adjacent regions. Throws std::invalid_argument on violations.
     */
    DiskSystem(std::size_t n_qubits, std::vector<Region> regions);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Region> &regions() const noexcept {
        return regions_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return regions_.size(); }
    [[nodiscard]] const Region &operator[](std::size_t i) const {
        return regions_[i];
    }

    /// Angle (fraction of a turn) at which region i starts.
    [[nodiscard]] double start_angle(std::size_t i) const;

    friend bool operator==(const DiskSystem &, const DiskSystem &) = default;

  private:
    std::size_t n_qubits_;
    std::vector<Region> regions_;
};

/**
 * Per-qubit shares and alignment angle for two qubits. P is the blue share of
 * qubit 0, Pp that of qubit 1, and theta the angle at which qubit 1 turns
 * orange.
 */
struct AlignedPair {
    double P, Q, Pp, Qp, theta;

    /// Validates shares and the joint-area bounds on theta.
    static AlignedPair from_params(double P, double Pp, double theta);

    /// Joint areas in Gray order 00, 01, 11, 10.
    [[nodiscard]] std::array<double, 4> areas() const noexcept;
    /// sqrt of each area, Gray order.
    [[nodiscard]] std::array<double, 4> amplitudes() const;
    [[nodiscard]] DiskSystem to_disk() const;
};

/// Gray order 00, 01, 11, 10 as binary indices.
inline constexpr std::array<std::size_t, 4> kGrayOrder{0, 1, 3, 2};

DiskSystem encode_qubit(double alpha, double beta);

/// Inverse of encoding: amplitude of each outcome is the sum of
/// sign * sqrt(fraction) over its regions, renormalized.
RealState decode(const DiskSystem &disk);

/// Encodes any state with one region per nonzero amplitude in binary order.
DiskSystem encode_state(const RealState &state);

DiskSystem tensor(const DiskSystem &a, const DiskSystem &b);

/// Unsigned (blue, orange) area totals for one qubit.
std::pair<double, double> marginals(const DiskSystem &disk, std::size_t qubit);

/// One-qubit disk of `qubit`: same arcs, other colors dropped.
DiskSystem project(const DiskSystem &disk, std::size_t qubit);

struct EncodedPair {
    DiskSystem disk;
    AlignedPair aligned;
};

/// Amplitudes are given in Gray order 00, 01, 11, 10.
EncodedPair encode_pair(const std::array<double, 4> &gray_amplitudes);

/// One region per line: `fraction colors sign`, 9 decimals.
std::string to_canonical_text(const DiskSystem &disk);
DiskSystem parse_canonical_text(std::string_view text);

} // namespace qubobs
