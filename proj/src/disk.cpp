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
#include "qubobs/disk.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace qubobs {

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : +1; }

void check_normalized(double norm2, const char *what) {
    if (std::abs(norm2 - 1.0) > kDiskTol) {
        throw std::invalid_argument(
            fmt::format("{}: squared norm {} is not 1", what, norm2));
    }
}

} // namespace

std::size_t Region::outcome_index() const noexcept {
    std::size_t idx = 0;
    for (Color c : colors) {
        idx = (idx << 1) | static_cast<std::size_t>(c);
    }
    return idx;
}

std::string Region::color_string() const {
    std::string s;
    s.reserve(colors.size());
    for (Color c : colors) {
        s.push_back(color_letter(c));
    }
    return s;
}

DiskSystem::DiskSystem(std::size_t n_qubits, std::vector<Region> regions)
    : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument(
            fmt::format("disk qubit count {} out of range", n_qubits));
    }
    double total = 0.0;
    for (auto &r : regions) {
        if (r.colors.size() != n_qubits) {
            throw std::invalid_argument(fmt::format(
                "region has {} colors, expected {}", r.colors.size(),
                n_qubits));
        }
        if (r.sign != 1 && r.sign != -1) {
            throw std::invalid_argument("region sign must be +1 or -1");
        }
        if (r.fraction < 0.0 || !std::isfinite(r.fraction)) {
            throw std::invalid_argument(
                fmt::format("region fraction {} is negative", r.fraction));
        }
        if (r.fraction == 0.0) {
            continue;
        }
        total += r.fraction;
        if (!regions_.empty() && regions_.back().same_kind(r)) {
            regions_.back().fraction += r.fraction;
        } else {
            regions_.push_back(std::move(r));
        }
    }
    if (regions_.empty()) {
        throw std::invalid_argument("disk has no regions");
    }
    if (std::abs(total - 1.0) > kDiskTol) {
        throw std::invalid_argument(
            fmt::format("region fractions sum to {}, expected 1", total));
    }
}

double DiskSystem::start_angle(std::size_t i) const {
    double acc = 0.0;
    for (std::size_t k = 0; k < i && k < regions_.size(); ++k) {
        acc += regions_[k].fraction;
    }
    return acc;
}

AlignedPair AlignedPair::from_params(double P, double Pp, double theta) {
    const auto bad_share = [](double s) {
        return s < -kDiskTol || s > 1.0 + kDiskTol;
    };
    if (bad_share(P) || bad_share(Pp)) {
        throw std::invalid_argument("aligned pair shares must lie in [0, 1]");
    }
    const double lo = std::max(0.0, P + Pp - 1.0);
    const double hi = std::min(P, Pp);
    if (theta < lo - kDiskTol || theta > hi + kDiskTol) {
        throw std::invalid_argument(fmt::format(
            "theta {} outside [{}, {}]: a joint area would be negative",
            theta, lo, hi));
    }
    return {P, 1.0 - P, Pp, 1.0 - Pp, theta};
}

std::array<double, 4> AlignedPair::areas() const noexcept {
    return {theta, P - theta, 1.0 - P - Pp + theta, Pp - theta};
}

std::array<double, 4> AlignedPair::amplitudes() const {
    auto a = areas();
    for (auto &x : a) {
        x = std::sqrt(std::max(0.0, x));
    }
    return a;
}

DiskSystem AlignedPair::to_disk() const {
    const auto a = areas();
    std::vector<Region> regions;
    for (std::size_t k = 0; k < 4; ++k) {
        const std::size_t idx = kGrayOrder[k];
        regions.push_back({std::max(0.0, a[k]),
                           {static_cast<Color>(idx >> 1),
                            static_cast<Color>(idx & 1)},
                           +1});
    }
    return {2, std::move(regions)};
}

DiskSystem encode_qubit(double alpha, double beta) {
    check_normalized(alpha * alpha + beta * beta, "encode_qubit");
    return {1,
            {{alpha * alpha, {Color::Blue}, sign_of(alpha)},
             {beta * beta, {Color::Orange}, sign_of(beta)}}};
}

DiskSystem encode_state(const RealState &state) {
    const std::size_t n = state.num_qubits();
    std::vector<Region> regions;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::vector<Color> colors(n);
        for (std::size_t q = 0; q < n; ++q) {
            colors[q] = (i & qubit_mask(n, q)) != 0 ? Color::Orange
                                                    : Color::Blue;
        }
        regions.push_back({amps[i] * amps[i], std::move(colors),
                           sign_of(amps[i])});
    }
    return {n, std::move(regions)};
}

RealState decode(const DiskSystem &disk) {
    std::vector<double> amps(std::size_t{1} << disk.num_qubits(), 0.0);
    for (const auto &r : disk.regions()) {
        amps[r.outcome_index()] += r.sign * std::sqrt(r.fraction);
    }
    double norm2 = 0.0;
    for (double a : amps) {
        norm2 += a * a;
    }
    if (std::sqrt(norm2) < kDiskTol) {
        throw std::domain_error("disk cancels to the zero vector");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto &a : amps) {
        a *= inv;
    }
    return RealState(std::move(amps));
}

DiskSystem tensor(const DiskSystem &a, const DiskSystem &b) {
    std::vector<Region> regions;
    regions.reserve(a.size() * b.size());
    for (const auto &r : a.regions()) {
        for (const auto &s : b.regions()) {
            Region t{r.fraction * s.fraction, r.colors, r.sign * s.sign};
            t.colors.insert(t.colors.end(), s.colors.begin(), s.colors.end());
            regions.push_back(std::move(t));
        }
    }
    return {a.num_qubits() + b.num_qubits(), std::move(regions)};
}

std::pair<double, double> marginals(const DiskSystem &disk,
                                    std::size_t qubit) {
    if (qubit >= disk.num_qubits()) {
        throw std::out_of_range(fmt::format("qubit {} out of range", qubit));
    }
    double blue = 0.0;
    double orange = 0.0;
    for (const auto &r : disk.regions()) {
        (r.colors[qubit] == Color::Blue ? blue : orange) += r.fraction;
    }
    return {blue, orange};
}

DiskSystem project(const DiskSystem &disk, std::size_t qubit) {
    if (qubit >= disk.num_qubits()) {
        throw std::out_of_range(fmt::format("qubit {} out of range", qubit));
    }
    std::vector<Region> regions;
    regions.reserve(disk.size());
    for (const auto &r : disk.regions()) {
        regions.push_back({r.fraction, {r.colors[qubit]}, r.sign});
    }
    return {1, std::move(regions)};
}

EncodedPair encode_pair(const std::array<double, 4> &gray_amplitudes) {
    double norm2 = 0.0;
    for (double a : gray_amplitudes) {
        norm2 += a * a;
    }
    check_normalized(norm2, "encode_pair");
    std::vector<Region> regions;
    for (std::size_t k = 0; k < 4; ++k) {
        const std::size_t idx = kGrayOrder[k];
        const double amp = gray_amplitudes[k];
        regions.push_back({amp * amp,
                           {static_cast<Color>(idx >> 1),
                            static_cast<Color>(idx & 1)},
                           sign_of(amp)});
    }
    const auto sq = [&](std::size_t k) {
        return gray_amplitudes[k] * gray_amplitudes[k];
    };
    // Gray slots: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
    AlignedPair aligned{sq(0) + sq(1), sq(2) + sq(3), sq(0) + sq(3),
                        sq(1) + sq(2), sq(0)};
    return {DiskSystem(2, std::move(regions)), aligned};
}

std::string to_canonical_text(const DiskSystem &disk) {
    std::string out;
    for (const auto &r : disk.regions()) {
        out += fmt::format("{:.9f} {} {}\n", r.fraction, r.color_string(),
                           r.sign < 0 ? '-' : '+');
    }
    return out;
}

DiskSystem parse_canonical_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<Region> regions;
    std::size_t n = 0;
    std::size_t lineno = 0;
    double total = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        double fraction = 0.0;
        std::string colors;
        std::string sign;
        if (!(ls >> fraction)) {
            continue;
        }
        if (!(ls >> colors >> sign) || (sign != "+" && sign != "-")) {
            throw std::invalid_argument(
                fmt::format("line {}: expected `fraction colors sign`",
                            lineno));
        }
        Region r{fraction, {}, sign == "-" ? -1 : +1};
        for (char c : colors) {
            if (c != 'B' && c != 'O') {
                throw std::invalid_argument(
                    fmt::format("line {}: bad color '{}'", lineno, c));
            }
            r.colors.push_back(c == 'B' ? Color::Blue : Color::Orange);
        }
        if (n != 0 && r.colors.size() != n) {
            throw std::invalid_argument(
                fmt::format("line {}: inconsistent qubit count", lineno));
        }
        n = r.colors.size();
        total += fraction;
        regions.push_back(std::move(r));
    }
    if (regions.empty()) {
        throw std::invalid_argument("no regions in disk text");
    }
    // Nine printed decimals lose up to 5e-10 per region.
    if (std::abs(total - 1.0) > 1e-6) {
        throw std::invalid_argument(
            fmt::format("fractions sum to {}, expected 1", total));
    }
    for (auto &r : regions) {
        r.fraction /= total;
    }
    return {n, std::move(regions)};
}

} // namespace qubobs
