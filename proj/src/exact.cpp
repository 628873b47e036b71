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
#include "qubobs/exact.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace qubobs {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double squared_norm(std::span<const double> v) {
    return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

void check_qubit(const RealState &state, std::size_t q, const char *what) {
    if (q >= state.num_qubits()) {
        throw std::out_of_range(fmt::format("{} qubit {} out of range for {} "
                                            "qubits",
                                            what, q, state.num_qubits()));
    }
}

} // namespace

Gate::Gate(double a, double b, double c, double d, std::string name)
    : a_(a), b_(b), c_(c), d_(d), name_(std::move(name)) {
    // Rows (a,b) and (c,d) must be orthonormal.
    const double r0 = a * a + b * b;
    const double r1 = c * c + d * d;
    const double cross = a * c + b * d;
    if (std::abs(r0 - 1.0) > kOracleTol || std::abs(r1 - 1.0) > kOracleTol ||
        std::abs(cross) > kOracleTol) {
        throw std::invalid_argument(
            fmt::format("gate {} is not a real unitary", name_));
    }
}

Gate Gate::X() { return {0.0, 1.0, 1.0, 0.0, "X"}; }
Gate Gate::Z() { return {1.0, 0.0, 0.0, -1.0, "Z"}; }
Gate Gate::H() {
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s, "H"};
}
Gate Gate::I() { return {1.0, 0.0, 0.0, 1.0, "I"}; }

Gate Gate::preset(std::string_view name) {
    if (name == "X") {
        return X();
    }
    if (name == "Z") {
        return Z();
    }
    if (name == "H") {
        return H();
    }
    if (name == "I") {
        return I();
    }
    throw std::invalid_argument(fmt::format("unknown gate '{}'", name));
}

RealState::RealState(std::vector<double> amplitudes)
    : n_qubits_(0), amps_(std::move(amplitudes)) {
    if (amps_.size() < 2 || !is_power_of_two(amps_.size())) {
        throw std::invalid_argument(fmt::format(
            "amplitude vector length {} is not a power of two >= 2",
            amps_.size()));
    }
    while ((std::size_t{1} << n_qubits_) < amps_.size()) {
        ++n_qubits_;
    }
    if (n_qubits_ > kMaxQubits) {
        throw std::invalid_argument(
            fmt::format("{} qubits exceeds the cap of {}", n_qubits_,
                        kMaxQubits));
    }
    const double norm2 = squared_norm(amps_);
    if (norm2 < kOracleTol) {
        throw std::invalid_argument("zero amplitude vector");
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > kDiskTol) {
        throw std::invalid_argument(
            fmt::format("amplitude vector has norm {}, expected 1",
                        std::sqrt(norm2)));
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto &x : amps_) {
        x *= inv;
    }
}

RealState RealState::basis(std::size_t n_qubits, std::size_t index) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("basis state qubit count out of range");
    }
    std::vector<double> v(std::size_t{1} << n_qubits, 0.0);
    if (index >= v.size()) {
        throw std::out_of_range("basis index out of range");
    }
    v[index] = 1.0;
    return RealState(std::move(v));
}

RealState make_state(std::span<const double> amplitudes) {
    return RealState({amplitudes.begin(), amplitudes.end()});
}

RealState make_state(std::initializer_list<double> amplitudes) {
    return RealState(std::vector<double>(amplitudes));
}

std::size_t qubit_mask(std::size_t n_qubits, std::size_t qubit) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

RealState apply_gate(const RealState &state, const Gate &gate,
                     std::size_t target, std::optional<std::size_t> control) {
    check_qubit(state, target, "target");
    const std::size_t n = state.num_qubits();
    const std::size_t tmask = qubit_mask(n, target);
    std::size_t cmask = 0;
    if (control) {
        check_qubit(state, *control, "control");
        if (*control == target) {
            throw std::invalid_argument("control equals target");
        }
        cmask = qubit_mask(n, *control);
    }
    std::vector<double> out(state.amplitudes().begin(),
                            state.amplitudes().end());
    const auto in = state.amplitudes();
    for (std::size_t i = 0; i < in.size(); ++i) {
        if ((i & tmask) != 0 || (cmask != 0 && (i & cmask) == 0)) {
            continue;
        }
        const std::size_t j = i | tmask;
        // new = a0 * G|0> + a1 * G|1>
        out[i] = in[i] * gate.a() + in[j] * gate.c();
        out[j] = in[i] * gate.b() + in[j] * gate.d();
    }
    return RealState(std::move(out));
}

double probability_zero(const RealState &state, std::size_t target) {
    check_qubit(state, target, "target");
    const std::size_t mask = qubit_mask(state.num_qubits(), target);
    double p0 = 0.0;
    const auto a = state.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & mask) == 0) {
            p0 += a[i] * a[i];
        }
    }
    return p0;
}

ExactMeasurement collapse(const RealState &state, std::size_t target,
                          int outcome) {
    check_qubit(state, target, "target");
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("outcome must be 0 or 1");
    }
    const std::size_t mask = qubit_mask(state.num_qubits(), target);
    const double p0 = probability_zero(state, target);
    const double p = outcome == 0 ? p0 : 1.0 - p0;
    if (p < kOracleTol) {
        throw std::domain_error(fmt::format(
            "outcome {} on qubit {} has probability {:.3g}", outcome, target,
            p));
    }
    std::vector<double> out(state.size(), 0.0);
    const double inv = 1.0 / std::sqrt(p);
    const auto a = state.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool is_one = (i & mask) != 0;
        if (is_one == (outcome == 1)) {
            out[i] = a[i] * inv;
        }
    }
    return {outcome, p, RealState(std::move(out))};
}

ExactMeasurement measure(const RealState &state, std::size_t target,
                         double random_draw) {
    const double p0 = probability_zero(state, target);
    return collapse(state, target, random_draw < p0 ? 0 : 1);
}

std::vector<double> probabilities(const RealState &state) {
    std::vector<double> p(state.size());
    const auto a = state.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        p[i] = a[i] * a[i];
    }
    return p;
}

RealState tensor(const RealState &a, const RealState &b) {
    std::vector<double> out;
    out.reserve(a.size() * b.size());
    for (double x : a.amplitudes()) {
        for (double y : b.amplitudes()) {
            out.push_back(x * y);
        }
    }
    return RealState(std::move(out));
}

double inner_product(const RealState &a, const RealState &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner product of mismatched states");
    }
    return std::inner_product(a.amplitudes().begin(), a.amplitudes().end(),
                              b.amplitudes().begin(), 0.0);
}

double distance(const RealState &a, const RealState &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("distance of mismatched states");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

RealState factor_qubit(const RealState &state, std::size_t qubit) {
    check_qubit(state, qubit, "factor");
    const std::size_t mask = qubit_mask(state.num_qubits(), qubit);
    // Locate the single basis configuration of the other qubits.
    std::optional<std::size_t> rest;
    const auto a = state.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] * a[i] <= kOracleTol) {
            continue;
        }
        const std::size_t others = i & ~mask;
        if (rest && *rest != others) {
            throw std::domain_error(
                "other qubits are not in a definite basis state");
        }
        rest = others;
    }
    return make_state({a[*rest], a[*rest | mask]});
}

} // namespace qubobs
