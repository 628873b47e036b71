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
#include <random>

#include <gtest/gtest.h>

#include "qubobs/exact.hpp"
#include "test_util.hpp"

using namespace qubobs;
using qubobs::testing::random_state;

namespace {

const double kRt2 = std::sqrt(2.0);
const double kRt3 = std::sqrt(3.0);
const double kRt6 = std::sqrt(6.0);

} // namespace

TEST(MakeState, BasisState) {
    const auto s = make_state({1.0, 0.0});
    EXPECT_EQ(s.num_qubits(), 1u);
    EXPECT_DOUBLE_EQ(s[0], 1.0);
    EXPECT_DOUBLE_EQ(s[1], 0.0);
}

TEST(MakeState, MinusState) {
    const auto s = make_state({1 / kRt2, -1 / kRt2});
    EXPECT_NEAR(s[0], 1 / kRt2, 1e-15);
    EXPECT_NEAR(s[1], -1 / kRt2, 1e-15);
}

TEST(MakeState, TwoQubitStateFromGrayList) {
    // Gray (00, 01, 11, 10) = (1/sqrt3, 1/sqrt6, 1/sqrt3, 1/sqrt6).
    const auto s = make_state({1 / kRt3, 1 / kRt6, 1 / kRt6, 1 / kRt3});
    EXPECT_EQ(s.num_qubits(), 2u);
    double norm2 = 0.0;
    for (double a : s.amplitudes()) {
        norm2 += a * a;
    }
    EXPECT_NEAR(norm2, 1.0, 1e-12);
}

TEST(MakeState, Errors) {
    EXPECT_THROW(make_state({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(make_state({1.0}), std::invalid_argument);
    EXPECT_THROW(make_state({0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(make_state({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(RealState(std::vector<double>(2048, 1.0 / std::sqrt(2048.0))),
                 std::invalid_argument);
}

TEST(MakeState, RenormalizesWithinTolerance) {
    const auto s = make_state({1.0 + 4e-10, 0.0});
    EXPECT_DOUBLE_EQ(s[0], 1.0);
}

TEST(Gate, RejectsNonUnitary) {
    EXPECT_THROW(Gate(1.0, 1.0, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(Gate::preset("Y"), std::invalid_argument);
    EXPECT_NO_THROW(Gate::preset("H"));
}

TEST(ApplyGate, HadamardOnZero) {
    const auto s = apply_gate(RealState::basis(1, 0), Gate::H(), 0);
    EXPECT_NEAR(s[0], 1 / kRt2, 1e-15);
    EXPECT_NEAR(s[1], 1 / kRt2, 1e-15);
}

TEST(ApplyGate, BellConstruction) {
    // (|00> + |10>)/sqrt2, control 0 -> (|00> + |11>)/sqrt2
    const auto s = make_state({1 / kRt2, 0.0, 1 / kRt2, 0.0});
    const auto out = apply_gate(s, Gate::X(), 1, 0);
    EXPECT_NEAR(out[0], 1 / kRt2, 1e-15);
    EXPECT_NEAR(out[1], 0.0, 1e-15);
    EXPECT_NEAR(out[2], 0.0, 1e-15);
    EXPECT_NEAR(out[3], 1 / kRt2, 1e-15);
}

TEST(ApplyGate, Errors) {
    const auto s = RealState::basis(2, 0);
    EXPECT_THROW(apply_gate(s, Gate::X(), 2), std::out_of_range);
    EXPECT_THROW(apply_gate(s, Gate::X(), 0, 5), std::out_of_range);
    EXPECT_THROW(apply_gate(s, Gate::X(), 1, 1), std::invalid_argument);
}

TEST(ApplyGate, InvolutionsAndNorm) {
    std::mt19937_64 gen(11);
    const Gate gates[] = {Gate::X(), Gate::Z(), Gate::H()};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto s = random_state(gen, n);
        for (const auto &g : gates) {
            const std::size_t t = trial % n;
            const auto twice = apply_gate(apply_gate(s, g, t), g, t);
            EXPECT_LE(distance(twice, s), 1e-10) << g.name();
        }
    }
}

TEST(ApplyGate, NormPreservedOverSequences) {
    std::mt19937_64 gen(12);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = random_state(gen, 3);
        for (int k = 0; k < 20; ++k) {
            const int g = pick(gen);
            const std::size_t t = gen() % 3;
            if (g == 3) {
                s = apply_gate(s, Gate::X(), t, (t + 1) % 3);
            } else {
                s = apply_gate(s, g == 0 ? Gate::X() : g == 1 ? Gate::Z()
                                                             : Gate::H(),
                               t);
            }
            double norm2 = 0.0;
            for (double a : s.amplitudes()) {
                norm2 += a * a;
            }
            ASSERT_LE(std::abs(norm2 - 1.0), 1e-10);
        }
    }
}

TEST(Measure, DeterministicOne) {
    const auto m = measure(RealState::basis(1, 1), 0, 0.3);
    EXPECT_EQ(m.outcome, 1);
    EXPECT_DOUBLE_EQ(m.probability, 1.0);
    EXPECT_DOUBLE_EQ(m.residual[1], 1.0);
}

TEST(Measure, UnevenPairFirstQubit) {
    const auto s = make_state({1 / kRt3, 1 / kRt6, 1 / kRt6, 1 / kRt3});
    const auto m = measure(s, 0, 0.49);
    EXPECT_EQ(m.outcome, 0);
    EXPECT_NEAR(m.probability, 1.0 / 3 + 1.0 / 6, 1e-12);
}

TEST(Measure, ResidualInnerQubit) {
    // Gray areas (0.1, 0.3, 0.2, 0.4) -> binary 00, 01, 10, 11.
    const auto s = make_state({std::sqrt(0.1), std::sqrt(0.3), std::sqrt(0.4),
                               std::sqrt(0.2)});
    const auto m = collapse(s, 0, 0);
    EXPECT_NEAR(m.probability, 0.4, 1e-12);
    const auto p = probabilities(m.residual);
    EXPECT_NEAR(p[0], 0.1 / 0.4, 1e-12);
    EXPECT_NEAR(p[1], 0.3 / 0.4, 1e-12);
    EXPECT_NEAR(p[2] + p[3], 0.0, 1e-15);
}

TEST(Measure, ImpossibleOutcomeIsAnError) {
    EXPECT_THROW(collapse(RealState::basis(1, 0), 0, 1), std::domain_error);
}

TEST(Measure, GridAveragesReproduceProbabilities) {
    std::mt19937_64 gen(13);
    constexpr int kGrid = 1000;
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_state(gen, 3);
        for (std::size_t q = 0; q < 3; ++q) {
            int zeros = 0;
            for (int k = 0; k < kGrid; ++k) {
                zeros += measure(s, q, (k + 0.5) / kGrid).outcome == 0;
            }
            EXPECT_LE(std::abs(zeros / double(kGrid) - probability_zero(s, q)),
                      1.0 / kGrid);
        }
    }
}

TEST(Measure, ChainRuleMatchesJointProbabilities) {
    std::mt19937_64 gen(14);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = random_state(gen, 2);
        const auto joint = probabilities(s);
        for (int o1 = 0; o1 < 2; ++o1) {
            for (int o2 = 0; o2 < 2; ++o2) {
                double p = 0.0;
                try {
                    const auto m1 = collapse(s, 0, o1);
                    p = m1.probability * collapse(m1.residual, 1, o2).probability;
                } catch (const std::domain_error &) {
                    p = 0.0;
                }
                EXPECT_NEAR(p, joint[2 * o1 + o2], 1e-10);
            }
        }
    }
}

TEST(Probabilities, Examples) {
    const auto p0 = probabilities(RealState::basis(1, 0));
    EXPECT_DOUBLE_EQ(p0[0], 1.0);
    EXPECT_DOUBLE_EQ(p0[1], 0.0);

    const auto pm = probabilities(make_state({1 / kRt2, -1 / kRt2}));
    EXPECT_NEAR(pm[0], 0.5, 1e-15);
    EXPECT_NEAR(pm[1], 0.5, 1e-15);
}

TEST(Probabilities, HadamardOnTwoThirdsState) {
    const auto s = apply_gate(
        make_state({std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0)}), Gate::H(), 0);
    // Oracle: direct evaluation of (1/sqrt3 - 1/sqrt6)^2.
    const double oracle = std::pow(1 / kRt3 - 1 / kRt6, 2);
    EXPECT_NEAR(probabilities(s)[1], oracle, 1e-12);
    EXPECT_NEAR(oracle, 0.0285954, 1e-7);
}

TEST(Tensor, ProductAndFactor) {
    const auto a = make_state({0.6, 0.8});
    const auto b = make_state({1 / kRt2, -1 / kRt2});
    const auto ab = tensor(a, b);
    EXPECT_NEAR(ab[1], 0.6 * -1 / kRt2, 1e-15);
    const auto fixed = tensor(RealState::basis(1, 1), a);
    const auto f = factor_qubit(fixed, 1);
    EXPECT_NEAR(f[0], 0.6, 1e-15);
    EXPECT_NEAR(f[1], 0.8, 1e-15);
    EXPECT_THROW(factor_qubit(ab, 0), std::domain_error);
}
