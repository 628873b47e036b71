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
#include "qubobs/protocols.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>

#include "qubobs/random.hpp"
#include "qubobs/render.hpp"

namespace qubobs {

namespace {

struct RoundDraws {
    int alice_bit;
    Basis alice_basis;
    std::optional<Basis> eve_basis;
    Basis bob_basis;
    double eve_measure;
    double bob_measure;
    double sample;
};

Basis basis_from(int bit) { return bit == 0 ? Basis::Standard : Basis::Hadamard; }

void validate(const BB84Params &p) {
    if (p.rounds < 1) {
        throw std::invalid_argument("bb84 needs at least one round");
    }
    if (!(p.sample_fraction > 0.0 && p.sample_fraction < 1.0)) {
        throw std::invalid_argument("sample fraction must lie in (0, 1)");
    }
}

std::vector<RoundDraws> draw_rounds(const BB84Params &p) {
    DrawStream dice(p.seed);
    std::vector<RoundDraws> draws(p.rounds);
    for (auto &d : draws) {
        d.alice_bit = dice.bit();
        d.alice_basis = basis_from(dice.bit());
        if (p.eve_present) {
            d.eve_basis = basis_from(dice.bit());
        }
        d.bob_basis = basis_from(dice.bit());
        d.eve_measure = p.eve_present ? dice.next() : 0.0;
        d.bob_measure = dice.next();
        d.sample = dice.next();
    }
    return draws;
}

// Measuring in the Hadamard basis: turn the envelope over, then let the
// opposite-sign slices cancel before the window spins.
int measure_in(Auditor &a, Basis basis, double draw, bool &sound) {
    if (basis == Basis::Hadamard) {
        a.apply(step::ApplyGate{Gate::H(), 0});
        sound &= a.apply(step::Cancel{}).classification ==
                     Classification::Sound &&
                 a.last_cancel()->sound;
    }
    const auto r = a.apply(step::Measure{{0}, draw});
    sound &= r.classification == Classification::Sound;
    return a.last_outcomes().front().color == Color::Blue ? 0 : 1;
}

BB84Round play_round(const RoundDraws &d, double sample_fraction) {
    BB84Round round;
    round.alice_bit = d.alice_bit;
    round.alice_basis = d.alice_basis;
    round.eve_basis = d.eve_basis;
    round.bob_basis = d.bob_basis;

    Auditor a;
    a.apply(d.alice_bit == 0 ? step::PrepareQubit{1.0, 0.0}
                             : step::PrepareQubit{0.0, 1.0});
    if (d.alice_basis == Basis::Hadamard) {
        a.apply(step::ApplyGate{Gate::H(), 0});
    }
    if (d.eve_basis) {
        round.eve_outcome = measure_in(a, *d.eve_basis, d.eve_measure,
                                       round.sound);
        // Resend: the collapsed qubit goes back into Eve's basis.
        if (*d.eve_basis == Basis::Hadamard) {
            a.apply(step::ApplyGate{Gate::H(), 0});
        }
    }
    round.bob_outcome = measure_in(a, d.bob_basis, d.bob_measure, round.sound);
    round.sifted = d.alice_basis == d.bob_basis;
    round.sampled = round.sifted && d.sample < sample_fraction;
    return round;
}

BB84Result finish(std::vector<BB84Round> rounds) {
    BB84Result result;
    for (const auto &r : rounds) {
        if (!r.sifted) {
            continue;
        }
        result.sifted_key_alice.push_back(r.alice_bit);
        result.sifted_key_bob.push_back(r.bob_outcome);
        if (r.sampled) {
            ++result.sampled;
            result.sampled_errors += r.alice_bit != r.bob_outcome ? 1 : 0;
        }
    }
    if (result.sampled > 0) {
        result.qber = static_cast<double>(result.sampled_errors) /
                      static_cast<double>(result.sampled);
    }
    result.rounds = std::move(rounds);
    return result;
}

} // namespace

BB84Result bb84_run_serial(const BB84Params &params) {
    validate(params);
    const auto draws = draw_rounds(params);
    std::vector<BB84Round> rounds;
    rounds.reserve(draws.size());
    for (const auto &d : draws) {
        rounds.push_back(play_round(d, params.sample_fraction));
    }
    return finish(std::move(rounds));
}

BB84Result bb84_run(const BB84Params &params) {
    validate(params);
    const auto draws = draw_rounds(params);
    std::vector<BB84Round> rounds(draws.size());
    const auto n = static_cast<std::ptrdiff_t>(draws.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        rounds[i] = play_round(draws[i], params.sample_fraction);
    }
    return finish(std::move(rounds));
}

std::string format_bb84_transcript(const BB84Result &result) {
    std::string out;
    for (std::size_t i = 0; i < result.rounds.size(); ++i) {
        const auto &r = result.rounds[i];
        out += fmt::format(
            "round {} alice_bit={} alice_basis={} eve_basis={} "
            "eve_outcome={} bob_basis={} bob_outcome={} sifted={} "
            "sampled={}\n",
            i + 1, r.alice_bit, basis_letter(r.alice_basis),
            r.eve_basis ? basis_letter(*r.eve_basis) : '-',
            r.eve_outcome ? static_cast<char>('0' + *r.eve_outcome) : '-',
            basis_letter(r.bob_basis), r.bob_outcome, r.sifted ? 1 : 0,
            r.sampled ? 1 : 0);
    }
    out += fmt::format("qber {} sifted={} sampled={} errors={}\n",
                       result.qber ? fmt::format("{:.6f}", *result.qber)
                                   : std::string("undefined"),
                       result.sifted_key_alice.size(), result.sampled,
                       result.sampled_errors);
    return out;
}

std::vector<std::string> teleport_corrections(Color inner, Color outer) {
    std::vector<std::string> gates;
    if (outer == Color::Orange) {
        gates.emplace_back("X");
    }
    if (inner == Color::Orange) {
        gates.emplace_back("Z");
    }
    return gates;
}

namespace {

const std::array<double, 4> kEprGray{1.0 / std::sqrt(2.0), 0.0,
                                     1.0 / std::sqrt(2.0), 0.0};

// Chooses the window angle for a measurement of `qubit` on the current disk.
using DrawPolicy = std::function<double(const DiskSystem &, std::size_t)>;

TeleportTranscript run_teleport(double alpha, double beta,
                                TeleportStage stage,
                                const DrawPolicy &draw_for) {
    TeleportTranscript t;
    t.alpha = alpha;
    t.beta = beta;
    t.stage = stage;

    if (std::abs(alpha * alpha + beta * beta - 1.0) > kDiskTol) {
        throw std::invalid_argument("teleport input is not normalized");
    }

    Auditor a;
    const auto apply = [&](const Step &s) {
        a.apply(s);
        t.disks.push_back(a.disk());
    };
    apply(step::PrepareQubit{alpha, beta});
    apply(step::PreparePair{kEprGray});
    apply(step::ApplyControlled{Gate::X(), kAliceInner, kAliceOuter});
    if (stage == TeleportStage::Full) {
        apply(step::ApplyGate{Gate::H(), kAliceInner});
        apply(step::Measure{{kAliceInner}, draw_for(a.disk(), kAliceInner)});
        t.m_inner = a.last_outcomes().front().color;
        t.branch_probability_exact *= a.last_exact_probability();
        t.branch_probability_disk *= a.last_disk_probability();
    }
    apply(step::Measure{{kAliceOuter}, draw_for(a.disk(), kAliceOuter)});
    t.m_outer = a.last_outcomes().front().color;
    t.branch_probability_exact *= a.last_exact_probability();
    t.branch_probability_disk *= a.last_disk_probability();

    t.corrections_applied =
        stage == TeleportStage::Full
            ? teleport_corrections(*t.m_inner, t.m_outer)
            : teleport_corrections(Color::Blue, t.m_outer);
    for (const auto &g : t.corrections_applied) {
        apply(step::ApplyGate{Gate::preset(g), kBob});
    }

    t.bob_final_disk = project(a.disk(), kBob);
    if (stage == TeleportStage::Full) {
        t.bob_final_exact = factor_qubit(a.exact(), kBob);
    } else {
        // Bob's coin stays correlated with Alice's inner disk; report its
        // bias as a phase-free qubit.
        const double p0 = probability_zero(a.exact(), kBob);
        t.bob_final_exact = make_state({std::sqrt(p0), std::sqrt(1.0 - p0)});
    }
    t.steps = a.reports();
    return t;
}

DrawPolicy sampled(std::vector<double> draws) {
    return [draws = std::move(draws), next = std::size_t{0}](
               const DiskSystem &, std::size_t) mutable {
        return draws.at(next++);
    };
}

DrawPolicy forced(Color inner, Color outer) {
    return [inner, outer](const DiskSystem &disk, std::size_t qubit) {
        const double angle =
            angle_for(disk, qubit, qubit == kAliceInner ? inner : outer);
        if (angle < 0.0) {
            throw std::domain_error("requested branch has zero area");
        }
        return angle;
    };
}

std::pair<double, double> coin(double alpha_sq) {
    const double p = std::clamp(alpha_sq, 0.0, 1.0);
    return {std::sqrt(p), std::sqrt(1.0 - p)};
}

} // namespace

TeleportTranscript teleport_classical(double alpha_sq, double random_draw) {
    const auto [alpha, beta] = coin(alpha_sq);
    return run_teleport(alpha, beta, TeleportStage::Classical,
                        sampled({random_draw}));
}

TeleportTranscript teleport_classical_branch(double alpha_sq, Color outer) {
    const auto [alpha, beta] = coin(alpha_sq);
    return run_teleport(alpha, beta, TeleportStage::Classical,
                        forced(Color::Blue, outer));
}

TeleportTranscript teleport_full(double alpha, double beta,
                                 std::array<double, 2> random_draws) {
    return run_teleport(alpha, beta, TeleportStage::Full,
                        sampled({random_draws[0], random_draws[1]}));
}

TeleportTranscript teleport_full_branch(double alpha, double beta,
                                        Color inner, Color outer) {
    return run_teleport(alpha, beta, TeleportStage::Full,
                        forced(inner, outer));
}

std::string format_teleport_transcript(const TeleportTranscript &t) {
    std::string out = fmt::format(
        "teleport {} input ({:.9f}, {:.9f})\n",
        t.stage == TeleportStage::Full ? "full" : "classical", t.alpha,
        t.beta);
    for (const auto &s : t.steps) {
        out += fmt::format("step {} {} gap={:.9f} {}\n", s.step_index, s.note,
                           s.max_abs_gap, to_string(s.classification));
    }
    out += fmt::format("outcome inner={} outer={} p_exact={:.9f} "
                       "p_disk={:.9f}\n",
                       t.m_inner ? color_letter(*t.m_inner) : '-',
                       color_letter(t.m_outer), t.branch_probability_exact,
                       t.branch_probability_disk);
    out += fmt::format("corrections {}\n",
                       t.corrections_applied.empty()
                           ? std::string("none")
                           : fmt::format("{}", fmt::join(t.corrections_applied,
                                                         ",")));
    out += fmt::format("bob disk {}\n", render_text(t.bob_final_disk));
    out += fmt::format("bob exact ({:.9f}, {:.9f})\n", t.bob_final_exact[0],
                       t.bob_final_exact[1]);
    return out;
}

} // namespace qubobs
