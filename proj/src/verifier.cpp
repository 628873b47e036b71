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
#include "qubobs/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include <fmt/format.h>

namespace qubobs {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

StepReport compare(const DiskSystem &disk, const RealState &exact) {
    if (disk.num_qubits() != exact.num_qubits()) {
        throw std::invalid_argument(
            fmt::format("disk has {} qubits, exact state has {}",
                        disk.num_qubits(), exact.num_qubits()));
    }
    StepReport r;
    r.disk_probs = naive_probabilities(disk);
    r.exact_probs = probabilities(exact);
    for (std::size_t k = 0; k < r.disk_probs.size(); ++k) {
        r.max_abs_gap =
            std::max(r.max_abs_gap, std::abs(r.disk_probs[k] - r.exact_probs[k]));
    }
    r.classification = r.max_abs_gap <= kDiskTol ? Classification::Sound
                                                 : Classification::Breakdown;
    return r;
}

std::string describe(const Step &s) {
    return std::visit(
        overloaded{
            [](const step::PrepareQubit &p) {
                return fmt::format("prepare qubit ({:.6f}, {:.6f})", p.alpha,
                                   p.beta);
            },
            [](const step::PreparePair &p) {
                const auto &a = p.gray_amplitudes;
                return fmt::format("prepare pair ({:.6f}, {:.6f}, {:.6f}, "
                                   "{:.6f})",
                                   a[0], a[1], a[2], a[3]);
            },
            [](const step::ApplyGate &g) {
                return fmt::format("gate {} q{}", g.gate.name(), g.target);
            },
            [](const step::ApplyControlled &g) {
                return fmt::format("controlled-{} q{} -> q{}", g.gate.name(),
                                   g.control, g.target);
            },
            [](const step::Measure &m) {
                return fmt::format("measure q{} draw {:.6f}",
                                   fmt::join(m.qubits, ",q"), m.draw);
            },
            [](const step::Cancel &) { return std::string("cancel"); },
        },
        s);
}

StepError::StepError(std::size_t step_index, const std::string &what)
    : std::runtime_error(fmt::format("step {}: {}", step_index, what)),
      index_(step_index) {}

std::size_t Auditor::num_qubits() const noexcept {
    return disk_ ? disk_->num_qubits() : 0;
}

const DiskSystem &Auditor::disk() const {
    if (!disk_) {
        throw std::logic_error("no qubits prepared");
    }
    return *disk_;
}

const RealState &Auditor::exact() const {
    if (!exact_) {
        throw std::logic_error("no qubits prepared");
    }
    return *exact_;
}

void Auditor::append(const DiskSystem &d, const RealState &e) {
    if (disk_) {
        if (disk_->num_qubits() + d.num_qubits() > kMaxQubits) {
            throw std::invalid_argument("too many qubits");
        }
        disk_ = tensor(*disk_, d);
        exact_ = tensor(*exact_, e);
    } else {
        disk_ = d;
        exact_ = e;
    }
}

StepReport Auditor::apply(const Step &s) {
    const std::size_t index = reports_.size();
    try {
        std::visit(
            overloaded{
                [&](const step::PrepareQubit &p) {
                    append(encode_qubit(p.alpha, p.beta),
                           make_state({p.alpha, p.beta}));
                },
                [&](const step::PreparePair &p) {
                    const auto &g = p.gray_amplitudes;
                    // Gray slots 00, 01, 11, 10 -> binary 00, 01, 10, 11.
                    append(encode_pair(g).disk,
                           make_state({g[0], g[1], g[3], g[2]}));
                },
                [&](const step::ApplyGate &g) {
                    disk_ = apply_gate_disk(disk(), g.gate, g.target);
                    exact_ = apply_gate(exact(), g.gate, g.target);
                },
                [&](const step::ApplyControlled &g) {
                    disk_ = apply_controlled_disk(disk(), g.gate, g.control,
                                                  g.target);
                    exact_ = apply_gate(exact(), g.gate, g.target, g.control);
                },
                [&](const step::Measure &m) {
                    auto reading = spin_window(disk(), m.qubits, m.draw);
                    RealState e = exact();
                    double p = 1.0;
                    for (const auto &o : reading.outcomes) {
                        auto c = collapse(e, o.qubit,
                                          o.color == Color::Blue ? 0 : 1);
                        p *= c.probability;
                        e = std::move(c.residual);
                    }
                    last_outcomes_ = std::move(reading.outcomes);
                    last_disk_probability_ = reading.joint_probability;
                    last_exact_probability_ = p;
                    disk_ = std::move(reading.residual);
                    exact_ = std::move(e);
                },
                [&](const step::Cancel &) {
                    auto result = cancel(disk());
                    last_cancel_ = result.report;
                    disk_ = std::move(result.disk);
                },
            },
            s);
    } catch (const StepError &) {
        throw;
    } catch (const std::exception &e) {
        throw StepError(index, e.what());
    }
    StepReport r = compare(*disk_, *exact_);
    r.step_index = index;
    r.note = describe(s);
    reports_.push_back(r);
    return r;
}

std::vector<StepReport> audit_run(const std::vector<Step> &script) {
    Auditor a;
    for (const auto &s : script) {
        a.apply(s);
    }
    return a.reports();
}

std::vector<std::vector<StepReport>>
audit_batch_serial(const std::vector<std::vector<Step>> &scripts) {
    std::vector<std::vector<StepReport>> out;
    out.reserve(scripts.size());
    for (const auto &s : scripts) {
        out.push_back(audit_run(s));
    }
    return out;
}

std::vector<std::vector<StepReport>>
audit_batch(const std::vector<std::vector<Step>> &scripts) {
    std::vector<std::vector<StepReport>> out(scripts.size());
    std::vector<std::exception_ptr> errors(scripts.size());
    const auto n = static_cast<std::ptrdiff_t>(scripts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = audit_run(scripts[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

std::string format_audit_table(const std::vector<StepReport> &reports) {
    std::string out = fmt::format("{:>4}  {:>12}  {:<9}  {}\n", "step", "gap",
                                  "class", "note");
    for (const auto &r : reports) {
        out += fmt::format("{:>4}  {:>12.9f}  {:<9}  {}\n", r.step_index,
                           r.max_abs_gap, to_string(r.classification), r.note);
    }
    return out;
}

} // namespace qubobs
