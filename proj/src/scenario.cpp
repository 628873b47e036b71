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
#include "qubobs/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "qubobs/protocols.hpp"
#include "qubobs/render.hpp"

namespace qubobs {

namespace {

std::vector<std::string> split_words(std::string_view line) {
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    std::vector<std::string> words;
    for (std::string w; in >> w;) {
        words.push_back(std::move(w));
    }
    return words;
}

bool parse_number(const std::string &s, double &out) {
    const char *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

double as_number(const std::string &s) {
    double v = 0.0;
    if (!parse_number(s, v)) {
        throw std::invalid_argument(fmt::format("'{}' is not a number", s));
    }
    return v;
}

double number(const Command &c, std::size_t i) {
    double v = 0.0;
    if (!parse_number(c.words.at(i), v)) {
        throw ParseError(c.line,
                         fmt::format("'{}' is not a number", c.words.at(i)));
    }
    return v;
}

void expect_args(const Command &c, std::size_t lo, std::size_t hi) {
    const std::size_t n = c.words.size() - 1;
    if (n < lo || n > hi) {
        throw ParseError(c.line, fmt::format("'{}' takes {} arguments, got {}",
                                             c.words[0],
                                             lo == hi ? fmt::format("{}", lo)
                                                      : fmt::format("{}-{}",
                                                                    lo, hi),
                                             n));
    }
}

void declare(const Command &c, std::set<std::string> &declared,
             const std::string &name) {
    if (!declared.insert(name).second) {
        throw ParseError(c.line,
                         fmt::format("qubit '{}' already declared", name));
    }
}

void use(const Command &c, const std::set<std::string> &declared,
         const std::string &name) {
    if (!declared.contains(name)) {
        throw ParseError(c.line, fmt::format("unknown qubit '{}'", name));
    }
}

void optional_minus(const Command &c, std::size_t i) {
    if (c.words.size() > i && c.words[i] != "-") {
        throw ParseError(c.line,
                         fmt::format("expected '-' but found '{}'", c.words[i]));
    }
}

void check_fraction(const Command &c, double f) {
    if (f < 0.0 || f > 1.0) {
        throw ParseError(c.line, "fractions must lie in [0, 1]");
    }
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string &what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

Command parse_line(std::string_view text, std::size_t line_number,
                   std::set<std::string> &declared) {
    Command c{line_number, split_words(text)};
    if (c.words.empty()) {
        return c;
    }
    const std::string &op = c.words[0];
    if (op == "qubit") {
        expect_args(c, 3, 4);
        check_fraction(c, number(c, 2));
        check_fraction(c, number(c, 3));
        if (number(c, 2) + number(c, 3) <= 0.0) {
            throw ParseError(c.line, "fractions must not both be zero");
        }
        optional_minus(c, 4);
        declare(c, declared, c.words[1]);
    } else if (op == "pair") {
        expect_args(c, 6, 6);
        for (std::size_t i = 3; i < 7; ++i) {
            number(c, i);
        }
        if (c.words[1] == c.words[2]) {
            throw ParseError(c.line, "pair needs two distinct names");
        }
        declare(c, declared, c.words[1]);
        declare(c, declared, c.words[2]);
    } else if (op == "epr") {
        expect_args(c, 2, 2);
        if (c.words[1] == c.words[2]) {
            throw ParseError(c.line, "epr needs two distinct names");
        }
        declare(c, declared, c.words[1]);
        declare(c, declared, c.words[2]);
    } else if (op == "gate") {
        expect_args(c, 2, 2);
        if (c.words[1] != "X" && c.words[1] != "Z" && c.words[1] != "H") {
            throw ParseError(c.line,
                             fmt::format("unknown gate '{}'", c.words[1]));
        }
        use(c, declared, c.words[2]);
    } else if (op == "cnot") {
        expect_args(c, 2, 2);
        use(c, declared, c.words[1]);
        use(c, declared, c.words[2]);
        if (c.words[1] == c.words[2]) {
            throw ParseError(c.line, "control equals target");
        }
    } else if (op == "measure") {
        expect_args(c, 1, kMaxQubits);
        std::set<std::string> seen;
        for (std::size_t i = 1; i < c.words.size(); ++i) {
            use(c, declared, c.words[i]);
            if (!seen.insert(c.words[i]).second) {
                throw ParseError(c.line, "measured qubits must be distinct");
            }
        }
    } else if (op == "cancel" || op == "audit") {
        expect_args(c, 0, 0);
    } else if (op == "render") {
        expect_args(c, 2, 3);
        if (c.words[1] != "svg" && c.words[1] != "text") {
            throw ParseError(c.line, "render format must be svg or text");
        }
        if (c.words.size() > 3 && c.words[3] != "stacked" &&
            c.words[3] != "side") {
            throw ParseError(c.line, "render layout must be stacked or side");
        }
        if (c.words[2].find('/') != std::string::npos ||
            c.words[2].starts_with(".")) {
            throw ParseError(c.line,
                             "render file must be a plain file name");
        }
    } else if (op == "bb84") {
        expect_args(c, 1, 2);
        const double rounds = number(c, 1);
        if (rounds < 1 || rounds != std::floor(rounds) || rounds > 1e7) {
            throw ParseError(c.line, "bb84 rounds must be a positive integer");
        }
        if (c.words.size() > 2 && c.words[2] != "eve") {
            throw ParseError(c.line,
                             fmt::format("expected 'eve' but found '{}'",
                                         c.words[2]));
        }
    } else if (op == "teleport") {
        expect_args(c, 2, 3);
        if (c.words[1] != "classical" && c.words[1] != "full") {
            throw ParseError(c.line,
                             "teleport stage must be classical or full");
        }
        check_fraction(c, number(c, 2));
        optional_minus(c, 3);
    } else {
        throw ParseError(c.line, fmt::format("unknown command '{}'", op));
    }
    return c;
}

Scenario parse_scenario(std::string_view text, std::string name) {
    Scenario s{std::move(name), {}};
    std::set<std::string> declared;
    std::size_t line_number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos
                                              : nl - pos);
        ++line_number;
        auto c = parse_line(line, line_number, declared);
        if (!c.words.empty()) {
            s.commands.push_back(std::move(c));
        }
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    return s;
}

Session::Session(std::uint64_t seed, std::filesystem::path out_dir)
    : dice_(seed), out_dir_(std::move(out_dir)) {}

std::size_t Session::qubit(const std::string &name) const {
    return names_.at(name);
}

std::string Session::record(const StepReport &r, const std::string &extra) {
    return fmt::format("step {} {}{} | {} | gap={:.9f} {}\n", r.step_index,
                       r.note, extra, render_text(auditor_.disk()),
                       r.max_abs_gap, to_string(r.classification));
}

std::string Session::execute(const Command &c) {
    if (c.words.empty()) {
        return {};
    }
    const auto &w = c.words;
    const std::string &op = w[0];
    std::string out;
    try {
        if (op == "qubit") {
            const double blue = as_number(w[2]);
            const double orange = as_number(w[3]);
            const double total = blue + orange;
            const double sign = w.size() > 4 ? -1.0 : 1.0;
            names_[w[1]] = auditor_.num_qubits();
            out = record(auditor_.apply(step::PrepareQubit{
                             std::sqrt(blue / total),
                             sign * std::sqrt(orange / total)}),
                         fmt::format(" as {}", w[1]));
        } else if (op == "pair" || op == "epr") {
            std::array<double, 4> a{};
            if (op == "pair") {
                double norm2 = 0.0;
                for (std::size_t i = 0; i < 4; ++i) {
                    a[i] = as_number(w[3 + i]);
                    norm2 += a[i] * a[i];
                }
                if (norm2 <= 0.0) {
                    throw std::invalid_argument("pair amplitudes are all zero");
                }
                for (auto &x : a) {
                    x /= std::sqrt(norm2);
                }
            } else {
                a = {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0), 0.0};
            }
            const std::size_t first = auditor_.num_qubits();
            const auto r = auditor_.apply(step::PreparePair{a});
            names_[w[1]] = first;
            names_[w[2]] = first + 1;
            out = record(r, fmt::format(" as {},{}", w[1], w[2]));
        } else if (op == "gate") {
            out = record(auditor_.apply(
                step::ApplyGate{Gate::preset(w[1]), qubit(w[2])}));
        } else if (op == "cnot") {
            out = record(auditor_.apply(
                step::ApplyControlled{Gate::X(), qubit(w[1]), qubit(w[2])}));
        } else if (op == "measure") {
            step::Measure m{{}, dice_.next()};
            for (std::size_t i = 1; i < w.size(); ++i) {
                m.qubits.push_back(qubit(w[i]));
            }
            const auto r = auditor_.apply(m);
            std::string seen;
            for (std::size_t i = 1; i < w.size(); ++i) {
                seen += fmt::format(
                    " {}={}", w[i],
                    color_letter(auditor_.last_outcomes()[i - 1].color));
            }
            out = record(r, fmt::format(" ->{} p_disk={:.9f} p_exact={:.9f}",
                                        seen, auditor_.last_disk_probability(),
                                        auditor_.last_exact_probability()));
        } else if (op == "cancel") {
            const auto r = auditor_.apply(step::Cancel{});
            const auto &rep = *auditor_.last_cancel();
            out = record(r, fmt::format(" pairs={} removed={:.9f} sound={}",
                                        rep.cancelled_pairs,
                                        rep.removed_fraction,
                                        rep.sound ? "yes" : "no"));
        } else if (op == "audit") {
            std::size_t breakdowns = 0;
            for (const auto &r : auditor_.reports()) {
                breakdowns +=
                    r.classification == Classification::Breakdown ? 1 : 0;
            }
            out = fmt::format("audit steps={} sound={} breakdown={}\n",
                              auditor_.reports().size(),
                              auditor_.reports().size() - breakdowns,
                              breakdowns);
        } else if (op == "render") {
            const std::string body =
                w[1] == "svg"
                    ? render_svg(auditor_.disk(),
                                 RenderSpec{w.size() > 3 && w[3] == "stacked"
                                                ? Layout::Stacked
                                                : Layout::SideBySide,
                                            std::nullopt, true, 240})
                    : render_text(auditor_.disk()) + "\n";
            std::filesystem::create_directories(out_dir_);
            std::ofstream f(out_dir_ / w[2], std::ios::binary);
            f << body;
            if (!f) {
                throw std::runtime_error(
                    fmt::format("cannot write {}", (out_dir_ / w[2]).string()));
            }
            out = fmt::format("render {} {}\n", w[1], w[2]);
        } else if (op == "bb84") {
            BB84Params p;
            p.rounds = static_cast<std::size_t>(as_number(w[1]));
            p.eve_present = w.size() > 2;
            p.seed = dice_.next_seed();
            out = format_bb84_transcript(bb84_run(p));
        } else if (op == "teleport") {
            const double blue = as_number(w[2]);
            const double sign = w.size() > 3 ? -1.0 : 1.0;
            TeleportTranscript t;
            if (w[1] == "classical") {
                t = teleport_classical(blue, dice_.next());
            } else {
                const double d0 = dice_.next();
                const double d1 = dice_.next();
                t = teleport_full(std::sqrt(blue), sign * std::sqrt(1.0 - blue),
                                  {d0, d1});
            }
            out = format_teleport_transcript(t);
        }
    } catch (const std::exception &e) {
        throw std::runtime_error(fmt::format("line {}: {}", c.line, e.what()));
    }
    transcript_ += out;
    return out;
}

std::string Session::execute_line(std::string_view line) {
    ++lines_seen_;
    std::set<std::string> declared;
    for (const auto &[name, index] : names_) {
        declared.insert(name);
    }
    return execute(parse_line(line, lines_seen_, declared));
}

std::string Session::audit_table() const {
    return format_audit_table(auditor_.reports());
}

std::string Session::state_text() const {
    if (auditor_.empty()) {
        return "empty\n";
    }
    std::string out = to_canonical_text(auditor_.disk());
    out += "exact";
    for (double a : auditor_.exact().amplitudes()) {
        out += fmt::format(" {:.9f}", a);
    }
    out += "\n";
    return out;
}

RunResult run_scenario(std::string_view script, std::uint64_t seed,
                       const std::filesystem::path &out_dir) {
    Scenario scenario;
    try {
        scenario = parse_scenario(script);
    } catch (const ParseError &e) {
        return {kExitParse, e.what()};
    }
    Session session(seed, out_dir);
    RunResult result;
    for (const auto &c : scenario.commands) {
        try {
            session.execute(c);
        } catch (const std::exception &e) {
            result = {kExitRuntime, e.what()};
            break;
        }
    }
    std::filesystem::create_directories(out_dir);
    std::ofstream(out_dir / "transcript.txt", std::ios::binary)
        << session.transcript();
    std::ofstream(out_dir / "audit.txt", std::ios::binary)
        << session.audit_table();
    return result;
}

} // namespace qubobs
