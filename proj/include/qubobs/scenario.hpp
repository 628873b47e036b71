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
 * Line-oriented scenario language. Commands speak in disk fractions:
 *
 *   qubit <name> <blue_frac> <orange_frac> [-]
 *   pair <n1> <n2> <a00> <a01> <a11> <a10>      (Gray order amplitudes)
 *   epr <n1> <n2>
 *   gate <X|Z|H> <name>
 *   cnot <control> <target>
 *   measure <name>...
 *   cancel
 *   audit
 *   render <svg|text> <file> [stacked|side]
 *   bb84 <rounds> [eve]
 *   teleport <classical|full> <blue_frac> [-]
 *
 * `#` starts a comment.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qubobs/random.hpp"
#include "qubobs/verifier.hpp"

namespace qubobs {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

struct Command {
    std::size_t line = 0;
    std::vector<std::string> words;
};

struct Scenario {
    std::string name;
    std::vector<Command> commands;
};

/// Checks syntax and that qubit names are declared before use.
Scenario parse_scenario(std::string_view text, std::string name = "scenario");

/// Parses one line against the names an existing session already declared.
Command parse_line(std::string_view line, std::size_t line_number,
                   std::set<std::string> &declared);

/**
 * Executes commands one at a time on both tracks. Measurements, BB84 seeds and
 * teleport draws all come from one DrawStream, so a seed fixes every artifact.
 */
class Session {
  public:
    Session(std::uint64_t seed, std::filesystem::path out_dir);

    /// Runs one command and returns the transcript lines it produced.
    std::string execute(const Command &cmd);
    /// Parses and runs a single scenario line.
    std::string execute_line(std::string_view line);

    [[nodiscard]] const std::string &transcript() const noexcept {
        return transcript_;
    }
    [[nodiscard]] std::string audit_table() const;
    /// Canonical disk text plus the exact amplitudes.
    [[nodiscard]] std::string state_text() const;
    [[nodiscard]] const Auditor &auditor() const noexcept { return auditor_; }

  private:
    std::size_t qubit(const std::string &name) const;
    std::string record(const StepReport &r, const std::string &extra = {});

    Auditor auditor_;
    std::map<std::string, std::size_t> names_;
    DrawStream dice_;
    std::filesystem::path out_dir_;
    std::string transcript_;
    std::size_t lines_seen_ = 0;
};

struct RunResult {
    int exit_code = 0;
    std::string message;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitRuntime = 2;

/// Runs a script and writes transcript.txt and audit.txt into out_dir.
RunResult run_scenario(std::string_view script, std::uint64_t seed,
                       const std::filesystem::path &out_dir);

} // namespace qubobs
