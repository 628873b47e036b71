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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <httplib.h>

#include "qubobs/disk.hpp"
#include "qubobs/protocols.hpp"
#include "qubobs/random.hpp"
#include "qubobs/render.hpp"
#include "qubobs/scenario.hpp"
#include "qubobs/service.hpp"

namespace fs = std::filesystem;
using namespace qubobs;

namespace {

bool read_file(const fs::path &path, std::string &out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

void write_file(const fs::path &path, const std::string &body) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream(path, std::ios::binary) << body;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Slice-disk qubit simulator with an exact state-vector "
                 "reference track"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out_dir = ".";
    app.add_option("--seed", seed, "Seed for every random draw")
        ->capture_default_str();
    app.add_option("--out", out_dir, "Directory for artifacts")
        ->capture_default_str();

    std::string script_path;
    auto *run = app.add_subcommand("run", "Run a scenario file on both tracks");
    run->add_option("file", script_path, "Scenario script")->required();

    BB84Params bb84;
    auto *bb84_cmd = app.add_subcommand("bb84", "Run BB84 key distribution");
    bb84_cmd->add_option("--rounds", bb84.rounds, "Number of qubits sent")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bb84_cmd->add_flag("--eve", bb84.eve_present,
                       "Add an intercept-resend eavesdropper");
    bb84_cmd->add_option("--sample", bb84.sample_fraction,
                         "Share of sifted bits disclosed for error estimation")
        ->capture_default_str();

    std::string stage = "full";
    double blue = 0.72;
    bool negative = false;
    auto *tele = app.add_subcommand("teleport", "Teleport one qubit");
    tele->add_option("--stage", stage, "classical or full")
        ->capture_default_str()
        ->check(CLI::IsMember({"classical", "full"}));
    tele->add_option("--blue", blue, "Blue fraction of the input qubit")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    tele->add_flag("--negative", negative, "Negative sign on the orange part");

    std::string disk_path;
    std::string format = "svg";
    std::string layout = "side";
    std::string output;
    double window = -1.0;
    auto *render = app.add_subcommand(
        "render", "Render a disk given in canonical text form");
    render->add_option("file", disk_path,
                       "Disk text: one `fraction colors sign` per line")
        ->required();
    render->add_option("--format", format, "svg or text")
        ->capture_default_str()
        ->check(CLI::IsMember({"svg", "text"}));
    render->add_option("--layout", layout, "side or stacked")
        ->capture_default_str()
        ->check(CLI::IsMember({"side", "stacked"}));
    render->add_option("--window", window, "Window angle as a turn fraction");
    render->add_option("-o,--output", output,
                       "Output file name inside --out (default disk.svg / "
                       "disk.txt)");

    std::string host = "127.0.0.1";
    int port = 8080;
    auto *serve = app.add_subcommand(
        "serve", "Serve one interactive session over HTTP");
    serve->add_option("--host", host)->capture_default_str();
    serve->add_option("--port", port)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // Help and version requests exit 0; every usage error is a parse error.
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    const fs::path out(out_dir);
    try {
        if (*run) {
            std::string script;
            if (!read_file(script_path, script)) {
                std::cerr << "cannot read " << script_path << "\n";
                return kExitRuntime;
            }
            const auto result = run_scenario(script, seed, out);
            std::string audit;
            read_file(out / "audit.txt", audit);
            std::cout << audit;
            if (result.exit_code != kExitOk) {
                std::cerr << result.message << "\n";
            }
            return result.exit_code;
        }
        if (*bb84_cmd) {
            bb84.seed = seed;
            const auto result = bb84_run(bb84);
            const std::string text = format_bb84_transcript(result);
            write_file(out / "transcript.txt", text);
            std::cout << fmt::format(
                "rounds={} sifted={} qber={}\n", result.rounds.size(),
                result.sifted_key_alice.size(),
                result.qber ? fmt::format("{:.6f}", *result.qber)
                            : std::string("undefined"));
            return kExitOk;
        }
        if (*tele) {
            DrawStream dice(seed);
            TeleportTranscript t;
            if (stage == "classical") {
                t = teleport_classical(blue, dice.next());
            } else {
                const double d0 = dice.next();
                const double d1 = dice.next();
                t = teleport_full(std::sqrt(blue),
                                  (negative ? -1.0 : 1.0) *
                                      std::sqrt(1.0 - blue),
                                  {d0, d1});
            }
            const std::string text = format_teleport_transcript(t);
            write_file(out / "transcript.txt", text);
            std::cout << text;
            return kExitOk;
        }
        if (*render) {
            std::string text;
            if (!read_file(disk_path, text)) {
                std::cerr << "cannot read " << disk_path << "\n";
                return kExitRuntime;
            }
            std::optional<DiskSystem> parsed;
            try {
                parsed = parse_canonical_text(text);
            } catch (const std::invalid_argument &e) {
                std::cerr << disk_path << ": " << e.what() << "\n";
                return kExitParse;
            }
            const DiskSystem &disk = *parsed;
            if (format == "text") {
                const std::string line = render_text(disk) + "\n";
                write_file(out / (output.empty() ? "disk.txt" : output), line);
                std::cout << line;
            } else {
                RenderSpec spec;
                spec.layout =
                    layout == "stacked" ? Layout::Stacked : Layout::SideBySide;
                if (window >= 0.0) {
                    spec.window_angle = window;
                }
                write_file(out / (output.empty() ? "disk.svg" : output),
                           render_svg(disk, spec));
            }
            return kExitOk;
        }
        if (*serve) {
            Session session(seed, out);
            StepService service(session);
            httplib::Server server;
            service.mount(server);
            std::cout << fmt::format("listening on http://{}:{}\n", host, port)
                      << std::flush;
            if (!server.listen(host, port)) {
                std::cerr << "cannot listen on " << host << ":" << port << "\n";
                return kExitRuntime;
            }
            return kExitOk;
        }
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
