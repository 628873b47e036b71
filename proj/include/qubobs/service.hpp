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
 * Local HTTP front end for one Session, for the teaching UI:
 *
 *   POST /step      body is one scenario line; reply is its transcript lines
 *   GET  /state     canonical disk text followed by the exact amplitudes
 *   GET  /audit     the audit table so far
 *
 * Parse errors answer 400 and runtime errors 422, with the message as body.
 */
#pragma once

#include <mutex>

#include "qubobs/scenario.hpp"

namespace httplib {
class Server;
}

namespace qubobs {

class StepService {
  public:
    explicit StepService(Session &session) : session_(session) {}

    /// Registers the routes; the service must outlive the server.
    void mount(httplib::Server &server);

  private:
    Session &session_;
    std::mutex mutex_;
};

} // namespace qubobs
