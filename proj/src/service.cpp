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
#include "qubobs/service.hpp"

#include <httplib.h>

namespace qubobs {

void StepService::mount(httplib::Server &server) {
    server.Post("/step", [this](const httplib::Request &req,
                                httplib::Response &res) {
        std::lock_guard lock(mutex_);
        try {
            res.set_content(session_.execute_line(req.body), "text/plain");
        } catch (const ParseError &e) {
            res.status = 400;
            res.set_content(e.what(), "text/plain");
        } catch (const std::exception &e) {
            res.status = 422;
            res.set_content(e.what(), "text/plain");
        }
    });
    server.Get("/state", [this](const httplib::Request &,
                                httplib::Response &res) {
        std::lock_guard lock(mutex_);
        res.set_content(session_.state_text(), "text/plain");
    });
    server.Get("/audit", [this](const httplib::Request &,
                                httplib::Response &res) {
        std::lock_guard lock(mutex_);
        res.set_content(session_.audit_table(), "text/plain");
    });
}

} // namespace qubobs
