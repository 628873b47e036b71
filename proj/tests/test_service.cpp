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
#include <filesystem>
#include <thread>

#include <httplib.h>
#include <gtest/gtest.h>

#include "qubobs/service.hpp"

using namespace qubobs;

namespace {

class ServiceTest : public ::testing::Test {
  protected:
    void SetUp() override {
        service_.mount(server_);
        port_ = server_.bind_to_any_port("127.0.0.1");
        ASSERT_GT(port_, 0);
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
        client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    }
    void TearDown() override {
        server_.stop();
        if (thread_.joinable()) {
            thread_.join();
        }
    }

    httplib::Result step(const std::string &line) {
        return client_->Post("/step", line, "text/plain");
    }

    Session session_{5, std::filesystem::temp_directory_path()};
    StepService service_{session_};
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::unique_ptr<httplib::Client> client_;
};

} // namespace

TEST_F(ServiceTest, StepStateAudit) {
    auto state = client_->Get("/state");
    ASSERT_TRUE(state);
    EXPECT_EQ(state->status, 200);
    EXPECT_EQ(state->body, "empty\n");

    auto r = step("qubit a 0.5 0.5");
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, 200);
    EXPECT_EQ(r->body.rfind("step 0 prepare qubit", 0), 0u) << r->body;

    r = step("gate H a");
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, 200);
    EXPECT_NE(r->body.find("Breakdown"), std::string::npos);

    state = client_->Get("/state");
    ASSERT_TRUE(state);
    EXPECT_EQ(state->body, session_.state_text());
    EXPECT_NE(state->body.find("0.250000000 O -"), std::string::npos);

    auto audit = client_->Get("/audit");
    ASSERT_TRUE(audit);
    EXPECT_EQ(audit->body, session_.audit_table());
    EXPECT_NE(audit->body.find("Breakdown  gate H q0"), std::string::npos);
}

TEST_F(ServiceTest, ErrorStatuses) {
    auto r = step("gate H nobody");
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, 400);
    EXPECT_NE(r->body.find("unknown qubit"), std::string::npos);

    for (int i = 0; i < 10; ++i) {
        ASSERT_EQ(step("qubit q" + std::to_string(i) + " 0.5 0.5")->status, 200);
    }
    r = step("qubit overflow 0.5 0.5");
    ASSERT_TRUE(r);
    EXPECT_EQ(r->status, 422);
    EXPECT_NE(r->body.find("too many qubits"), std::string::npos);
    // A failed step leaves the session usable.
    EXPECT_EQ(step("gate X q0")->status, 200);
}

TEST_F(ServiceTest, StepsAreOrdered) {
    ASSERT_EQ(step("qubit a 1 0")->status, 200);
    std::vector<std::thread> workers;
    for (int i = 0; i < 8; ++i) {
        workers.emplace_back([this] {
            httplib::Client c("127.0.0.1", port_);
            EXPECT_EQ(c.Post("/step", "gate X a", "text/plain")->status, 200);
        });
    }
    for (auto &w : workers) {
        w.join();
    }
    EXPECT_EQ(session_.auditor().reports().size(), 9u);
    // Eight X gates bring the qubit home.
    EXPECT_EQ(session_.auditor().disk()[0].colors[0], Color::Blue);
}
