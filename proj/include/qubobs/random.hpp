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
#pragma once

#include <cstdint>
#include <random>

namespace qubobs {

/**
 * Seedable stream of uniform draws in [0, 1). Built from the raw mt19937_64
 * output rather than std::uniform_real_distribution so that the sequence is
 * identical across standard library implementations.
 */
class DrawStream {
  public:
    explicit DrawStream(std::uint64_t seed) : engine_(seed) {}

    double next() noexcept {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    int bit() noexcept { return next() < 0.5 ? 0 : 1; }
    std::uint64_t next_seed() noexcept { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace qubobs
