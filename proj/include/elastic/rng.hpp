// SPDX-License-Identifier: Apache-2.0
//
// elastic-sim: throughput scaling simulator for directional ad hoc networks
// Copyright (C) 2026 The elastic-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <random>

namespace elastic
{
    // Seeded generator with library-independent uniform draws, so that
    // instances and schedules are bit-identical across standard libraries.
    class rng
    {
    public:
        explicit rng(std::uint64_t seed) : engine_(seed) {}

        // Uniform double in [0, 1) with 53 random bits.
        double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

        // Uniform integer in [0, bound), Lemire's nearly-divisionless method.
        std::uint64_t below(std::uint64_t bound)
        {
            unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
            auto low = static_cast<std::uint64_t>(m);
            if (low < bound)
            {
                std::uint64_t threshold = -bound % bound;
                while (low < threshold)
                {
                    m = static_cast<unsigned __int128>(engine_()) * bound;
                    low = static_cast<std::uint64_t>(m);
                }
            }
            return static_cast<std::uint64_t>(m >> 64);
        }

        std::mt19937_64 &engine() { return engine_; }

    private:
        std::mt19937_64 engine_;
    };

    // Derives an independent stream seed from a user seed (splitmix64 finalizer).
    inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
    {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
}
