// SPDX-License-Identifier: Apache-2.0
//
// riscontam: link-level simulator of inter-operator pilot contamination in
// multi-operator RIS-assisted uplinks
// Copyright (C) 2026 The riscontam authors
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

#ifndef RISCONTAM_RANDOM_HPP
#define RISCONTAM_RANDOM_HPP

#include "linalg.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace riscontam
{
    inline std::uint64_t splitmix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ull;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    // Order-sensitive hash of (master seed, stream tags...). Every Monte-Carlo
    // trial gets its own stream, so results do not depend on scheduling.
    inline std::uint64_t stream_seed(std::uint64_t master, std::initializer_list<std::uint64_t> tags)
    {
        std::uint64_t h = splitmix64(master);
        for (auto t : tags)
            h = splitmix64(h ^ splitmix64(t + 0x632BE59BD9B4E019ull));
        return h;
    }

    // FNV-1a, used to turn experiment names into stream tags.
    constexpr std::uint64_t tag(std::string_view name)
    {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : name)
        {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

        RandomStream(std::uint64_t master, std::initializer_list<std::uint64_t> tags)
            : engine_(stream_seed(master, tags)) {}

        double normal() { return normal_(engine_); }

        double uniform() { return uniform_(engine_); }

        // Circularly symmetric complex Gaussian with the given variance
        cdouble complex_normal(double variance = 1.0)
        {
            const double s = std::sqrt(0.5 * variance);
            const double re = normal_(engine_);
            const double im = normal_(engine_);
            return {s * re, s * im};
        }

        CVec complex_normal_vector(Eigen::Index n, double variance = 1.0)
        {
            CVec v(n);
            for (Eigen::Index i = 0; i < n; ++i)
                v(i) = complex_normal(variance);
            return v;
        }

        std::mt19937_64 &engine() { return engine_; }

    private:
        std::mt19937_64 engine_;
        std::normal_distribution<double> normal_{0.0, 1.0};
        std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    };
} // namespace riscontam

#endif
