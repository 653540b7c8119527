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

#ifndef RISCONTAM_STATS_HPP
#define RISCONTAM_STATS_HPP

#include <cmath>
#include <cstddef>
#include <span>

namespace riscontam
{
    // Running mean and variance (Welford).
    class RunningStats
    {
    public:
        void add(double x)
        {
            ++n_;
            const double d = x - mean_;
            mean_ += d / double(n_);
            m2_ += d * (x - mean_);
        }

        std::size_t count() const { return n_; }
        double mean() const { return mean_; }
        double variance() const { return n_ > 1 ? m2_ / double(n_ - 1) : 0.0; }
        double stderr_of_mean() const { return n_ > 1 ? std::sqrt(variance() / double(n_)) : 0.0; }

    private:
        std::size_t n_ = 0;
        double mean_ = 0.0;
        double m2_ = 0.0;
    };

    struct Estimate
    {
        double mean = 0.0;
        double stderr_ = 0.0;
        std::size_t trials = 0;
    };

    // Reduces per-trial values in index order, so the result is independent of how they were produced.
    inline Estimate summarize(std::span<const double> values)
    {
        RunningStats s;
        for (double v : values)
            s.add(v);
        return {s.mean(), s.stderr_of_mean(), s.count()};
    }
} // namespace riscontam

#endif
