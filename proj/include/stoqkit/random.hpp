// Copyright 2026 The stoqkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace stoq {

/// Counter-based SplitMix64 stream. Streams derived with split() from
/// distinct indices are independent for practical purposes and the output
/// is identical on every platform.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    uint64_t next();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound);
    /// Bernoulli(p).
    bool chance(double p) {
        return uniform() < p;
    }
    /// Independent stream for index `stream`.
    SplitMix64 split(uint64_t stream) const;

   private:
    uint64_t state_;
};

}  // namespace stoq
