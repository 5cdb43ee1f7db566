/*
   Copyright 2026 The elimcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELIMCERT_RNG_HPP
#define ELIMCERT_RNG_HPP

#include <cstdint>
#include <random>

#include "elimcert/field.hpp"

namespace elimcert {

// Default range for "sufficiently general" scalar draws.
inline constexpr std::uint64_t kDefaultSampleBound = 65521;

// The single source of randomness for a run. Every randomized choice in a
// pipeline flows through one Sampler so that a seed pins the whole run.
// Uniform draws use rejection sampling (not std::uniform_int_distribution)
// to keep the stream identical across standard libraries.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed, std::uint64_t bound = kDefaultSampleBound)
        : rng_(seed), bound_(bound == 0 ? 1 : bound) {}

    std::uint64_t bound() const { return bound_; }

    // uniform in [lo, hi]
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
        std::uint64_t v;
        do {
            v = rng_();
        } while (limit != 0 && v >= limit);
        return span == 0 ? v : lo + v % span;
    }

    // uniform integer in [1, bound]
    std::uint64_t draw_int() { return uniform(1, bound_); }

    template <class K>
    K draw_scalar(const FieldDesc& desc) {
        return scalar_from_int<K>(static_cast<long long>(draw_int()), desc);
    }

  private:
    std::mt19937_64 rng_;
    std::uint64_t bound_;
};

} // namespace elimcert

#endif
