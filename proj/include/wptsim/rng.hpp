// SPDX-License-Identifier: Apache-2.0
//
// wptsim - near-field RF wireless power transfer simulator
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

#ifndef WPTSIM_RNG_HPP
#define WPTSIM_RNG_HPP

#include <cstdint>

namespace wptsim
{

// Counter-based random stream. A stream is identified by a 64-bit seed plus a
// derivation path of integers (e.g. realization, antenna, slot); the k-th draw
// depends only on (seed, path, k). Substreams obtained through derive() are
// statistically independent, so Monte Carlo work units can be evaluated in any
// order, or in parallel, with bit-identical results.
//
// The generator is the splitmix64 finalizer over state + k*gamma; derivation
// re-mixes the child index into the state. Streams are 16 bytes and cheap to
// copy; functions that own their draws take a RandomStream by value.
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed);

    // Child stream for path element `index`; does not advance this stream.
    RandomStream derive(std::uint64_t index) const;

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform();
    double uniform(double lo, double hi);

    // Gaussian draw via Box-Muller; consumes exactly two 64-bit draws.
    double normal(double mean = 0.0, double stddev = 1.0);

  private:
    RandomStream() = default;

    std::uint64_t state_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace wptsim

#endif
