// Copyright 2026 The mintensor authors
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

#ifndef MINTENSOR_RNG_HPP
#define MINTENSOR_RNG_HPP

#include <complex>
#include <cstdint>

namespace mtn {

/// One splitmix64 step. Mutates `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Stream tags keep independently derived streams from colliding even when
/// their indices coincide.
enum class StreamTag : std::uint64_t {
    haar_matrix = 1,
    permutation = 2,
    tuple = 3,
    solver_start = 4,
    pair_job = 5,
    word_sample = 6,
    test = 7,
};

/// Derives the seed of an independent substream from (seed, tag, index) by
/// chaining splitmix64. This is the only stream-derivation rule in the
/// project; every consumer of randomness is keyed through it, so the same
/// root seed always reproduces the same results regardless of scheduling.
std::uint64_t derive_stream(std::uint64_t seed, StreamTag tag, std::uint64_t index);

/// xoshiro256++ with splitmix64 state expansion. Small, fast, and fully
/// specified, so sampled ensembles are reproducible bit-for-bit.
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01();

    /// Uniform in [0, bound) by rejection; no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    /// Standard normal via Box-Muller.
    double gaussian();

    /// Standard complex normal: E z = 0, E |z|^2 = 1.
    std::complex<double> complex_gaussian();

  private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace mtn

#endif
