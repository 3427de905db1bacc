// Copyright 2026 The famcg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAMCG_RANDOM_H_
#define FAMCG_RANDOM_H_

#include <array>
#include <cstdint>

namespace famcg {

// xoshiro256** seeded through splitmix64 (Blackman & Vigna reference
// algorithms). Everything derived from it is specified bit-for-bit here so
// that generated instances do not depend on the standard library's
// distributions, which are implementation defined.
class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed);
  // Raw state, for checking against published output vectors.
  explicit Xoshiro256(const std::array<uint64_t, 4>& state) : state_(state) {}

  uint64_t Next();

  // Uniform double in [0, 1) built from the top 53 bits.
  double UniformDouble();

  // Uniform integer in [0, bound). Uses rejection on the 64-bit output, so
  // there is no modulo bias. bound must be > 0.
  uint64_t UniformBelow(uint64_t bound);

 private:
  std::array<uint64_t, 4> state_;
};

// One step of splitmix64; exposed for tests against the reference sequence.
uint64_t SplitMix64(uint64_t& state);

}  // namespace famcg

#endif  // FAMCG_RANDOM_H_
