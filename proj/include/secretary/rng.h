// Copyright 2026 The Secretary Authors.
//
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

#ifndef SECRETARY_RNG_H_
#define SECRETARY_RNG_H_

#include <cstdint>

namespace secretary {

// Splitmix64 finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

// Counter-based generator. Every draw is a pure function of
// (seed, stream, counter), so any element of any trial can be drawn in any
// order, on any thread, and always gives the same number.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t bits(std::uint64_t counter) const;
  // Uniform on [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const;

  // Counter used for per-element draws. A non-zero attempt is only used to
  // redraw after a zero-probability tie.
  static std::uint64_t element_counter(std::uint64_t element,
                                      std::uint32_t attempt = 0) {
    return element ^ (static_cast<std::uint64_t>(attempt) << 48);
  }

 private:
  std::uint64_t key_;
};

// Stream reserved for drawing instance values, disjoint from trial streams
// in any realistic run.
inline constexpr std::uint64_t kInstanceStream = ~std::uint64_t{0} - 1;

}  // namespace secretary

#endif  // SECRETARY_RNG_H_
