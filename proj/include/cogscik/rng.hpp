// Copyright 2026 The cogscik authors
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

#ifndef COGSCIK_RNG_HPP
#define COGSCIK_RNG_HPP

#include <concepts>
#include <cstdint>
#include <random>

namespace cogscik {

/// Anything that yields uniform doubles in [0, 1). Tests substitute
/// scripted streams through this hook.
template <typename R>
concept RandomStream = requires(R r) {
  { r.next_double() } -> std::convertible_to<double>;
};

/// The reference random stream: std::mt19937_64 with a fixed 53-bit
/// mapping to doubles. The engine's sequence is pinned by the C++
/// standard, so equal seeds give bitwise-equal streams on every
/// platform. One double consumes exactly one engine step.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1), 53 significant bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform integer in [0, n). Consumes exactly one draw regardless of n.
template <RandomStream R>
std::int64_t uniform_below(R& rng, std::int64_t n) {
  auto v = static_cast<std::int64_t>(rng.next_double() * static_cast<double>(n));
  return v < n ? v : n - 1;
}

/// Decorrelated child seed for stream `index` under a master seed
/// (splitmix64 finalizer). Distinct indices give independent streams.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace cogscik

#endif  // COGSCIK_RNG_HPP
