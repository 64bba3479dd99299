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

#ifndef COGSCIK_IO_SPACE_HPP
#define COGSCIK_IO_SPACE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cogscik/rng.hpp"

namespace cogscik {

inline constexpr int kIODimensions = 5;

/// The five intersubjective-orientation axes, in canonical order.
enum class IODimension : int {
  kWarmth = 0,
  kAffinity,
  kLegitimacy,
  kDominance,
  kCompetence,
};

inline constexpr std::array<std::string_view, kIODimensions> kIODimensionNames = {
    "warmth", "affinity", "legitimacy", "dominance", "competence"};

/// Letter bands tiling [-1, 1]: A..D are half-open [lower, upper),
/// E is closed at the top so 1.0 has a home.
enum class IOClass : int { A = 0, B, C, D, E };

inline constexpr int kIOClassCount = 5;

inline char io_class_letter(IOClass c) {
  return static_cast<char>('A' + static_cast<int>(c));
}

inline IOClass io_class_from_letter(char letter) {
  if (letter < 'A' || letter > 'E') {
    throw std::invalid_argument(std::string("unknown IO class letter '") + letter + "'");
  }
  return static_cast<IOClass>(letter - 'A');
}

using IOClassVector = std::array<IOClass, kIODimensions>;

inline IOClassVector class_vector_from_letters(std::string_view letters) {
  if (letters.size() != kIODimensions) {
    throw std::invalid_argument("class vector needs exactly 5 letters, got \"" +
                                std::string(letters) + "\"");
  }
  IOClassVector out{};
  for (int i = 0; i < kIODimensions; ++i) out[i] = io_class_from_letter(letters[i]);
  return out;
}

inline std::string letters_from_class_vector(const IOClassVector& classes) {
  std::string out(kIODimensions, ' ');
  for (int i = 0; i < kIODimensions; ++i) out[i] = io_class_letter(classes[i]);
  return out;
}

struct IOClassBounds {
  double lower;
  double upper;
  bool upper_closed;

  bool contains(double v) const {
    return v >= lower && (upper_closed ? v <= upper : v < upper);
  }
};

inline constexpr IOClassBounds bounds_of(IOClass c) {
  switch (c) {
    case IOClass::A: return {-1.0, -0.6, false};
    case IOClass::B: return {-0.6, -0.2, false};
    case IOClass::C: return {-0.2, 0.2, false};
    case IOClass::D: return {0.2, 0.6, false};
    case IOClass::E: return {0.6, 1.0, true};
  }
  throw std::invalid_argument("unknown IO class");
}

/// Band lookup for a value in [-1, 1]. Total: every in-range value has
/// exactly one class.
inline IOClass classify(double value) {
  if (!(value >= -1.0 && value <= 1.0)) {
    throw std::domain_error("IO value outside [-1, 1]: " + std::to_string(value));
  }
  static constexpr std::array<double, 4> edges = {-0.6, -0.2, 0.2, 0.6};
  int idx = 0;
  while (idx < 4 && value >= edges[idx]) ++idx;
  return static_cast<IOClass>(idx);
}

/// Raw 5-tuple of working values (no range or quantization guarantee).
using IOPoint = std::array<double, kIODimensions>;

inline constexpr std::int64_t kQuantGridScale = 100000000;  // 10^8

/// Round to 8 decimal places, ties to even; -0 is normalized to +0.
/// Idempotent on its own output.
inline double quantize8(double v) {
  return std::nearbyint(v * static_cast<double>(kQuantGridScale)) /
             static_cast<double>(kQuantGridScale) +
         0.0;
}

/// A point in IO space: five values in [-1, 1], each quantized to
/// 8 decimal places. Equality is componentwise and exact.
class IOVector {
 public:
  IOVector() : values_{} {}

  explicit IOVector(const IOPoint& raw) {
    for (int i = 0; i < kIODimensions; ++i) {
      if (!(raw[i] >= -1.0 && raw[i] <= 1.0)) {
        throw std::domain_error(std::string(kIODimensionNames[i]) +
                                " value outside [-1, 1]: " + std::to_string(raw[i]));
      }
      values_[i] = quantize8(raw[i]);
    }
  }

  double operator[](int i) const { return values_[i]; }
  double operator[](IODimension d) const { return values_[static_cast<int>(d)]; }
  const IOPoint& values() const { return values_; }

  friend bool operator==(const IOVector&, const IOVector&) = default;

 private:
  IOPoint values_;
};

namespace detail {

inline constexpr std::int64_t band_lower_units(IOClass c) {
  return -kQuantGridScale + static_cast<std::int64_t>(c) * 40000000;
}

// E keeps its upper endpoint, so its grid has one extra point.
inline constexpr std::int64_t band_unit_count(IOClass c) {
  return c == IOClass::E ? 40000001 : 40000000;
}

}  // namespace detail

/// Uniform draw from each dimension's class band, directly on the
/// 8-decimal grid. Consumes exactly five draws, in dimension order
/// Warmth..Competence. The result always classifies back to `classes`.
template <RandomStream R>
IOVector sample_io(const IOClassVector& classes, R& rng) {
  IOPoint p{};
  for (int i = 0; i < kIODimensions; ++i) {
    const std::int64_t m = uniform_below(rng, detail::band_unit_count(classes[i]));
    p[i] = static_cast<double>(detail::band_lower_units(classes[i]) + m) /
           static_cast<double>(kQuantGridScale);
  }
  return IOVector(p);
}

inline IOClassVector classify_vector(const IOVector& v) {
  IOClassVector out{};
  for (int i = 0; i < kIODimensions; ++i) out[i] = classify(v[i]);
  return out;
}

}  // namespace cogscik

#endif  // COGSCIK_IO_SPACE_HPP
