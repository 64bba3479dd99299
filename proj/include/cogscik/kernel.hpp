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

#ifndef COGSCIK_KERNEL_HPP
#define COGSCIK_KERNEL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "cogscik/io_space.hpp"

namespace cogscik {

/// Per-dimension importance weights. Strictly positive and finite;
/// zero or negative weights are rejected rather than clamped.
class WeightVector {
 public:
  WeightVector() : weights_{1.0, 1.0, 1.0, 1.0, 1.0} {}

  explicit WeightVector(const IOPoint& weights) : weights_(weights) {
    for (int i = 0; i < kIODimensions; ++i) {
      if (!(std::isfinite(weights_[i]) && weights_[i] > 0.0)) {
        throw std::invalid_argument(std::string(kIODimensionNames[i]) +
                                    " weight must be finite and > 0, got " +
                                    std::to_string(weights_[i]));
      }
    }
  }

  static WeightVector uniform() { return WeightVector(); }

  double operator[](int i) const { return weights_[i]; }
  const IOPoint& values() const { return weights_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  IOPoint weights_;
};

using Distance = double;

// Summation runs in dimension order 0..4 with no re-association, so equal
// inputs give bitwise-equal distances across runs.

inline double squared_distance(const IOPoint& a, const IOPoint& b) {
  double sum = 0.0;
  for (int i = 0; i < kIODimensions; ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

/// L2 distance: sqrt of the summed squared componentwise differences.
inline Distance euclidean_distance(const IOVector& a, const IOVector& b) {
  return std::sqrt(squared_distance(a.values(), b.values()));
}

/// Weighted L2: sqrt(sum_i w_i * (a_i - b_i)^2). Uniform weights
/// reproduce euclidean_distance bitwise.
inline Distance weighted_distance(const IOVector& a, const IOVector& b,
                                  const WeightVector& w) {
  double sum = 0.0;
  for (int i = 0; i < kIODimensions; ++i) {
    const double d = a[i] - b[i];
    sum += w[i] * (d * d);
  }
  return std::sqrt(sum);
}

}  // namespace cogscik

#endif  // COGSCIK_KERNEL_HPP
