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

#ifndef COGSCIK_TESTS_TEST_SUPPORT_HPP
#define COGSCIK_TESTS_TEST_SUPPORT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cogscik/catalog.hpp"
#include "cogscik/io_space.hpp"

namespace cogscik_test {

/// Replays a fixed list of unit-interval draws, so tests can force any
/// sampling outcome. Throws once the script runs dry.
class ScriptedRng {
 public:
  explicit ScriptedRng(std::vector<double> draws) : draws_(std::move(draws)) {}

  double next_double() {
    if (next_ >= draws_.size()) {
      throw std::out_of_range("scripted rng exhausted after " + std::to_string(next_) +
                              " draws");
    }
    return draws_[next_++];
  }

  std::size_t consumed() const { return next_; }

 private:
  std::vector<double> draws_;
  std::size_t next_ = 0;
};

/// A move whose classes are derived from the point, so the Move
/// invariant holds by construction.
inline cogscik::Move make_move(std::string name, std::string type, const cogscik::IOPoint& p) {
  const cogscik::IOVector io(p);
  return cogscik::Move{
      cogscik::MoveSpec{std::move(name), std::move(type), cogscik::classify_vector(io)}, io};
}

/// A move sitting at `value` on the warmth axis and 0 elsewhere.
inline cogscik::Move axis_move(std::string name, std::string type, double value) {
  return make_move(std::move(name), std::move(type), {value, 0.0, 0.0, 0.0, 0.0});
}

inline cogscik::Catalog make_catalog(std::vector<cogscik::Move> moves,
                                     std::uint64_t source_seed = 0) {
  return cogscik::Catalog{std::move(moves), source_seed};
}

}  // namespace cogscik_test

#endif  // COGSCIK_TESTS_TEST_SUPPORT_HPP
