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

// Walks two actors through a small synthetic move bank for a handful of
// timeticks and prints the full decision trace: each tick's cluster,
// the selected move, and the recentered position.

#include <iostream>

#include "cogscik/cogscik.hpp"

int main() {
  constexpr std::uint64_t kSeed = 2026;

  cogscik::Rng catalog_rng(cogscik::substream_seed(kSeed, cogscik::kCatalogStream));
  const auto specs = cogscik::generate_synthetic_catalog(40, catalog_rng);
  const auto catalog = cogscik::instantiate_catalog(specs, kSeed);

  cogscik::Rng init_rng(cogscik::substream_seed(kSeed, cogscik::kActorInitStream));
  const std::vector<cogscik::ActorSpec> actor_specs = {
      {"hawk", cogscik::class_vector_from_letters("AABBA"), std::nullopt},
      {"dove", cogscik::class_vector_from_letters("EEDDE"), std::nullopt},
  };
  auto actors = cogscik::resolve_actors(actor_specs, init_rng);

  cogscik::SimulationConfig config;
  config.k = 4;
  config.n_ticks = 3;
  config.seed = kSeed;
  config.exclude_used = true;
  config.policy = cogscik::Policy::nearest();

  const auto trace = cogscik::run(std::move(actors), catalog, config);
  std::cout << cogscik::format_trace(trace);

  std::cout << "Final positions:\n";
  for (const auto& record : trace.records) {
    if (record.tick != config.n_ticks) continue;
    std::cout << "  " << record.actor << " -> " << cogscik::format_io_values(record.new_centroid.io)
              << " via \"" << record.selected.spec.name << "\"\n";
  }
  return 0;
}
