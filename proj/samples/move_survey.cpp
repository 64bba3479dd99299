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

// Surveys a full-size synthetic move bank two ways: a one-shot
// actor-centered cluster, then the K-means baseline over the same
// moves, showing how the two cluster notions differ.

#include <cstdio>
#include <iostream>

#include "cogscik/cogscik.hpp"

int main() {
  constexpr std::uint64_t kSeed = 7;
  constexpr int kBankSize = 374;

  cogscik::Rng catalog_rng(cogscik::substream_seed(kSeed, cogscik::kCatalogStream));
  const auto specs = cogscik::generate_synthetic_catalog(kBankSize, catalog_rng);
  const auto catalog = cogscik::instantiate_catalog(specs, kSeed);

  cogscik::Rng init_rng(cogscik::substream_seed(kSeed, cogscik::kActorInitStream));
  const auto actor_io = cogscik::sample_io(cogscik::class_vector_from_letters("ABCDE"), init_rng);
  const auto cluster = cogscik::build_cluster(cogscik::Centroid{actor_io, "survey-actor"}, catalog,
                                              10, cogscik::WeightVector::uniform());
  std::cout << "Actor-centered cluster:\n" << cogscik::format_cluster_report(cluster);

  const auto result = cogscik::kmeans(catalog, 5, init_rng);
  const auto types = cogscik::cluster_type_summary(result, catalog);
  const auto wcss = cogscik::per_cluster_wcss(result, catalog);
  std::vector<int> sizes(result.centroids.size(), 0);
  for (const int a : result.assignments) ++sizes[static_cast<std::size_t>(a)];

  std::cout << "K-means baseline (" << result.iterations << " iterations, total WCSS ";
  std::printf("%.6f", result.wcss);
  std::cout << "):\n";
  for (std::size_t c = 0; c < result.centroids.size(); ++c) {
    std::cout << "  cluster " << c << ": size " << sizes[c] << ", modal type \"" << types[c]
              << "\", WCSS ";
    std::printf("%.6f\n", wcss[c]);
  }
  return 0;
}
