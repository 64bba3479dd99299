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

#ifndef COGSCIK_KMEANS_HPP
#define COGSCIK_KMEANS_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cogscik/catalog.hpp"
#include "cogscik/io_space.hpp"
#include "cogscik/kernel.hpp"
#include "cogscik/rng.hpp"

namespace cogscik {

/// Output of one Lloyd run. Centroids are means of quantized move
/// vectors and are deliberately not quantized themselves. At
/// termination every move is assigned to its nearest centroid (distance
/// ties to the lowest centroid index). `iterations` counts update+
/// reassign rounds; wcss_history holds one entry per assignment pass
/// (iterations + 1 of them), non-increasing up to accumulation error.
struct KMeansResult {
  std::vector<IOPoint> centroids;
  std::vector<int> assignments;
  int iterations = 0;
  double wcss = 0.0;
  std::vector<double> wcss_history;
  bool converged = false;
};

namespace detail {

inline std::pair<int, double> nearest_centroid(const IOPoint& p,
                                               const std::vector<IOPoint>& centroids) {
  int best = 0;
  double best_d2 = squared_distance(p, centroids[0]);
  for (std::size_t j = 1; j < centroids.size(); ++j) {
    const double d2 = squared_distance(p, centroids[j]);
    if (d2 < best_d2) {
      best = static_cast<int>(j);
      best_d2 = d2;
    }
  }
  return {best, best_d2};
}

}  // namespace detail

/// Lloyd iteration over the catalog's move vectors. Initial centroids
/// are k distinct moves drawn uniformly without replacement; the loop
/// alternates assignment and mean update until assignments repeat or
/// max_iterations rounds have run. A cluster emptied by an update is
/// reseeded to the move farthest from that cluster's centroid.
template <RandomStream R>
KMeansResult kmeans(const Catalog& catalog, int k, R& rng, int max_iterations = 500) {
  const std::size_t n = catalog.moves.size();
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("k-means cluster count k=" + std::to_string(k) +
                                " out of range for " + std::to_string(n) + " moves");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }

  KMeansResult result;

  // Forgy init: partial Fisher-Yates, one draw per pick.
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  result.centroids.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, static_cast<std::int64_t>(n - i)));
    result.centroids.push_back(catalog.moves[pool[j]].io.values());
    std::swap(pool[j], pool[n - 1 - static_cast<std::size_t>(i)]);
  }

  std::vector<int> assignments(n, -1);
  const auto assign_all = [&]() {
    double wcss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [idx, d2] = detail::nearest_centroid(catalog.moves[i].io.values(), result.centroids);
      assignments[i] = idx;
      wcss += d2;
    }
    return wcss;
  };

  const auto update_centroids = [&]() {
    std::vector<IOPoint> sums(static_cast<std::size_t>(k), IOPoint{});
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    std::vector<std::size_t> first(static_cast<std::size_t>(k), n);
    std::vector<char> identical(static_cast<std::size_t>(k), 1);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(assignments[i]);
      for (int d = 0; d < kIODimensions; ++d) sums[c][d] += catalog.moves[i].io[d];
      ++counts[c];
      if (first[c] == n) {
        first[c] = i;
      } else if (catalog.moves[i].io != catalog.moves[first[c]].io) {
        identical[c] = 0;
      }
    }
    for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c) {
      if (counts[c] == 0) {
        // farthest move from the emptied centroid, lowest index on ties
        std::size_t far = 0;
        double far_d2 = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double d2 = squared_distance(catalog.moves[i].io.values(), result.centroids[c]);
          if (d2 > far_d2) {
            far = i;
            far_d2 = d2;
          }
        }
        result.centroids[c] = catalog.moves[far].io.values();
        continue;
      }
      // The mean of an identical set is that point. Taking it verbatim
      // dodges accumulation drift that would otherwise let a reseeded
      // exact point outbid its own cluster's mean forever.
      if (identical[c]) {
        result.centroids[c] = catalog.moves[first[c]].io.values();
        continue;
      }
      for (int d = 0; d < kIODimensions; ++d) {
        result.centroids[c][d] = sums[c][d] / static_cast<double>(counts[c]);
      }
    }
  };

  result.wcss_history.push_back(assign_all());
  std::vector<int> previous = assignments;
  for (int it = 1; it <= max_iterations; ++it) {
    update_centroids();
    result.wcss_history.push_back(assign_all());
    result.iterations = it;
    if (assignments == previous) {
      result.converged = true;
      break;
    }
    previous = assignments;
  }

  result.assignments = std::move(assignments);
  result.wcss = result.wcss_history.back();
  return result;
}

inline KMeansResult kmeans(const Catalog& catalog, int k, std::uint64_t seed,
                           int max_iterations = 500) {
  Rng rng(seed);
  return kmeans(catalog, k, rng, max_iterations);
}

/// Per-cluster modal move type. Modal ties go to the tied type whose
/// nearest-to-centroid member is closest (then lowest catalog index).
inline std::vector<std::string> cluster_type_summary(const KMeansResult& result,
                                                     const Catalog& catalog) {
  const auto k = result.centroids.size();
  std::vector<std::string> summary(k);
  for (std::size_t c = 0; c < k; ++c) {
    // (type, count, best distance to centroid) in first-seen order
    struct TypeStat {
      std::string_view type;
      int count = 0;
      double best_d2 = 0.0;
    };
    std::vector<TypeStat> stats;
    summary[c] = {};
    for (std::size_t i = 0; i < catalog.moves.size(); ++i) {
      if (result.assignments[i] != static_cast<int>(c)) continue;
      const double d2 = squared_distance(catalog.moves[i].io.values(), result.centroids[c]);
      const std::string_view type = catalog.moves[i].spec.move_type;
      auto it = std::find_if(stats.begin(), stats.end(),
                             [&](const TypeStat& s) { return s.type == type; });
      if (it == stats.end()) {
        stats.push_back(TypeStat{type, 1, d2});
      } else {
        ++it->count;
        it->best_d2 = std::min(it->best_d2, d2);
      }
    }
    if (stats.empty()) continue;  // unreachable after reseeding, except for degenerate data
    const auto best = std::max_element(
        stats.begin(), stats.end(), [](const TypeStat& a, const TypeStat& b) {
          if (a.count != b.count) return a.count < b.count;
          return a.best_d2 > b.best_d2;  // nearer member wins the tie
        });
    summary[c] = std::string(best->type);
  }
  return summary;
}

/// Within-cluster sum of squared distances, split by cluster index.
inline std::vector<double> per_cluster_wcss(const KMeansResult& result, const Catalog& catalog) {
  std::vector<double> wcss(result.centroids.size(), 0.0);
  for (std::size_t i = 0; i < catalog.moves.size(); ++i) {
    const auto c = static_cast<std::size_t>(result.assignments[i]);
    wcss[c] += squared_distance(catalog.moves[i].io.values(), result.centroids[c]);
  }
  return wcss;
}

}  // namespace cogscik

#endif  // COGSCIK_KMEANS_HPP
