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

#ifndef COGSCIK_CLUSTER_HPP
#define COGSCIK_CLUSTER_HPP

#include <algorithm>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cogscik/catalog.hpp"
#include "cogscik/io_space.hpp"
#include "cogscik/kernel.hpp"

namespace cogscik {

/// The fixed reference point a cluster forms around: an actor's IO
/// vector, or the most recently selected move's.
struct Centroid {
  IOVector io;
  std::string label;
};

struct ClusterMember {
  Move move;
  Distance distance = 0.0;
  int rank = 0;  // 1-based, increasing with non-decreasing distance
};

/// The k moves nearest a centroid, in rank order, plus the derived
/// primary type. The centroid itself is never part of the move set.
struct Cluster {
  Centroid centroid;
  std::vector<ClusterMember> members;
  int k = 0;
  std::string primary_type;
};

/// Most frequent move type among the members. Count ties go to the type
/// whose nearest member has the best rank; members must be in rank order.
inline std::string primary_type(std::span<const ClusterMember> members) {
  if (members.empty()) throw std::domain_error("primary type of an empty member list");
  // first-occurrence order settles count ties
  std::vector<std::pair<std::string_view, int>> counts;
  for (const auto& member : members) {
    auto it = std::find_if(counts.begin(), counts.end(),
                           [&](const auto& c) { return c.first == member.move.spec.move_type; });
    if (it == counts.end()) {
      counts.emplace_back(member.move.spec.move_type, 1);
    } else {
      ++it->second;
    }
  }
  const auto best = std::max_element(
      counts.begin(), counts.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  return std::string(best->first);
}

/// The k moves with smallest weighted distance to the centroid. Distance
/// ties break by position in `moves` (file order for a catalog).
inline Cluster build_cluster(const Centroid& centroid, std::span<const Move> moves, int k,
                             const WeightVector& weights) {
  if (k < 1 || static_cast<std::size_t>(k) > moves.size()) {
    throw std::invalid_argument("cluster size k=" + std::to_string(k) +
                                " out of range for " + std::to_string(moves.size()) + " moves");
  }
  std::vector<std::pair<Distance, std::size_t>> order;
  order.reserve(moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) {
    order.emplace_back(weighted_distance(centroid.io, moves[i].io, weights), i);
  }
  std::partial_sort(order.begin(), order.begin() + k, order.end());

  Cluster cluster;
  cluster.centroid = centroid;
  cluster.k = k;
  cluster.members.reserve(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    cluster.members.push_back(ClusterMember{moves[order[r].second], order[r].first, r + 1});
  }
  cluster.primary_type = primary_type(cluster.members);
  return cluster;
}

inline Cluster build_cluster(const Centroid& centroid, const Catalog& catalog, int k,
                             const WeightVector& weights) {
  return build_cluster(centroid, std::span<const Move>(catalog.moves), k, weights);
}

/// Five IO values at 8 decimal places, space separated in brackets.
inline std::string format_io_values(const IOVector& v) {
  std::string out = "[";
  char buf[32];
  for (int i = 0; i < kIODimensions; ++i) {
    std::snprintf(buf, sizeof(buf), "%.8f", v[i]);
    if (i > 0) out += ' ';
    out += buf;
  }
  out += ']';
  return out;
}

/// The cluster report, pinned byte for byte:
///
///   Cluster Primary Type: {type}
///   <tab>Cluster Size: {k}
///   <tab>Centroid IO: [{v0} {v1} {v2} {v3} {v4}]
///   <blank>
/// then per member, in rank order:
///   Move: {name}
///   Move Type: {type}
///   <blank>
inline std::string format_cluster_report(const Cluster& cluster) {
  std::string out;
  out += "Cluster Primary Type: " + cluster.primary_type + "\n";
  out += "\tCluster Size: " + std::to_string(cluster.k) + "\n";
  out += "\tCentroid IO: " + format_io_values(cluster.centroid.io) + "\n\n";
  for (const auto& member : cluster.members) {
    out += "Move: " + member.move.spec.name + "\n";
    out += "Move Type: " + member.move.spec.move_type + "\n\n";
  }
  return out;
}

}  // namespace cogscik

#endif  // COGSCIK_CLUSTER_HPP
