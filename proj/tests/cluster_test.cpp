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

#include "cogscik/cluster.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "cogscik/catalog.hpp"
#include "cogscik/io_space.hpp"
#include "cogscik/kernel.hpp"
#include "cogscik/rng.hpp"
#include "report_io.hpp"
#include "test_support.hpp"

namespace cogscik {
namespace {

using cogscik_test::axis_move;
using cogscik_test::make_catalog;
using cogscik_test::make_move;
using cogscik_test::parse_cluster_report;

std::vector<ClusterMember> members_of_types(const std::vector<std::string>& types) {
  std::vector<ClusterMember> members;
  for (std::size_t i = 0; i < types.size(); ++i) {
    members.push_back(ClusterMember{
        axis_move("m" + std::to_string(i + 1), types[i], 0.0), 0.1 * static_cast<double>(i),
        static_cast<int>(i) + 1});
  }
  return members;
}

// Independent oracle: rank every move by (distance, position) with a
// full stable sort and take the first k.
std::vector<std::size_t> brute_force_top_k(const IOVector& centroid,
                                           const std::vector<Move>& moves, int k,
                                           const WeightVector& weights) {
  std::vector<std::size_t> order(moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weighted_distance(centroid, moves[a].io, weights) <
           weighted_distance(centroid, moves[b].io, weights);
  });
  order.resize(static_cast<std::size_t>(k));
  return order;
}

// The ten member types of a published example cluster, in rank order;
// the mode is Reject.
TEST(PrimaryType, ModeOfExampleListing) {
  const auto members = members_of_types(
      {"Disapprove", "Disapprove", "Refuse to build infrastructure", "Assault", "Reject",
       "Appeal", "Control information", "Make a public statement", "Reject", "Reject"});
  EXPECT_EQ(primary_type(members), "Reject");
}

TEST(PrimaryType, SingleMember) {
  EXPECT_EQ(primary_type(members_of_types({"Yield"})), "Yield");
}

TEST(PrimaryType, CountTieGoesToBestRankedType) {
  EXPECT_EQ(primary_type(members_of_types({"X", "Y"})), "X");
  // Y holds ranks 1 and 3, X holds 2 and 4; the tie goes to Y.
  EXPECT_EQ(primary_type(members_of_types({"Y", "X", "Y", "X"})), "Y");
}

TEST(PrimaryType, EmptyListIsAnError) {
  EXPECT_THROW(primary_type({}), std::domain_error);
}

TEST(BuildCluster, SingleMoveCatalog) {
  const Catalog catalog = make_catalog({axis_move("only", "Reject", 0.4)});
  const Centroid centroid{IOVector({0, 0, 0, 0, 0}), "actor"};
  const Cluster cluster = build_cluster(centroid, catalog, 1, WeightVector::uniform());
  ASSERT_EQ(cluster.members.size(), 1u);
  EXPECT_EQ(cluster.members[0].move.spec.name, "only");
  EXPECT_EQ(cluster.members[0].rank, 1);
  EXPECT_DOUBLE_EQ(cluster.members[0].distance, 0.4);
  EXPECT_EQ(cluster.primary_type, "Reject");
  EXPECT_EQ(cluster.k, 1);
}

TEST(BuildCluster, ToyCatalogAgainstExhaustiveSort) {
  const Catalog catalog = make_catalog({
      make_move("m1", "Reject", {0.5, 0.1, 0.0, 0.0, 0.0}),
      make_move("m2", "Appeal", {-0.3, 0.2, 0.1, 0.0, 0.0}),
      make_move("m3", "Yield", {0.05, 0.0, -0.05, 0.0, 0.1}),
      make_move("m4", "Assault", {0.9, -0.8, 0.7, -0.6, 0.5}),
      make_move("m5", "Demand", {0.0, 0.0, 0.2, 0.0, 0.0}),
  });
  const Centroid centroid{IOVector({0, 0, 0, 0, 0}), "actor"};
  const Cluster cluster = build_cluster(centroid, catalog, 2, WeightVector::uniform());
  const auto expected = brute_force_top_k(centroid.io, catalog.moves, 2, WeightVector::uniform());
  ASSERT_EQ(cluster.members.size(), 2u);
  EXPECT_EQ(cluster.members[0].move.spec.name, catalog.moves[expected[0]].spec.name);
  EXPECT_EQ(cluster.members[1].move.spec.name, catalog.moves[expected[1]].spec.name);
  // By hand: m3 at distance sqrt(.0125), m5 at 0.2.
  EXPECT_EQ(cluster.members[0].move.spec.name, "m3");
  EXPECT_EQ(cluster.members[1].move.spec.name, "m5");
}

TEST(BuildCluster, RejectsKOutOfRange) {
  const Catalog catalog = make_catalog({axis_move("a", "T", 0.1), axis_move("b", "T", 0.2)});
  const Centroid centroid{IOVector({0, 0, 0, 0, 0}), "actor"};
  EXPECT_THROW(build_cluster(centroid, catalog, 0, WeightVector::uniform()),
               std::invalid_argument);
  EXPECT_THROW(build_cluster(centroid, catalog, 3, WeightVector::uniform()),
               std::invalid_argument);
  EXPECT_THROW(build_cluster(centroid, catalog, -1, WeightVector::uniform()),
               std::invalid_argument);
}

// Equidistant moves resolve by file order, so permuting the catalog
// flips the winner predictably.
TEST(BuildCluster, DistanceTiesBreakByCatalogOrder) {
  const Move left = axis_move("left", "L", -0.3);
  const Move right = axis_move("right", "R", 0.3);
  const Centroid centroid{IOVector({0, 0, 0, 0, 0}), "actor"};

  const Cluster first = build_cluster(centroid, make_catalog({left, right}), 1,
                                      WeightVector::uniform());
  EXPECT_EQ(first.members[0].move.spec.name, "left");

  const Cluster swapped = build_cluster(centroid, make_catalog({right, left}), 1,
                                        WeightVector::uniform());
  EXPECT_EQ(swapped.members[0].move.spec.name, "right");
}

TEST(BuildCluster, RanksIncreaseWithNonDecreasingDistance) {
  Rng rng(404);
  const auto specs = generate_synthetic_catalog(120, rng);
  const Catalog catalog = instantiate_catalog(specs, 404);
  Rng actor_rng(405);
  const Centroid centroid{sample_io(class_vector_from_letters("CBDAE"), actor_rng), "actor"};
  const Cluster cluster = build_cluster(centroid, catalog, 25, WeightVector::uniform());
  for (std::size_t i = 0; i < cluster.members.size(); ++i) {
    EXPECT_EQ(cluster.members[i].rank, static_cast<int>(i) + 1);
    if (i > 0) {
      EXPECT_GE(cluster.members[i].distance, cluster.members[i - 1].distance);
    }
  }
}

TEST(BuildCluster, MatchesBruteForceOnRandomCatalogs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed * 3 + 1);
    const int n = 20 + static_cast<int>(uniform_below(rng, 355));
    const auto specs = generate_synthetic_catalog(n, rng);
    Rng inst_rng(seed * 3 + 2);
    const Catalog catalog = instantiate_catalog(specs, inst_rng, seed);
    Rng actor_rng(seed * 3 + 3);
    IOClassVector classes{};
    for (auto& c : classes) c = static_cast<IOClass>(uniform_below(actor_rng, kIOClassCount));
    const Centroid centroid{sample_io(classes, actor_rng), "actor"};
    const int k = 1 + static_cast<int>(uniform_below(actor_rng, 15));

    const Cluster cluster = build_cluster(centroid, catalog, k, WeightVector::uniform());
    const auto expected =
        brute_force_top_k(centroid.io, catalog.moves, k, WeightVector::uniform());
    ASSERT_EQ(cluster.members.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      ASSERT_EQ(cluster.members[i].move.spec.name, catalog.moves[expected[i]].spec.name)
          << "seed " << seed << " rank " << i + 1;
    }
  }
}

TEST(BuildCluster, NonMembersAreNoCloserThanTheKthMember) {
  Rng rng(77);
  const auto specs = generate_synthetic_catalog(200, rng);
  const Catalog catalog = instantiate_catalog(specs, 78);
  Rng actor_rng(79);
  const Centroid centroid{sample_io(class_vector_from_letters("DDCBA"), actor_rng), "actor"};
  const Cluster cluster = build_cluster(centroid, catalog, 10, WeightVector::uniform());

  std::vector<std::string> member_names;
  for (const auto& m : cluster.members) member_names.push_back(m.move.spec.name);
  const Distance kth = cluster.members.back().distance;
  for (const auto& move : catalog.moves) {
    if (std::find(member_names.begin(), member_names.end(), move.spec.name) !=
        member_names.end()) {
      continue;
    }
    EXPECT_GE(euclidean_distance(centroid.io, move.io), kth);
  }
}

TEST(BuildCluster, WeightsReorderTheNeighborhood) {
  const Catalog catalog = make_catalog({
      make_move("warmth-close", "W", {0.05, 0.5, 0.0, 0.0, 0.0}),
      make_move("overall-close", "O", {0.3, 0.1, 0.0, 0.0, 0.0}),
  });
  const Centroid centroid{IOVector({0, 0, 0, 0, 0}), "actor"};
  const Cluster uniform = build_cluster(centroid, catalog, 1, WeightVector::uniform());
  EXPECT_EQ(uniform.members[0].move.spec.name, "overall-close");
  const Cluster warmth_heavy =
      build_cluster(centroid, catalog, 1, WeightVector({100, 1, 1, 1, 1}));
  EXPECT_EQ(warmth_heavy.members[0].move.spec.name, "warmth-close");
}

TEST(FormatClusterReport, ExactBytes) {
  Cluster cluster;
  cluster.centroid = Centroid{IOVector({-0.64693745, -0.44900883, -0.07025932, 0.42156327,
                                        0.68451422}),
                              "actor"};
  cluster.k = 2;
  cluster.members = {
      ClusterMember{axis_move("Reject economic cooperation", "Reject", 0.1), 0.1, 1},
      ClusterMember{axis_move("Appeal to yield", "Appeal", 0.2), 0.2, 2},
  };
  cluster.primary_type = primary_type(cluster.members);

  EXPECT_EQ(format_cluster_report(cluster),
            "Cluster Primary Type: Reject\n"
            "\tCluster Size: 2\n"
            "\tCentroid IO: [-0.64693745 -0.44900883 -0.07025932 0.42156327 0.68451422]\n"
            "\n"
            "Move: Reject economic cooperation\n"
            "Move Type: Reject\n"
            "\n"
            "Move: Appeal to yield\n"
            "Move Type: Appeal\n"
            "\n");
}

TEST(FormatIoValues, FixedWidthAndSigns) {
  EXPECT_EQ(format_io_values(IOVector({0, -1, 1, 0.5, -0.00000001})),
            "[0.00000000 -1.00000000 1.00000000 0.50000000 -0.00000001]");
}

TEST(FormatClusterReport, RoundTripsThroughTheReader) {
  Rng rng(31415);
  const auto specs = generate_synthetic_catalog(80, rng);
  const Catalog catalog = instantiate_catalog(specs, 31415);
  Rng actor_rng(31416);
  const Centroid centroid{sample_io(class_vector_from_letters("ABCDE"), actor_rng), "actor"};
  const Cluster cluster = build_cluster(centroid, catalog, 10, WeightVector::uniform());

  const auto parsed = parse_cluster_report(format_cluster_report(cluster));
  EXPECT_EQ(parsed.primary_type, cluster.primary_type);
  EXPECT_EQ(parsed.k, cluster.k);
  for (int i = 0; i < kIODimensions; ++i) {
    EXPECT_EQ(parsed.centroid[static_cast<std::size_t>(i)], cluster.centroid.io[i]);
  }
  ASSERT_EQ(parsed.members.size(), cluster.members.size());
  for (std::size_t i = 0; i < parsed.members.size(); ++i) {
    EXPECT_EQ(parsed.members[i].first, cluster.members[i].move.spec.name);
    EXPECT_EQ(parsed.members[i].second, cluster.members[i].move.spec.move_type);
  }
}

}  // namespace
}  // namespace cogscik
