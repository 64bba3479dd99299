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

#ifndef COGSCIK_SIMULATION_HPP
#define COGSCIK_SIMULATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cogscik/catalog.hpp"
#include "cogscik/cluster.hpp"
#include "cogscik/io_space.hpp"
#include "cogscik/kernel.hpp"
#include "cogscik/rng.hpp"

namespace cogscik {

/// A strategic actor is computationally just a named, moving centroid.
struct Actor {
  std::string name;
  Centroid current_centroid;
};

enum class PolicyKind { kNearest, kRandom, kScripted };

/// Move-selection rule applied to each tick's cluster. Random consumes
/// exactly one draw per step. Scripted supplies a 1-based rank per tick
/// (the same rank for every actor that tick), for tests and replay.
struct Policy {
  PolicyKind kind = PolicyKind::kNearest;
  std::vector<int> scripted_ranks;

  static Policy nearest() { return {}; }
  static Policy random() { return {PolicyKind::kRandom, {}}; }
  static Policy scripted(std::vector<int> ranks) {
    return {PolicyKind::kScripted, std::move(ranks)};
  }
};

struct SimulationConfig {
  int k = 1;
  int n_ticks = 0;
  std::uint64_t seed = 0;
  WeightVector weights;
  bool exclude_used = false;
  Policy policy;
};

/// One actor-tick: the cluster it saw, the move it picked, and the
/// centroid it recentered on (always the selected move's IO vector).
struct TickRecord {
  int tick = 0;
  std::string actor;
  Cluster cluster;
  Move selected;
  Centroid new_centroid;
};

/// Full run record: tick-major, actors in configuration order within a
/// tick, so |records| == n_ticks * |actors|.
struct Trace {
  std::vector<TickRecord> records;
  SimulationConfig config;
  std::uint64_t catalog_seed = 0;
};

/// An actor ran out of eligible moves (fewer than k remained).
class ExhaustionError : public std::runtime_error {
 public:
  ExhaustionError(int tick, std::string actor, std::size_t eligible, int k)
      : std::runtime_error("tick " + std::to_string(tick) + ": actor \"" + actor +
                           "\" has " + std::to_string(eligible) +
                           " eligible moves, needs k=" + std::to_string(k)),
        tick_(tick),
        actor_(std::move(actor)) {}

  int tick() const { return tick_; }
  const std::string& actor() const { return actor_; }

 private:
  int tick_;
  std::string actor_;
};

// CLI substream layout under the master seed. run() derives per-actor
// policy streams as kPolicyStreamBase + actor index.
inline constexpr std::uint64_t kCatalogStream = 0;
inline constexpr std::uint64_t kActorInitStream = 1;
inline constexpr std::uint64_t kPolicyStreamBase = 2;

/// One decision step: cluster the eligible moves around the actor's
/// centroid, pick a member by policy, recenter the actor on it.
/// `used` holds move names this actor may no longer pick (honored only
/// when config.exclude_used is set).
template <RandomStream R>
TickRecord step(Actor& actor, int tick, const Catalog& catalog, const SimulationConfig& config,
                const std::unordered_set<std::string>& used, R& rng) {
  std::vector<Move> filtered;
  std::span<const Move> eligible(catalog.moves);
  if (config.exclude_used && !used.empty()) {
    filtered.reserve(catalog.moves.size());
    for (const auto& move : catalog.moves) {
      if (!used.contains(move.spec.name)) filtered.push_back(move);
    }
    eligible = filtered;
  }
  if (eligible.size() < static_cast<std::size_t>(config.k)) {
    throw ExhaustionError(tick, actor.name, eligible.size(), config.k);
  }

  Cluster cluster = build_cluster(actor.current_centroid, eligible, config.k, config.weights);

  int rank = 1;
  switch (config.policy.kind) {
    case PolicyKind::kNearest:
      break;
    case PolicyKind::kRandom:
      rank = 1 + static_cast<int>(uniform_below(rng, config.k));
      break;
    case PolicyKind::kScripted: {
      const auto& ranks = config.policy.scripted_ranks;
      if (tick < 1 || static_cast<std::size_t>(tick) > ranks.size()) {
        throw std::invalid_argument("scripted policy has no rank for tick " +
                                    std::to_string(tick));
      }
      rank = ranks[static_cast<std::size_t>(tick) - 1];
      if (rank < 1 || rank > config.k) {
        throw std::invalid_argument("scripted rank " + std::to_string(rank) +
                                    " out of range at tick " + std::to_string(tick));
      }
      break;
    }
  }

  Move selected = cluster.members[static_cast<std::size_t>(rank) - 1].move;
  Centroid next{selected.io, selected.spec.name};
  actor.current_centroid = next;

  TickRecord record;
  record.tick = tick;
  record.actor = actor.name;
  record.cluster = std::move(cluster);
  record.selected = std::move(selected);
  record.new_centroid = std::move(next);
  return record;
}

/// Run every actor for n_ticks. Actors step independently: per-actor
/// used sets (one actor's picks never block another's) and per-actor
/// policy streams derived from config.seed and the actor's index, so a
/// trace is fully determined by (catalog, actors, config).
inline Trace run(std::vector<Actor> actors, const Catalog& catalog,
                 const SimulationConfig& config) {
  if (actors.empty()) throw std::domain_error("simulation needs at least one actor");
  if (config.n_ticks < 0) throw std::invalid_argument("n_ticks must be >= 0");
  if (config.k < 1) throw std::invalid_argument("cluster size k must be >= 1");
  {
    std::unordered_set<std::string_view> names;
    for (const auto& actor : actors) {
      if (!names.insert(actor.name).second) {
        throw std::invalid_argument("duplicate actor name \"" + actor.name + "\"");
      }
    }
  }
  if (config.policy.kind == PolicyKind::kScripted &&
      config.policy.scripted_ranks.size() < static_cast<std::size_t>(config.n_ticks)) {
    throw std::invalid_argument("scripted policy supplies " +
                                std::to_string(config.policy.scripted_ranks.size()) +
                                " ranks for " + std::to_string(config.n_ticks) + " ticks");
  }

  std::vector<Rng> policy_streams;
  policy_streams.reserve(actors.size());
  for (std::size_t i = 0; i < actors.size(); ++i) {
    policy_streams.emplace_back(substream_seed(config.seed, kPolicyStreamBase + i));
  }
  std::vector<std::unordered_set<std::string>> used(actors.size());

  Trace trace;
  trace.config = config;
  trace.catalog_seed = catalog.source_seed;
  trace.records.reserve(static_cast<std::size_t>(config.n_ticks) * actors.size());
  for (int tick = 1; tick <= config.n_ticks; ++tick) {
    for (std::size_t a = 0; a < actors.size(); ++a) {
      TickRecord record = step(actors[a], tick, catalog, config, used[a], policy_streams[a]);
      if (config.exclude_used) used[a].insert(record.selected.spec.name);
      trace.records.push_back(std::move(record));
    }
  }
  return trace;
}

/// Trace text: per record, a "Tick {t} Actor {name}" line, the cluster
/// report, a "Selected: {move}" line, then a blank line.
inline std::string format_trace(const Trace& trace) {
  std::string out;
  for (const auto& record : trace.records) {
    out += "Tick " + std::to_string(record.tick) + " Actor " + record.actor + "\n";
    out += format_cluster_report(record.cluster);
    out += "Selected: " + record.selected.spec.name + "\n\n";
  }
  return out;
}

/// An actor file record: a name plus either class letters (IO sampled
/// at resolve time) or an explicit IO vector.
struct ActorSpec {
  std::string name;
  std::optional<IOClassVector> classes;
  std::optional<IOVector> io;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline IOVector parse_io_values(std::string_view text, std::size_t line_no) {
  std::string normalized(text);
  for (auto& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  IOPoint p{};
  for (int i = 0; i < kIODimensions; ++i) {
    if (!(in >> p[i])) {
      throw CatalogParseError(line_no, "io needs 5 decimal values");
    }
  }
  std::string rest;
  if (in >> rest) throw CatalogParseError(line_no, "io needs exactly 5 decimal values");
  try {
    return IOVector(p);
  } catch (const std::domain_error& e) {
    throw CatalogParseError(line_no, e.what());
  }
}

}  // namespace detail

/// Actor file: line-oriented `key: value` records. An `actor:` line
/// opens a record; exactly one of `classes:` (5 letters) or `io:`
/// (5 decimals, comma or space separated) must follow it. Blank lines
/// and lines starting with '#' are ignored.
inline std::vector<ActorSpec> parse_actors(std::string_view text) {
  std::vector<ActorSpec> specs;
  std::unordered_set<std::string> names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  const auto finish_record = [&](const ActorSpec& spec, std::size_t at_line) {
    if (spec.classes.has_value() == spec.io.has_value()) {
      throw CatalogParseError(at_line, "actor \"" + spec.name +
                                           "\" needs exactly one of classes or io");
    }
  };
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw CatalogParseError(line_no, "expected key: value");
    }
    const std::string_view key = detail::trim(line.substr(0, colon));
    const std::string_view value = detail::trim(line.substr(colon + 1));
    if (key == "actor") {
      if (!specs.empty()) finish_record(specs.back(), line_no - 1);
      if (value.empty()) throw CatalogParseError(line_no, "empty actor name");
      if (!names.insert(std::string(value)).second) {
        throw CatalogParseError(line_no, "duplicate actor name \"" + std::string(value) + "\"");
      }
      specs.push_back(ActorSpec{std::string(value), std::nullopt, std::nullopt});
    } else if (key == "classes") {
      if (specs.empty()) throw CatalogParseError(line_no, "classes before any actor");
      try {
        specs.back().classes = class_vector_from_letters(value);
      } catch (const std::invalid_argument& e) {
        throw CatalogParseError(line_no, e.what());
      }
    } else if (key == "io") {
      if (specs.empty()) throw CatalogParseError(line_no, "io before any actor");
      specs.back().io = detail::parse_io_values(value, line_no);
    } else {
      throw CatalogParseError(line_no, "unknown key \"" + std::string(key) + "\"");
    }
  }
  if (!specs.empty()) finish_record(specs.back(), line_no);
  return specs;
}

/// Turn actor specs into live actors, sampling IO vectors for
/// class-specified actors from `rng` in file order.
template <RandomStream R>
std::vector<Actor> resolve_actors(std::span<const ActorSpec> specs, R& rng) {
  std::vector<Actor> actors;
  actors.reserve(specs.size());
  for (const auto& spec : specs) {
    const IOVector io = spec.io.has_value() ? *spec.io : sample_io(*spec.classes, rng);
    actors.push_back(Actor{spec.name, Centroid{io, spec.name}});
  }
  return actors;
}

}  // namespace cogscik

#endif  // COGSCIK_SIMULATION_HPP
