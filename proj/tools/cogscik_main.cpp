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

// cogscik command line: gen / cluster / run / kmeans / validate.
//
// Exit codes: 0 success, 2 usage or parse error, 3 the simulation ran
// out of eligible moves, 4 catalog validation found violations.
//
// Every subcommand takes a master seed (default 0, echoed to standard
// error) and derives fixed substreams from it: stream 0 drives
// catalog-side randomness (synthetic spec generation in `gen`, IO
// instantiation everywhere else), stream 1 drives initialization
// (actor IO sampling, k-means seeding), streams 2+ drive per-actor
// move selection. Identical invocations are byte-identical.

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cogscik/cogscik.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Empty path means standard output.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << content;
  if (!out) throw std::runtime_error("short write to \"" + path + "\"");
}

std::array<double, cogscik::kIODimensions> parse_five(const std::string& text,
                                                      const char* flag) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::array<double, cogscik::kIODimensions> out{};
  for (auto& v : out) {
    if (!(in >> v)) {
      throw std::invalid_argument(std::string(flag) + " needs 5 comma-separated decimals, got \"" +
                                  text + "\"");
    }
  }
  std::string rest;
  if (in >> rest) {
    throw std::invalid_argument(std::string(flag) + " needs exactly 5 decimals, got \"" + text +
                                "\"");
  }
  return out;
}

std::vector<int> parse_ranks(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<int> ranks;
  int rank = 0;
  while (in >> rank) ranks.push_back(rank);
  if (!in.eof() || ranks.empty()) {
    throw std::invalid_argument("--script needs comma-separated integer ranks, got \"" + text +
                                "\"");
  }
  return ranks;
}

void echo_seed(std::uint64_t seed) { std::cerr << "seed: " << seed << "\n"; }

std::string format_point(const cogscik::IOPoint& p) {
  std::string out = "[";
  char buf[32];
  for (int i = 0; i < cogscik::kIODimensions; ++i) {
    std::snprintf(buf, sizeof(buf), "%.8f", p[i]);
    if (i > 0) out += ' ';
    out += buf;
  }
  out += ']';
  return out;
}

cogscik::Catalog load_catalog(const std::string& path, std::uint64_t seed) {
  const auto specs = cogscik::parse_catalog(read_file(path));
  cogscik::Rng rng(cogscik::substream_seed(seed, cogscik::kCatalogStream));
  return cogscik::instantiate_catalog(specs, rng, seed);
}

struct GenOptions {
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenOptions& opt) {
  echo_seed(opt.seed);
  cogscik::Rng rng(cogscik::substream_seed(opt.seed, cogscik::kCatalogStream));
  const auto specs = cogscik::generate_synthetic_catalog(opt.n, rng);
  write_output(opt.out, cogscik::serialize_catalog(specs));
  return 0;
}

struct ClusterOptions {
  std::string catalog;
  std::string classes;
  std::string io;
  int k = 0;
  std::uint64_t seed = 0;
  std::string weights = "1,1,1,1,1";
};

int cmd_cluster(const ClusterOptions& opt) {
  if (opt.classes.empty() == opt.io.empty()) {
    throw std::invalid_argument("exactly one of --classes or --io is required");
  }
  echo_seed(opt.seed);
  const auto catalog = load_catalog(opt.catalog, opt.seed);
  cogscik::IOVector io;
  if (!opt.classes.empty()) {
    cogscik::Rng rng(cogscik::substream_seed(opt.seed, cogscik::kActorInitStream));
    io = cogscik::sample_io(cogscik::class_vector_from_letters(opt.classes), rng);
  } else {
    io = cogscik::IOVector(parse_five(opt.io, "--io"));
  }
  const cogscik::WeightVector weights(parse_five(opt.weights, "--weights"));
  const auto cluster =
      cogscik::build_cluster(cogscik::Centroid{io, "actor"}, catalog, opt.k, weights);
  std::cout << cogscik::format_cluster_report(cluster);
  return 0;
}

struct RunOptions {
  std::string catalog;
  std::string actors;
  int k = 0;
  int ticks = 0;
  std::uint64_t seed = 0;
  std::string policy = "nearest";
  std::string script;
  bool exclude_used = false;
  std::string weights = "1,1,1,1,1";
  std::string out;
};

int cmd_run(const RunOptions& opt) {
  cogscik::SimulationConfig config;
  config.k = opt.k;
  config.n_ticks = opt.ticks;
  config.seed = opt.seed;
  config.weights = cogscik::WeightVector(parse_five(opt.weights, "--weights"));
  config.exclude_used = opt.exclude_used;
  if (opt.policy == "scripted") {
    if (opt.script.empty()) {
      throw std::invalid_argument("--policy scripted requires --script");
    }
    config.policy = cogscik::Policy::scripted(parse_ranks(opt.script));
  } else {
    if (!opt.script.empty()) {
      throw std::invalid_argument("--script is only valid with --policy scripted");
    }
    config.policy =
        opt.policy == "random" ? cogscik::Policy::random() : cogscik::Policy::nearest();
  }

  echo_seed(opt.seed);
  const auto catalog = load_catalog(opt.catalog, opt.seed);
  const auto actor_specs = cogscik::parse_actors(read_file(opt.actors));
  cogscik::Rng init_rng(cogscik::substream_seed(opt.seed, cogscik::kActorInitStream));
  auto actors = cogscik::resolve_actors(actor_specs, init_rng);
  const auto trace = cogscik::run(std::move(actors), catalog, config);
  write_output(opt.out, cogscik::format_trace(trace));
  return 0;
}

struct KMeansOptions {
  std::string catalog;
  int k = 0;
  std::uint64_t seed = 0;
  int max_iterations = 500;
};

int cmd_kmeans(const KMeansOptions& opt) {
  echo_seed(opt.seed);
  const auto catalog = load_catalog(opt.catalog, opt.seed);
  cogscik::Rng rng(cogscik::substream_seed(opt.seed, cogscik::kActorInitStream));
  const auto result = cogscik::kmeans(catalog, opt.k, rng, opt.max_iterations);
  const auto types = cogscik::cluster_type_summary(result, catalog);
  const auto wcss = cogscik::per_cluster_wcss(result, catalog);

  std::vector<int> sizes(static_cast<std::size_t>(opt.k), 0);
  for (const int a : result.assignments) ++sizes[static_cast<std::size_t>(a)];

  char buf[32];
  std::string out = "K-Means Clusters: " + std::to_string(opt.k) + "\n";
  out += "Iterations: " + std::to_string(result.iterations) + "\n";
  out += std::string("Converged: ") + (result.converged ? "yes" : "no") + "\n";
  std::snprintf(buf, sizeof(buf), "%.8f", result.wcss);
  out += std::string("Total WCSS: ") + buf + "\n\n";
  for (std::size_t c = 0; c < result.centroids.size(); ++c) {
    out += "Cluster " + std::to_string(c) + "\n";
    out += "\tSize: " + std::to_string(sizes[c]) + "\n";
    out += "\tModal Type: " + types[c] + "\n";
    out += "\tCentroid: " + format_point(result.centroids[c]) + "\n";
    std::snprintf(buf, sizeof(buf), "%.8f", wcss[c]);
    out += std::string("\tWCSS: ") + buf + "\n\n";
  }
  std::cout << out;
  return 0;
}

struct ValidateOptions {
  std::string catalog;
  std::uint64_t seed = 0;
};

int cmd_validate(const ValidateOptions& opt) {
  echo_seed(opt.seed);
  const std::string text = read_file(opt.catalog);
  // Lenient row parse: duplicate names are a reported violation here,
  // not a parse failure.
  const auto specs = cogscik::parse_catalog_rows(text);

  std::string out = "rows: " + std::to_string(specs.size()) + "\n";
  for (int d = 0; d < cogscik::kIODimensions; ++d) {
    out += std::string(cogscik::kIODimensionNames[d]) + ":";
    std::array<int, cogscik::kIOClassCount> counts{};
    for (const auto& spec : specs) ++counts[static_cast<std::size_t>(spec.classes[d])];
    for (int c = 0; c < cogscik::kIOClassCount; ++c) {
      out += ' ';
      out += cogscik::io_class_letter(static_cast<cogscik::IOClass>(c));
      out += '=' + std::to_string(counts[c]);
    }
    out += '\n';
  }

  std::vector<std::string> violations;
  std::map<std::string, std::size_t> first_row;  // name -> CSV row (header = row 1)
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto [it, inserted] = first_row.try_emplace(specs[i].name, i + 2);
    if (!inserted) {
      violations.push_back("duplicate move name \"" + specs[i].name + "\" (rows " +
                           std::to_string(it->second) + " and " + std::to_string(i + 2) + ")");
    }
  }
  try {
    cogscik::Rng rng(cogscik::substream_seed(opt.seed, cogscik::kCatalogStream));
    const auto catalog = cogscik::instantiate_catalog(specs, rng, opt.seed);
    std::set<cogscik::IOPoint> seen;
    for (const auto& move : catalog.moves) {
      if (!seen.insert(move.io.values()).second) {
        violations.push_back("duplicate IO vector for move \"" + move.spec.name + "\"");
      }
    }
  } catch (const cogscik::InstantiationError& e) {
    violations.push_back(e.what());
  }

  std::cout << out;
  if (violations.empty()) {
    std::cout << specs.size() << " moves OK\n";
    return 0;
  }
  for (const auto& v : violations) std::cout << "violation: " << v << "\n";
  std::cout << violations.size() << (violations.size() == 1 ? " violation\n" : " violations\n");
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CogSciK actor-centroid clustering and simulation toolkit"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic move catalog CSV");
  gen->add_option("--n", gen_opt.n, "Number of moves")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_opt.seed, "Master seed")->capture_default_str();
  gen->add_option("--out", gen_opt.out, "Output path (default: standard output)");

  ClusterOptions cluster_opt;
  auto* cluster = app.add_subcommand("cluster", "Build one k-nearest-move cluster and report it");
  cluster->add_option("--catalog", cluster_opt.catalog, "Catalog CSV path")->required();
  cluster->add_option("--classes", cluster_opt.classes,
                      "Actor IO classes, 5 letters A-E (IO sampled from them)");
  cluster->add_option("--io", cluster_opt.io, "Actor IO values, 5 comma-separated decimals");
  cluster->add_option("--k", cluster_opt.k, "Cluster size")->required();
  cluster->add_option("--seed", cluster_opt.seed, "Master seed")->capture_default_str();
  cluster
      ->add_option("--weights", cluster_opt.weights,
                   "Per-dimension distance weights, 5 comma-separated decimals")
      ->capture_default_str();

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Run the multi-actor simulation and print the trace");
  run->add_option("--catalog", run_opt.catalog, "Catalog CSV path")->required();
  run->add_option("--actors", run_opt.actors, "Actor file path")->required();
  run->add_option("--k", run_opt.k, "Cluster size per tick")->required();
  run->add_option("--ticks", run_opt.ticks, "Number of timeticks")
      ->required()
      ->check(CLI::NonNegativeNumber);
  run->add_option("--seed", run_opt.seed, "Master seed")->capture_default_str();
  run->add_option("--policy", run_opt.policy, "Move selection policy")
      ->capture_default_str()
      ->check(CLI::IsMember({"nearest", "random", "scripted"}));
  run->add_option("--script", run_opt.script,
                  "Comma-separated 1-based ranks, one per tick (scripted policy)");
  run->add_flag("--exclude-used", run_opt.exclude_used,
                "Remove each actor's already-selected moves from its pool");
  run->add_option("--weights", run_opt.weights,
                  "Per-dimension distance weights, 5 comma-separated decimals")
      ->capture_default_str();
  run->add_option("--out", run_opt.out, "Output path (default: standard output)");

  KMeansOptions kmeans_opt;
  auto* km = app.add_subcommand("kmeans", "Run the K-means baseline over a catalog");
  km->add_option("--catalog", kmeans_opt.catalog, "Catalog CSV path")->required();
  km->add_option("--k", kmeans_opt.k, "Number of clusters")->required();
  km->add_option("--seed", kmeans_opt.seed, "Master seed")->capture_default_str();
  km->add_option("--max-iterations", kmeans_opt.max_iterations, "Iteration budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  ValidateOptions validate_opt;
  auto* validate = app.add_subcommand("validate", "Check a catalog CSV and report diagnostics");
  validate->add_option("--catalog", validate_opt.catalog, "Catalog CSV path")->required();
  validate->add_option("--seed", validate_opt.seed, "Master seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_opt);
    if (cluster->parsed()) return cmd_cluster(cluster_opt);
    if (run->parsed()) return cmd_run(run_opt);
    if (km->parsed()) return cmd_kmeans(kmeans_opt);
    if (validate->parsed()) return cmd_validate(validate_opt);
  } catch (const cogscik::ExhaustionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
