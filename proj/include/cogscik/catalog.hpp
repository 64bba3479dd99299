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

#ifndef COGSCIK_CATALOG_HPP
#define COGSCIK_CATALOG_HPP

#include <cstdint>
#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cogscik/io_space.hpp"
#include "cogscik/rng.hpp"

namespace cogscik {

/// A catalog row before instantiation: name, type, and the per-dimension
/// class letters its IO vector will be sampled from.
struct MoveSpec {
  std::string name;
  std::string move_type;
  IOClassVector classes{};

  friend bool operator==(const MoveSpec&, const MoveSpec&) = default;
};

/// An instantiated move: its spec plus a concrete IO vector that
/// classifies back to the spec's class letters.
struct Move {
  MoveSpec spec;
  IOVector io;
};

/// Instantiated move set. Moves keep the source file's row order (used
/// for deterministic tie-breaking downstream) and no two moves share an
/// IO vector; both are established by instantiate_catalog.
struct Catalog {
  std::vector<Move> moves;
  std::uint64_t source_seed = 0;

  std::size_t size() const { return moves.size(); }
};

/// Parse failure carrying the offending 1-based line number.
class CatalogParseError : public std::runtime_error {
 public:
  CatalogParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Sampling kept colliding with existing vectors; in practice this
/// signals a degenerate random stream.
class InstantiationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kCatalogHeader =
    "name,type,warmth,affinity,legitimacy,dominance,competence";

namespace detail {

// Minimal CSV row splitter: fields separated by commas, double-quoted
// fields may contain commas and escaped quotes ("").
inline std::vector<std::string> split_csv_row(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool in_quotes = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      if (!current.empty()) {
        throw CatalogParseError(line_no, "unexpected '\"' inside unquoted field");
      }
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
    ++i;
  }
  if (in_quotes) throw CatalogParseError(line_no, "unterminated quoted field");
  fields.push_back(std::move(current));
  return fields;
}

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

inline std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace detail

/// Row-level parse of the catalog CSV, without the cross-row
/// name-uniqueness check (the validator reports duplicates itself).
inline std::vector<MoveSpec> parse_catalog_rows(std::string_view text) {
  std::vector<MoveSpec> specs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    line = detail::strip_cr(line);
    if (!saw_header) {
      if (line != kCatalogHeader) {
        throw CatalogParseError(line_no, "expected header \"" + std::string(kCatalogHeader) + "\"");
      }
      saw_header = true;
      continue;
    }
    if (line.empty() && pos > text.size()) break;  // trailing newline
    if (line.empty()) {
      throw CatalogParseError(line_no, "empty row");
    }
    const auto fields = detail::split_csv_row(line, line_no);
    if (fields.size() != 2 + kIODimensions) {
      throw CatalogParseError(line_no, "expected 7 columns, got " + std::to_string(fields.size()));
    }
    MoveSpec spec;
    spec.name = fields[0];
    spec.move_type = fields[1];
    if (spec.name.empty()) throw CatalogParseError(line_no, "empty move name");
    if (spec.move_type.empty()) throw CatalogParseError(line_no, "empty move type");
    for (int d = 0; d < kIODimensions; ++d) {
      const std::string& f = fields[2 + d];
      if (f.size() != 1) {
        throw CatalogParseError(line_no, std::string(kIODimensionNames[d]) +
                                             " class must be one letter, got \"" + f + "\"");
      }
      try {
        spec.classes[d] = io_class_from_letter(f[0]);
      } catch (const std::invalid_argument& e) {
        throw CatalogParseError(line_no, e.what());
      }
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

/// Full catalog parse: rows in file order, names unique.
inline std::vector<MoveSpec> parse_catalog(std::string_view text) {
  auto specs = parse_catalog_rows(text);
  std::unordered_set<std::string_view> names;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!names.insert(specs[i].name).second) {
      throw CatalogParseError(i + 2, "duplicate move name \"" + specs[i].name + "\"");
    }
  }
  return specs;
}

/// Inverse of parse_catalog: header plus one row per spec, LF endings.
inline std::string serialize_catalog(std::span<const MoveSpec> specs) {
  std::string out(kCatalogHeader);
  out += '\n';
  for (const auto& spec : specs) {
    out += detail::csv_escape(spec.name);
    out += ',';
    out += detail::csv_escape(spec.move_type);
    for (int d = 0; d < kIODimensions; ++d) {
      out += ',';
      out += io_class_letter(spec.classes[d]);
    }
    out += '\n';
  }
  return out;
}

/// Sample an IO vector for every spec, in file order. An exact collision
/// with any earlier vector is resampled, up to 100 times per move, so the
/// no-two-moves-identical invariant is checked rather than assumed.
template <RandomStream R>
Catalog instantiate_catalog(std::span<const MoveSpec> specs, R& rng,
                            std::uint64_t source_seed) {
  Catalog catalog;
  catalog.source_seed = source_seed;
  catalog.moves.reserve(specs.size());
  std::set<IOPoint> seen;
  for (const auto& spec : specs) {
    IOVector io = sample_io(spec.classes, rng);
    int resamples = 0;
    while (seen.contains(io.values())) {
      if (resamples == 100) {
        throw InstantiationError("IO collision persisted after 100 resamples for move \"" +
                                 spec.name + "\"");
      }
      ++resamples;
      io = sample_io(spec.classes, rng);
    }
    seen.insert(io.values());
    catalog.moves.push_back(Move{spec, io});
  }
  return catalog;
}

inline Catalog instantiate_catalog(std::span<const MoveSpec> specs, std::uint64_t seed) {
  Rng rng(seed);
  return instantiate_catalog(specs, rng, seed);
}

/// CAMEO-style move types used by the synthetic generator.
inline constexpr std::array<std::string_view, 22> kSyntheticMoveTypes = {
    "Make a public statement",
    "Appeal",
    "Express intent to cooperate",
    "Consult",
    "Engage in diplomatic cooperation",
    "Engage in material cooperation",
    "Provide aid",
    "Yield",
    "Investigate",
    "Demand",
    "Disapprove",
    "Reject",
    "Threaten",
    "Protest",
    "Exhibit force posture",
    "Reduce relations",
    "Coerce",
    "Assault",
    "Fight",
    "Use unconventional mass violence",
    "Control information",
    "Refuse to build infrastructure",
};

/// Stand-in for a real move bank: n specs named move-0001.., each with a
/// random type and per-dimension classes drawn uniformly. Per move, one
/// type draw then five class draws.
template <RandomStream R>
std::vector<MoveSpec> generate_synthetic_catalog(int n, R& rng) {
  if (n < 1) throw std::domain_error("synthetic catalog needs n >= 1, got " + std::to_string(n));
  std::size_t width = 4;
  for (int v = n; v >= 10000; v /= 10) ++width;
  std::vector<MoveSpec> specs;
  specs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    MoveSpec spec;
    const std::string digits = std::to_string(i);
    spec.name = "move-" + std::string(width - std::min(width, digits.size()), '0') + digits;
    spec.move_type =
        kSyntheticMoveTypes[uniform_below(rng, static_cast<std::int64_t>(kSyntheticMoveTypes.size()))];
    for (int d = 0; d < kIODimensions; ++d) {
      spec.classes[d] = static_cast<IOClass>(uniform_below(rng, kIOClassCount));
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

inline std::vector<MoveSpec> generate_synthetic_catalog(int n, std::uint64_t seed) {
  Rng rng(seed);
  return generate_synthetic_catalog(n, rng);
}

}  // namespace cogscik

#endif  // COGSCIK_CATALOG_HPP
