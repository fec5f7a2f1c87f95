#pragma once

// JSON input parsing, report execution and canonical serialization, and
// re-validation of emitted reports.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ctrlab/graph.hpp"
#include "ctrlab/lattice.hpp"
#include "ctrlab/poset.hpp"
#include "ctrlab/schubert.hpp"
#include "ctrlab/verdict.hpp"

namespace ctrlab {

using Json = nlohmann::json;

enum class Family { Schubert, Cycle, Hibi, Perfect, Determinantal };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// Reads JSON from a path ("-" for stdin). Parse errors carry line and column.
Json load_json(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& source = "<input>");

/// Schema checks name the offending field, e.g. "covers[2][1]".
Poset parse_poset(const Json& j);
Graph parse_graph(const Json& j);
SchubertIndex parse_schubert(const Json& j);

Json poset_to_json(const Poset& p);
Json graph_to_json(const Graph& g);

struct Options {
  Int degree_bound = 2;
  std::optional<Int> power_bound;  // default |ground| + 2
  Engine engine = Engine::Pruned;
  bool deep_scan = true;  // perfect graphs with k − k′ = 1
};

struct Report {
  Family family = Family::Schubert;
  Json input;            // canonical request, embedded for verification
  Json options;          // resolved options
  Verdict verdict;
  bool semidecision = false;  // verdict holds only up to the reported bounds
  std::optional<Int> timing_ms;
};

/// Request shapes: schubert {"m","n","gamma"}; det {"m","n","t"}; cycle {"n"};
/// hibi {"poset": {...}}; perfect {"graph": {...}} or {"poset": {...}}.
/// Throws InvalidInput on schema errors.
Report execute(Family family, const Json& request, const Options& options);

/// 0 verdict computed, 3 inconclusive at bound.
int exit_code(const Report& r);

/// Sorted keys, integers only.
Json to_json(const Report& r);
std::string to_canonical_string(const Report& r);
std::string to_text(const Report& r);

/// Re-validates every witness in a report against its embedded input and
/// recomputes the verdict. Returns human-readable failures (empty: valid).
std::vector<std::string> verify_report(const Json& report);

}  // namespace ctrlab
