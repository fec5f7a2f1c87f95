// ctrlab: CTR verdicts with certificates for Schubert cycles, determinantal
// rings, Hibi rings, and stable set polytopes of cycles and perfect graphs.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctrlab/error.hpp"
#include "ctrlab/report.hpp"

namespace {

struct CommonFlags {
  ctrlab::Int degree_bound = 2;
  ctrlab::Int power_bound = 0;
  std::string format = "json";
  bool oracle = false;
  bool timing = false;
};

void add_common(CLI::App* sub, CommonFlags& f, bool bounds) {
  if (bounds) {
    sub->add_option("--degree-bound", f.degree_bound, "Largest ring-monomial degree scanned")
        ->capture_default_str();
    sub->add_option("--power-bound", f.power_bound,
                    "Largest power tried for radical membership (default |ground| + 2)");
    sub->add_flag("--oracle", f.oracle, "Use the exhaustive box oracle instead of propagation");
  }
  sub->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_flag("--timing", f.timing, "Add wall-clock milliseconds to the report");
}

int emit(const ctrlab::Report& report, const CommonFlags& f) {
  if (f.format == "text") {
    std::cout << ctrlab::to_text(report);
  } else {
    std::cout << ctrlab::to_canonical_string(report);
  }
  return ctrlab::exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical trace radical verdicts with machine-checkable certificates"};
  app.require_subcommand(1);
  CommonFlags flags;
  ctrlab::Json request = ctrlab::Json::object();
  ctrlab::Family family = ctrlab::Family::Schubert;

  int m = 0, n = 0, t = 0, cycle_n = 0;
  std::vector<int> gamma;
  std::string input_path, poset_path, graph_path, report_path;
  bool no_deep_scan = false;

  auto* schubert = app.add_subcommand("schubert", "Schubert cycle G(X; gamma)");
  schubert->add_option("--input", input_path, "JSON {\"m\", \"n\", \"gamma\"} file, - for stdin");
  schubert->add_option("--m", m, "Rows");
  schubert->add_option("--n", n, "Columns");
  schubert->add_option("--gamma", gamma, "Strictly increasing entries")->delimiter(',');
  add_common(schubert, flags, false);

  auto* cycle = app.add_subcommand("cycle", "Stable set polytope of the n-cycle");
  cycle->add_option("--n", cycle_n, "Cycle length")->required();
  add_common(cycle, flags, true);

  auto* hibi = app.add_subcommand("hibi", "Hibi ring of a poset");
  hibi->add_option("--poset", poset_path, "Poset JSON file, - for stdin")->required();
  add_common(hibi, flags, true);

  auto* perfect = app.add_subcommand("perfect", "Stable set polytope of a perfect graph");
  auto* graph_opt = perfect->add_option("--graph", graph_path, "Graph JSON file, - for stdin");
  auto* poset_opt =
      perfect->add_option("--poset", poset_path, "Poset JSON file; its comparability graph is used");
  graph_opt->excludes(poset_opt);
  perfect->add_flag("--no-deep-scan", no_deep_scan,
                    "Stop at the clique-size condition when k - k' = 1");
  add_common(perfect, flags, true);

  auto* det = app.add_subcommand("det", "Determinantal ring K[X]/I_t(X)");
  det->add_option("--m", m, "Rows")->required();
  det->add_option("--n", n, "Columns")->required();
  det->add_option("--t", t, "Minor size")->required();
  add_common(det, flags, false);

  auto* verify = app.add_subcommand("verify", "Re-validate a JSON report");
  verify->add_option("report", report_path, "Report file, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      const auto failures = ctrlab::verify_report(ctrlab::load_json(report_path));
      for (const auto& f : failures) std::cerr << "verify: " << f << "\n";
      if (failures.empty()) std::cout << "ok\n";
      return failures.empty() ? 0 : 1;
    }
    if (schubert->parsed()) {
      family = ctrlab::Family::Schubert;
      if (!input_path.empty()) {
        request = ctrlab::load_json(input_path);
      } else {
        request = ctrlab::Json{{"m", m}, {"n", n}, {"gamma", gamma}};
      }
    } else if (cycle->parsed()) {
      family = ctrlab::Family::Cycle;
      request = ctrlab::Json{{"n", cycle_n}};
    } else if (hibi->parsed()) {
      family = ctrlab::Family::Hibi;
      request = ctrlab::Json{{"poset", ctrlab::load_json(poset_path)}};
    } else if (perfect->parsed()) {
      family = ctrlab::Family::Perfect;
      if (!graph_path.empty()) {
        request = ctrlab::Json{{"graph", ctrlab::load_json(graph_path)}};
      } else if (!poset_path.empty()) {
        request = ctrlab::Json{{"poset", ctrlab::load_json(poset_path)}};
      } else {
        throw ctrlab::InvalidInput("perfect: give --graph or --poset");
      }
    } else if (det->parsed()) {
      family = ctrlab::Family::Determinantal;
      request = ctrlab::Json{{"m", m}, {"n", n}, {"t", t}};
    }

    ctrlab::Options options;
    options.degree_bound = flags.degree_bound;
    if (flags.power_bound != 0) options.power_bound = flags.power_bound;
    options.engine = flags.oracle ? ctrlab::Engine::Oracle : ctrlab::Engine::Pruned;
    options.deep_scan = !no_deep_scan;

    const auto start = std::chrono::steady_clock::now();
    ctrlab::Report report = ctrlab::execute(family, request, options);
    if (flags.timing) {
      report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    }
    return emit(report, flags);
  } catch (const ctrlab::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ctrlab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ctrlab::UnboundedEnumeration& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
