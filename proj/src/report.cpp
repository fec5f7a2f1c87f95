#include "ctrlab/report.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "ctrlab/cycle.hpp"
#include "ctrlab/error.hpp"

namespace ctrlab {
namespace {

constexpr std::string_view kFamilyNames[] = {"schubert", "cycle", "hibi", "perfect", "det"};

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InvalidInput(field.empty() ? what : field + ": " + what);
}

const Json& require_object(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  return j;
}

void reject_unknown(const Json& j, const std::string& field, std::set<std::string> known) {
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) fail(field.empty() ? key : field + "." + key, "unexpected field");
  }
}

const Json& member(const Json& j, const std::string& field, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing field");
  return *it;
}

std::string join_field(const std::string& field, const std::string& key) {
  return field.empty() ? key : field + "." + key;
}

Int as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<Int>();
}

int as_small_int(const Json& j, const std::string& field) {
  const Int v = as_int(j, field);
  if (v < -1000000 || v > 1000000) fail(field, "integer out of range");
  return static_cast<int>(v);
}

std::string as_string(const Json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j,
                                                           const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) fail(f, "expected a pair [\"x\", \"y\"]");
    out.emplace_back(as_string(j[i][0], f + "[0]"), as_string(j[i][1], f + "[1]"));
  }
  return out;
}

// Rethrows library validation errors with the field they concern.
template <class Fn>
auto with_field(const std::string& field, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidInput& e) {
    fail(field, e.what());
  }
}

Json point_to_json(const ShiftedSystem& system, const LatticePoint& p) {
  Json values = Json::object();
  for (std::size_t i = 0; i < system.size(); ++i) values[system.ground()[i]] = p.values[i];
  return Json{{"degree", p.degree}, {"values", values}};
}

LatticePoint point_from_json(const ShiftedSystem& system, const Json& j, const std::string& field) {
  require_object(j, field);
  std::map<std::string, Int> values;
  const Json& vals = member(j, field, "values");
  require_object(vals, join_field(field, "values"));
  for (const auto& [key, value] : vals.items()) {
    values[key] = as_int(value, join_field(field, "values." + key));
  }
  const Int degree = as_int(member(j, field, "degree"), join_field(field, "degree"));
  try {
    return system.point(values, degree);
  } catch (const DomainMismatch& e) {
    fail(field, e.what());
  }
}

Json pair_to_json(const ShiftedSystem& s, const DecompositionWitness& w) {
  return Json{{"eta", point_to_json(s, w.eta)}, {"zeta", point_to_json(s, w.zeta)},
              {"power", w.power}};
}

Json ints(const std::vector<Int>& v) { return Json(v); }

std::optional<ShiftedSystem> system_for(Family family, const Json& input) {
  switch (family) {
    case Family::Cycle:
      return cycle_system(as_small_int(member(input, "", "n"), "n"));
    case Family::Hibi:
      return order_polytope_system(parse_poset(member(input, "", "poset")));
    case Family::Perfect:
      if (input.contains("graph")) return perfect_system(parse_graph(input["graph"]));
      return perfect_system(comparability_graph(parse_poset(member(input, "", "poset"))));
    case Family::Schubert:
    case Family::Determinantal:
      break;
  }
  return std::nullopt;
}

Json witness_to_json(const Witness& w, const std::optional<ShiftedSystem>& system) {
  return std::visit(
      [&](const auto& c) -> Json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, DecompositionCertificate>) {
          Json j = pair_to_json(*system, c.witness);
          j["type"] = "decomposition";
          j["mu"] = point_to_json(*system, c.mu);
          return j;
        } else if constexpr (std::is_same_v<T, NonTraceCertificate>) {
          Json j{{"type", "non_trace"}, {"mu", point_to_json(*system, c.mu)}};
          j["power_witness"] = c.power ? pair_to_json(*system, *c.power) : Json(nullptr);
          if (!c.prime_membership.empty()) j["prime_membership"] = c.prime_membership;
          return j;
        } else if constexpr (std::is_same_v<T, ScanCertificate>) {
          Json hits = Json::array();
          for (const auto& p : c.radical_not_trace) hits.push_back(point_to_json(*system, p));
          return Json{{"type", "scan"},
                      {"degree_bound", c.degree_bound},
                      {"power_bound", c.power_bound},
                      {"candidates", c.candidates},
                      {"in_trace", c.in_trace},
                      {"radical_candidates", c.radical_candidates},
                      {"gorenstein_refuted", c.gorenstein_refuted},
                      {"radical_not_trace", hits}};
        } else if constexpr (std::is_same_v<T, SchubertCertificate>) {
          Json sigmas = Json::array();
          for (const auto& [i, s] : c.sigmas) sigmas.push_back(Json{{"i", i}, {"sigma", s}});
          auto opt = [](const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); };
          return Json{{"type", "schubert"},
                      {"kappa", ints(c.kappa)},
                      {"kappa_max", c.kappa_max},
                      {"kappa_min", c.kappa_min},
                      {"i1", ints(c.i1)},
                      {"i2", ints(c.i2)},
                      {"i_prime", ints(c.i_prime)},
                      {"i_double_prime", ints(c.i_double_prime)},
                      {"sigmas", sigmas},
                      {"trace_generator_degree", opt(c.trace_generator_degree)},
                      {"radical_power", opt(c.radical_power)},
                      {"polynomial_ring", c.polynomial_ring}};
        } else {
          return Json{{"type", "determinantal"},
                      {"m", c.m},
                      {"n", c.n},
                      {"t", c.t},
                      {"trace_power", c.trace_power}};
        }
      },
      w);
}

Int parse_power_bound(const Options& o, std::size_t ground) {
  const Int k = o.power_bound.value_or(static_cast<Int>(ground) + 2);
  if (k < 1) throw InvalidInput("power bound must be at least 1");
  return k;
}

void check_degree_bound(const Options& o) {
  if (o.degree_bound < 1) throw InvalidInput("degree bound must be at least 1");
}

std::string engine_name(Engine e) { return e == Engine::Oracle ? "oracle" : "pruned"; }

std::string render_list(const std::vector<Int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

std::string_view to_string(Family f) { return kFamilyNames[static_cast<int>(f)]; }

std::optional<Family> family_from_string(std::string_view name) {
  for (int i = 0; i < 5; ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                       ": malformed JSON");
  }
}

Json load_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json_text(text, path == "-" ? "<stdin>" : path);
}

Poset parse_poset(const Json& j) {
  require_object(j, "poset");
  reject_unknown(j, "", {"elements", "covers"});
  auto elements = string_list(member(j, "", "elements"), "elements");
  auto covers = pair_list(member(j, "", "covers"), "covers");
  return with_field("covers", [&] { return build_poset(std::move(elements), covers); });
}

Graph parse_graph(const Json& j) {
  require_object(j, "graph");
  reject_unknown(j, "", {"vertices", "edges"});
  auto vertices = string_list(member(j, "", "vertices"), "vertices");
  auto edges = pair_list(member(j, "", "edges"), "edges");
  return with_field("edges", [&] { return build_graph(std::move(vertices), edges); });
}

SchubertIndex parse_schubert(const Json& j) {
  require_object(j, "schubert");
  reject_unknown(j, "", {"m", "n", "gamma"});
  const int m = as_small_int(member(j, "", "m"), "m");
  const int n = as_small_int(member(j, "", "n"), "n");
  const Json& g = member(j, "", "gamma");
  if (!g.is_array()) fail("gamma", "expected an array");
  std::vector<int> gamma;
  for (std::size_t i = 0; i < g.size(); ++i) {
    gamma.push_back(as_small_int(g[i], "gamma[" + std::to_string(i) + "]"));
  }
  return with_field("gamma", [&] { return SchubertIndex(m, n, gamma); });
}

Json poset_to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [x, y] : p.covers()) covers.push_back({p.elements()[x], p.elements()[y]});
  return Json{{"elements", p.elements()}, {"covers", covers}};
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.vertices()[u], g.vertices()[v]});
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Report execute(Family family, const Json& request, const Options& options) {
  require_object(request, "request");
  Report r;
  r.family = family;
  switch (family) {
    case Family::Schubert: {
      const SchubertIndex gamma = parse_schubert(request);
      r.input = Json{{"m", gamma.m()}, {"n", gamma.n()}, {"gamma", gamma.entries()}};
      r.options = Json::object();
      r.verdict = schubert_verdict(gamma);
      break;
    }
    case Family::Determinantal: {
      reject_unknown(request, "", {"m", "n", "t"});
      const int m = as_small_int(member(request, "", "m"), "m");
      const int n = as_small_int(member(request, "", "n"), "n");
      const int t = as_small_int(member(request, "", "t"), "t");
      r.input = Json{{"m", m}, {"n", n}, {"t", t}};
      r.options = Json::object();
      r.verdict = determinantal_ctr(m, n, t);
      break;
    }
    case Family::Cycle: {
      reject_unknown(request, "", {"n"});
      const int n = as_small_int(member(request, "", "n"), "n");
      cycle_data(n);
      check_degree_bound(options);
      const Int k = parse_power_bound(options, static_cast<std::size_t>(n));
      r.input = Json{{"n", n}};
      r.options = Json{{"degree_bound", options.degree_bound},
                       {"power_bound", k},
                       {"engine", engine_name(options.engine)}};
      r.verdict = cycle_ctr_verdict(n, options.degree_bound, k, options.engine);
      break;
    }
    case Family::Hibi: {
      reject_unknown(request, "", {"poset"});
      const Poset p = parse_poset(member(request, "", "poset"));
      check_degree_bound(options);
      const Int k = parse_power_bound(options, p.size());
      r.input = Json{{"poset", poset_to_json(p)}};
      r.options = Json{{"degree_bound", options.degree_bound},
                       {"power_bound", k},
                       {"engine", engine_name(options.engine)}};
      r.verdict = hibi_ctr_scan(p, options.degree_bound, k, options.engine);
      break;
    }
    case Family::Perfect: {
      reject_unknown(request, "", {"graph", "poset"});
      if (request.contains("graph") == request.contains("poset")) {
        throw InvalidInput("request: give exactly one of \"graph\" or \"poset\"");
      }
      Graph g;
      if (request.contains("graph")) {
        g = parse_graph(request["graph"]);
        r.input = Json{{"graph", graph_to_json(g)}};
      } else {
        const Poset p = parse_poset(request["poset"]);
        g = comparability_graph(p);
        r.input = Json{{"poset", poset_to_json(p)}};
      }
      check_degree_bound(options);
      const Int k = parse_power_bound(options, g.size());
      r.options = Json{{"degree_bound", options.degree_bound},
                       {"power_bound", k},
                       {"engine", engine_name(options.engine)},
                       {"deep_scan", options.deep_scan}};
      r.verdict = necessary_condition(g, k, options.engine);
      if (r.verdict.kind == VerdictKind::InconclusiveAtBound && options.deep_scan) {
        auto notes = r.verdict.notes;
        r.verdict = deep_scan(g, options.degree_bound, k, options.engine);
        notes.insert(notes.end(), r.verdict.notes.begin(), r.verdict.notes.end());
        std::vector<std::string> unique;
        for (auto& n : notes) {
          if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(n);
        }
        r.verdict.notes = std::move(unique);
      }
      break;
    }
  }
  const auto& v = r.verdict;
  r.semidecision = v.kind == VerdictKind::InconclusiveAtBound ||
                   (family == Family::Hibi && v.at_bound);
  return r;
}

int exit_code(const Report& r) { return r.semidecision ? 3 : 0; }

Json to_json(const Report& r) {
  const auto system = system_for(r.family, r.input);
  const Bounds& b = r.verdict.bounds;
  auto opt = [](const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); };
  Json verdict{{"kind", std::string(to_string(r.verdict.kind))},
               {"at_bound", r.verdict.at_bound},
               {"bounds", Json{{"degree_bound", opt(b.degree_bound)},
                               {"power_bound", opt(b.power_bound)}}},
               {"ground", r.verdict.ground},
               {"witness", witness_to_json(r.verdict.witness, system)},
               {"notes", r.verdict.notes}};
  Json j{{"family", std::string(to_string(r.family))},
         {"input", r.input},
         {"options", r.options},
         {"semidecision", r.semidecision},
         {"verdict", verdict}};
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

std::string to_canonical_string(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string to_text(const Report& r) {
  std::ostringstream os;
  const auto system = system_for(r.family, r.input);
  const Verdict& v = r.verdict;
  os << "family:  " << to_string(r.family) << "\n";
  os << "verdict: " << to_string(v.kind);
  if (v.at_bound || r.semidecision) {
    os << " (at bound:";
    if (v.bounds.degree_bound) os << " degree <= " << *v.bounds.degree_bound;
    if (v.bounds.power_bound) os << " power <= " << *v.bounds.power_bound;
    os << ")";
  }
  os << "\n";
  auto pt = [&](const LatticePoint& p) { return system->describe_point(p); };
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, DecompositionCertificate>) {
          os << "mu    = " << pt(c.mu) << "\n";
          os << "eta   = " << pt(c.witness.eta) << "\n";
          os << "zeta  = " << pt(c.witness.zeta) << "\n";
          os << "power = " << c.witness.power << "\n";
        } else if constexpr (std::is_same_v<T, NonTraceCertificate>) {
          os << "mu    = " << pt(c.mu) << "  (not in the trace)\n";
          if (c.power) {
            os << "power " << c.power->power << ": eta  = " << pt(c.power->eta) << "\n";
            os << "         zeta = " << pt(c.power->zeta) << "\n";
          }
          if (!c.prime_membership.empty()) {
            os << "in every minimal prime: "
               << (std::find(c.prime_membership.begin(), c.prime_membership.end(), false) ==
                           c.prime_membership.end()
                       ? "yes"
                       : "no")
               << "\n";
          }
        } else if constexpr (std::is_same_v<T, ScanCertificate>) {
          os << "scanned " << c.candidates << " ring monomials of degree <= " << c.degree_bound
             << ", " << c.in_trace << " in the trace";
          if (c.radical_candidates) os << ", " << c.radical_candidates << " in every p_i";
          os << "\n";
          for (const auto& p : c.radical_not_trace) os << "radical, not trace: " << pt(p) << "\n";
        } else if constexpr (std::is_same_v<T, SchubertCertificate>) {
          if (c.polynomial_ring) {
            os << "gamma = [n-m+1, ..., n]\n";
            return;
          }
          const SchubertIndex gamma = parse_schubert(r.input);
          const BlockDecomposition d = block_decomposition(gamma);
          os << "  i  block        gap          kappa\n";
          for (int i = 0; i <= d.t; ++i) {
            std::vector<Int> bl(d.blocks[i].begin(), d.blocks[i].end());
            std::vector<Int> gp(d.gaps[i].begin(), d.gaps[i].end());
            std::string bs = render_list(bl), gs = render_list(gp);
            os << "  " << i << "  " << bs << std::string(bs.size() < 13 ? 13 - bs.size() : 1, ' ')
               << gs << std::string(gs.size() < 13 ? 13 - gs.size() : 1, ' ') << d.kappa[i]
               << "\n";
          }
          std::vector<Int> last(d.blocks.back().begin(), d.blocks.back().end());
          os << "  trailing block " << render_list(last) << "\n";
          os << "kappa - kappa' = " << c.kappa_max - c.kappa_min << "\n";
          if (!c.i1.empty() && c.kappa_max - c.kappa_min == 1) {
            os << "I1 = " << render_list(c.i1) << ", I2 = " << render_list(c.i2)
               << ", I' = " << render_list(c.i_prime) << ", I'' = " << render_list(c.i_double_prime)
               << "\n";
            for (const auto& [i, s] : c.sigmas) os << "sigma_" << i << " = " << Json(s).dump() << "\n";
          }
        } else if constexpr (std::is_same_v<T, DeterminantalCertificate>) {
          os << "trace = I_" << c.t - 1 << "(X)^" << c.trace_power << " for a " << c.m << "x" << c.n
             << " matrix\n";
        }
      },
      v.witness);
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

std::vector<std::string> verify_report(const Json& report) {
  std::vector<std::string> failures;
  require_object(report, "report");
  const auto family = family_from_string(as_string(member(report, "", "family"), "family"));
  if (!family) fail("family", "unknown family");
  const Json& input = member(report, "", "input");
  const Json& opts = member(report, "", "options");
  const Json& verdict = member(report, "", "verdict");
  require_object(opts, "options");
  require_object(verdict, "verdict");

  Options options;
  if (opts.contains("degree_bound")) options.degree_bound = as_int(opts["degree_bound"], "options.degree_bound");
  if (opts.contains("power_bound")) options.power_bound = as_int(opts["power_bound"], "options.power_bound");
  if (opts.contains("engine")) {
    const auto e = as_string(opts["engine"], "options.engine");
    if (e != "pruned" && e != "oracle") fail("options.engine", "unknown engine");
    options.engine = e == "oracle" ? Engine::Oracle : Engine::Pruned;
  }
  if (opts.contains("deep_scan")) {
    if (!opts["deep_scan"].is_boolean()) fail("options.deep_scan", "expected a boolean");
    options.deep_scan = opts["deep_scan"].get<bool>();
  }

  const auto system = system_for(*family, input);
  const Json& witness = member(verdict, "verdict", "witness");
  const std::string kind = as_string(member(verdict, "verdict", "kind"), "verdict.kind");

  auto check = [&](Int shift, const LatticePoint& p, const std::string& name) {
    if (auto why = first_violation(*system, shift, p)) {
      failures.push_back(name + " is not in S(" + std::to_string(shift) + "): " + *why);
    }
  };
  auto check_pair = [&](const Json& w, const LatticePoint& mu, const std::string& field) {
    const LatticePoint eta = point_from_json(*system, member(w, field, "eta"), field + ".eta");
    const LatticePoint zeta = point_from_json(*system, member(w, field, "zeta"), field + ".zeta");
    const Int k = as_int(member(w, field, "power"), field + ".power");
    check(1, eta, field + ".eta");
    check(-1, zeta, field + ".zeta");
    if (k < 1 || eta + zeta != k * mu) {
      failures.push_back(field + ": eta + zeta != " + std::to_string(k) + " * mu");
    }
  };

  if (system && witness.is_object()) {
    const std::string type = as_string(member(witness, "witness", "type"), "witness.type");
    if (type == "decomposition") {
      const LatticePoint mu = point_from_json(*system, member(witness, "witness", "mu"), "witness.mu");
      check(0, mu, "witness.mu");
      check_pair(witness, mu, "witness");
      if (kind == "Gorenstein" && mu != system->zero(0)) {
        failures.push_back("Gorenstein witness must decompose the zero point");
      }
    } else if (type == "non_trace") {
      const LatticePoint mu = point_from_json(*system, member(witness, "witness", "mu"), "witness.mu");
      check(0, mu, "witness.mu");
      if (failures.empty() && decompose(*system, mu, options.engine)) {
        failures.push_back("witness.mu decomposes, so it lies in the trace");
      }
      const Json& pw = member(witness, "witness", "power_witness");
      if (!pw.is_null()) {
        check_pair(pw, mu, "witness.power_witness");
        if (pw.value("power", 0) < 2) failures.push_back("witness.power_witness: power must be >= 2");
      }
      if (*family == Family::Cycle && witness.contains("prime_membership") && failures.empty()) {
        const int n = static_cast<int>(system->size());
        for (int i = 0; i < n; ++i) {
          if (!minimal_prime_member(*system, n, i, mu)) {
            failures.push_back("witness.mu is not in p_" + std::to_string(i));
          }
        }
      }
    } else if (type == "scan") {
      const Json& hits = member(witness, "witness", "radical_not_trace");
      for (std::size_t i = 0; i < hits.size(); ++i) {
        check(0, point_from_json(*system, hits[i], "witness.radical_not_trace[" + std::to_string(i) + "]"),
              "witness.radical_not_trace[" + std::to_string(i) + "]");
      }
    }
  }

  const Report again = execute(*family, input, options);
  const Json recomputed = to_json(again);
  if (recomputed["verdict"] != verdict) failures.push_back("recomputed verdict differs from the report");
  if (report.contains("semidecision") && recomputed["semidecision"] != report["semidecision"]) {
    failures.push_back("semidecision flag differs from the recomputation");
  }
  return failures;
}

}  // namespace ctrlab
