#include "ctrlab/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ctrlab/error.hpp"
#include "ctrlab/parallel.hpp"

namespace ctrlab {
namespace {

// Returns a cycle as a list of indices (first == last), or empty.
std::vector<int> find_cycle(const std::vector<std::vector<int>>& up) {
  const int n = static_cast<int>(up.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> stack;
  std::vector<int> cycle;
  auto dfs = [&](auto&& self, int v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (int w : up[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        cycle.assign(it, stack.end());
        cycle.push_back(w);
        return true;
      }
      if (state[w] == 0 && self(self, w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (state[v] == 0 && dfs(dfs, v)) return cycle;
  }
  return {};
}

}  // namespace

Poset build_poset(std::vector<std::string> elements,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw InvalidInput("duplicate element '" + elements[i] + "'");
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> up(n);
  for (const auto& [x, y] : relations) {
    auto ix = index.find(x);
    if (ix == index.end()) throw InvalidInput("unknown element '" + x + "' in relation");
    auto iy = index.find(y);
    if (iy == index.end()) throw InvalidInput("unknown element '" + y + "' in relation");
    up[ix->second].push_back(iy->second);
  }
  for (auto& u : up) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
  }
  if (auto cycle = find_cycle(up); !cycle.empty()) {
    std::string text;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      text += (i ? " < " : "") + elements[cycle[i]];
    }
    throw InvalidInput("relation has a cycle: " + text);
  }

  Poset p;
  p.reach_.assign(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::vector<int> todo{s};
    p.reach_[s][s] = 1;
    while (!todo.empty()) {
      const int v = todo.back();
      todo.pop_back();
      for (int w : up[v]) {
        if (!p.reach_[s][w]) {
          p.reach_[s][w] = 1;
          todo.push_back(w);
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      bool covered = true;
      for (int z = 0; z < n && covered; ++z) {
        if (p.less(x, z) && p.less(z, y)) covered = false;
      }
      if (covered) p.covers_.emplace_back(x, y);
    }
  }
  p.elements_ = std::move(elements);
  return p;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(size()); ++x) {
    bool maximal = true;
    for (const auto& [a, b] : covers_) maximal = maximal && a != x;
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(size()); ++x) {
    bool minimal = true;
    for (const auto& [a, b] : covers_) minimal = minimal && b != x;
    if (minimal) out.push_back(x);
  }
  return out;
}

int Poset::longest_chain() const {
  const int n = static_cast<int>(size());
  // Heights by relaxation over covers; the cover graph is acyclic.
  std::vector<int> height(n, 1);
  for (int pass = 0; pass < n; ++pass) {
    bool moved = false;
    for (const auto& [a, b] : covers_) {
      if (height[a] + 1 > height[b]) {
        height[b] = height[a] + 1;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return n == 0 ? 0 : *std::max_element(height.begin(), height.end());
}

Poset chain_poset(int length, const std::string& prefix) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  for (int i = 1; i <= length; ++i) {
    elements.push_back(prefix + std::to_string(i));
    if (i > 1) relations.emplace_back(elements[i - 2], elements[i - 1]);
  }
  return build_poset(std::move(elements), relations);
}

Poset antichain_poset(int size, const std::string& prefix) {
  std::vector<std::string> elements;
  for (int i = 1; i <= size; ++i) elements.push_back(prefix + std::to_string(i));
  return build_poset(std::move(elements), {});
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  std::set<std::string> taken(p.elements().begin(), p.elements().end());
  std::vector<std::string> elements = p.elements();
  std::vector<std::string> renamed;
  for (const auto& id : q.elements()) {
    std::string name = id;
    while (taken.count(name)) name += "'";
    taken.insert(name);
    renamed.push_back(name);
    elements.push_back(name);
  }
  std::vector<std::pair<std::string, std::string>> relations;
  for (const auto& [x, y] : p.covers()) relations.emplace_back(p.elements()[x], p.elements()[y]);
  for (const auto& [x, y] : q.covers()) relations.emplace_back(renamed[x], renamed[y]);
  return build_poset(std::move(elements), relations);
}

ShiftedSystem order_polytope_system(const Poset& p) {
  std::vector<CoverConstraint> covers;
  for (const auto& [x, y] : p.covers()) covers.push_back({x, y});
  for (int m : p.minimal_elements()) covers.push_back({kDegreeSlot, m});
  return ShiftedSystem(p.elements(), p.maximal_elements(), std::move(covers), {});
}

Int a_invariant(const Poset& p) { return -min_feasible_degree(order_polytope_system(p), 1); }

Int b_invariant(const Poset& p) { return min_feasible_degree(order_polytope_system(p), -1); }

GeneratorDegrees generator_degrees(const Poset& p, Int shift, Int degree_window) {
  if (shift != 1 && shift != -1) throw PreconditionError("generator_degrees: shift must be 1 or -1");
  if (degree_window < 1) throw PreconditionError("generator_degrees: window must be at least 1");
  return generator_degrees(order_polytope_system(p), shift, degree_window);
}

Verdict hibi_ctr_scan(const Poset& p, Int degree_bound, Int k_max, Engine engine) {
  if (degree_bound < 1) throw PreconditionError("hibi_ctr_scan: degree bound must be at least 1");
  const ShiftedSystem system = order_polytope_system(p);
  Verdict v;
  v.ground = system.ground();
  const LatticePoint zero = system.zero(0);
  if (auto w = decompose(system, zero, engine)) {
    v.kind = VerdictKind::Gorenstein;
    v.witness = DecompositionCertificate{zero, *w};
    return v;
  }
  ScanCertificate scan = scan_ring_monomials(system, degree_bound, k_max, engine);
  v.bounds = Bounds{degree_bound, k_max};
  if (!scan.radical_not_trace.empty()) {
    const LatticePoint& mu = scan.radical_not_trace.front();
    v.kind = VerdictKind::NotCtr;
    v.witness = NonTraceCertificate{mu, radical_power_search(system, mu, k_max, engine), {}};
    return v;
  }
  v.kind = VerdictKind::CtrNotGorenstein;
  v.at_bound = true;
  v.witness = std::move(scan);
  v.notes.push_back("no ring monomial of degree <= " + std::to_string(degree_bound) +
                    " lies in the radical of the trace without lying in the trace (powers up to " +
                    std::to_string(k_max) + ")");
  return v;
}

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::False:
      return "false";
    case Tri::True:
      return "true";
    case Tri::Unknown:
      break;
  }
  return "unknown";
}

SegreReport segre_condition_report(const std::vector<Poset>& factors, Int level_window) {
  if (factors.size() < 2) throw PreconditionError("segre_condition_report: needs at least 2 factors");
  SegreReport report;
  auto tri = [](const GeneratorDegrees& g) {
    if (g.degrees.size() == 1) return Tri::True;
    if (g.degrees.size() > 1) return Tri::False;
    return Tri::Unknown;
  };
  for (const auto& p : factors) {
    SegreFactor f;
    f.a = a_invariant(p);
    f.b = b_invariant(p);
    f.level = tri(generator_degrees(p, 1, level_window));
    f.anticanonical_level = tri(generator_degrees(p, -1, level_window));
    f.dim_lower_bound = p.longest_chain() + 1;
    report.factors.push_back(f);
  }
  const auto& first = report.factors.front();
  report.predicted_a = first.a;
  report.predicted_b = first.b;
  bool ordering_ok = true;
  for (std::size_t i = 0; i < report.factors.size(); ++i) {
    const auto& f = report.factors[i];
    const std::string tag = "factor " + std::to_string(i + 1) + ": ";
    if (i > 0 && f.a < first.a) {
      ordering_ok = false;
      report.failures.push_back(tag + "a = " + std::to_string(f.a) + " < a_1 = " +
                                std::to_string(first.a));
    }
    if (i > 0 && f.b > first.b) {
      ordering_ok = false;
      report.failures.push_back(tag + "b = " + std::to_string(f.b) + " > b_1 = " +
                                std::to_string(first.b));
    }
    if (f.level != Tri::True) {
      report.failures.push_back(tag + "level is " + std::string(to_string(f.level)));
    }
    if (f.anticanonical_level != Tri::True) {
      report.failures.push_back(tag + "anticanonical level is " +
                                std::string(to_string(f.anticanonical_level)));
    }
    if (f.a >= 0) report.failures.push_back(tag + "a-invariant is not negative");
    if (f.dim_lower_bound < 2) report.failures.push_back(tag + "dimension below 2");
  }
  if (!ordering_ok) {
    const auto n = report.factors.size();
    for (std::size_t j = 0; j < n; ++j) {
      bool extremal = true;
      for (const auto& f : report.factors) {
        extremal = extremal && f.a >= report.factors[j].a && f.b <= report.factors[j].b;
      }
      if (!extremal) continue;
      std::vector<int> order{static_cast<int>(j)};
      for (std::size_t i = 0; i < n; ++i) {
        if (i != j) order.push_back(static_cast<int>(i));
      }
      report.reorder_hint = order;
      break;
    }
  }
  report.hypothesis_ok = report.failures.empty();
  report.assumptions = {
      "Hibi rings over a field are reduced normal domains",
      "a linear regular element exists (infinite base field)",
      "each factor is CTR: not decided here, see hibi_ctr_scan",
      "level flags are complete only within the degree window " + std::to_string(level_window)};
  return report;
}

}  // namespace ctrlab
