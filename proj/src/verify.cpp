#include "zft/verify.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "zft/charlib.hpp"
#include "zft/enumerate.hpp"
#include "zft/graph.hpp"
#include "zft/propagation.hpp"
#include "zft/rules.hpp"
#include "zft/throttling.hpp"

namespace zft {
namespace {

SuiteResult passed(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

SuiteResult failed(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

std::string vs(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : set_to_vector(s)) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string opt_str(std::optional<int> v) { return v ? std::to_string(*v) : "inf"; }

constexpr RuleId kFloorRules[] = {RuleId::FloorZ, RuleId::FloorZplus, RuleId::FloorZloop};

SuiteResult path_formula_suite() {
  const std::string name = "path-formula";
  for (int n = 1; n <= 16; ++n) {
    int want = path_throttling_formula(n);
    int got = throttling_number(RuleId::Z, path_graph(n)).value;
    if (got != want) {
      std::ostringstream out;
      out << "P_" << n << ": search " << got << " vs formula " << want;
      return failed(name, out.str());
    }
  }
  return passed(name, "standard throttling of P_n matches ceil(2*sqrt(n)-1) for n = 1..16");
}

SuiteResult cycle_formula_suite() {
  const std::string name = "cycle-formula";
  for (int n = 3; n <= 16; ++n) {
    int want = cycle_throttling_formula(n);
    int got = throttling_number(RuleId::Z, cycle_graph(n)).value;
    if (got != want) {
      std::ostringstream out;
      out << "C_" << n << ": search " << got << " vs formula " << want;
      return failed(name, out.str());
    }
  }
  return passed(name, "standard throttling of C_n matches the case formula for n = 3..16");
}

SuiteResult floor_cycle_suite() {
  const std::string name = "floor-cycle";
  for (int n = 3; n <= 10; ++n) {
    int want = floor_cycle_formula(n);
    if (want != path_throttling_formula(n))
      return failed(name, "cycle and path formulas disagree at n = " + std::to_string(n));
    int got = throttling_number(RuleId::FloorZ, cycle_graph(n)).value;
    if (got != want) {
      std::ostringstream out;
      out << "C_" << n << ": search " << got << " vs formula " << want;
      return failed(name, out.str());
    }
  }
  return passed(name, "hop throttling of C_n matches ceil(2*sqrt(n)-1) for n = 3..10");
}

SuiteResult pt_oracle_suite() {
  const std::string name = "pt-oracle";
  long long checked = 0;
  long long bad[3] = {0, 0, 0};
  std::string first[3];
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      for (VertexSet b = 0; b <= full_set(n); ++b) {
        for (int ri = 0; ri < 3; ++ri) {
          RuleId rule = kFloorRules[ri];
          std::optional<int> direct = pt_of_set(rule, g, b).pt;
          std::optional<int> oracle = pt_via_supergraphs(base_rule(rule), g, b);
          if (direct != oracle) {
            if (bad[ri]++ == 0) {
              std::ostringstream out;
              out << write_graph6(g) << " B=" << vs(b) << " direct " << opt_str(direct)
                  << " vs supergraph min " << opt_str(oracle);
              first[ri] = out.str();
            }
          }
          ++checked;
        }
      }
    }
  }
  std::ostringstream out;
  if (bad[0] + bad[1] + bad[2] == 0) {
    out << checked << " (graph, set, rule) propagation times match the supergraph minimum";
    return passed(name, out.str());
  }
  for (int ri = 0; ri < 3; ++ri) {
    if (ri) out << "; ";
    out << rule_name(kFloorRules[ri]) << ": " << bad[ri] << " mismatches";
    if (bad[ri]) out << " (first: " << first[ri] << ")";
  }
  return failed(name, out.str());
}

SuiteResult th_oracle_suite() {
  const std::string name = "th-oracle";
  long long checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      int direct = throttling_number(RuleId::FloorZ, g).value;
      int oracle = th_via_supergraphs(g);
      if (direct != oracle) {
        std::ostringstream out;
        out << write_graph6(g) << ": direct " << direct << " vs supergraph min " << oracle;
        return failed(name, out.str());
      }
      ++checked;
    }
  }
  std::ostringstream out;
  out << checked << " hop throttling numbers match the supergraph minimum";
  return passed(name, out.str());
}

SuiteResult subgraph_monotone_suite() {
  const std::string name = "subgraph-monotone";
  long long checked = 0;
  long long bad[3] = {0, 0, 0};
  std::string first[3];
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& h : graphs_up_to_iso(n)) {
      for (int ri = 0; ri < 3; ++ri) {
        RuleId rule = kFloorRules[ri];
        int th_h = throttling_number(rule, h).value;
        auto record = [&](int th_g, const std::string& what) {
          ++checked;
          if (th_g <= th_h) return;
          if (bad[ri]++ == 0) {
            std::ostringstream out;
            out << write_graph6(h) << " minus " << what << ": " << th_g << " > " << th_h;
            first[ri] = out.str();
          }
        };
        for (const Edge& e : h.edges()) {
          std::ostringstream what;
          what << "edge (" << e.first << "," << e.second << ")";
          record(throttling_number(rule, delete_edge(h, e)).value, what.str());
        }
        for (int v = 0; v < n; ++v)
          record(throttling_number(rule, delete_vertex(h, v).first).value,
                 "vertex " + std::to_string(v));
      }
    }
  }
  std::ostringstream out;
  bool ok = true;
  for (int ri = 0; ri < 3; ++ri) {
    if (ri) out << "; ";
    out << rule_name(kFloorRules[ri]) << ": ";
    if (bad[ri] == 0) {
      out << "no deletion raised the value";
    } else {
      ok = false;
      out << bad[ri] << " deletions raised it (first: " << first[ri] << ")";
    }
  }
  if (ok) {
    std::ostringstream done;
    done << checked << " single deletions never raised a floor throttling number";
    return passed(name, done.str());
  }
  return failed(name, out.str());
}

SuiteResult characterization_suite() {
  const std::string name = "characterization";
  long long checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      int th_floor = throttling_number(RuleId::FloorZ, g).value;
      int th_std = throttling_number(RuleId::Z, g).value;
      for (int t = 1; t <= 5; ++t) {
        std::optional<Witness> wf = obtainable_floor(g, t);
        if (wf.has_value() != (th_floor <= t)) {
          std::ostringstream out;
          out << write_graph6(g) << " t=" << t << ": floor membership " << wf.has_value()
              << " but th = " << th_floor;
          return failed(name, out.str());
        }
        if (wf && !is_isomorphic(replay_witness(*wf), g))
          return failed(name, write_graph6(g) + ": floor witness replay is not isomorphic");
        std::optional<Witness> ws = obtainable_standard(g, t);
        if (ws.has_value() != (th_std <= t)) {
          std::ostringstream out;
          out << write_graph6(g) << " t=" << t << ": standard membership " << ws.has_value()
              << " but th = " << th_std;
          return failed(name, out.str());
        }
        if (ws && !is_isomorphic(replay_witness(*ws), g))
          return failed(name, write_graph6(g) + ": standard witness replay is not isomorphic");
        checked += 2;
      }
    }
  }
  std::ostringstream out;
  out << checked << " membership tests agree with the searched throttling numbers (n <= 6, t <= 5)";
  return passed(name, out.str());
}

SuiteResult catalog_t3_suite() {
  const std::string name = "catalog-t3";
  // the ten graphs with hop throttling number exactly 3
  std::vector<Graph> family;
  family.push_back(complete_graph(3));
  family.push_back(path_graph(3));
  family.push_back(disjoint_union(path_graph(2), path_graph(1)));
  family.push_back(empty_graph(3));
  family.push_back(cycle_graph(4));
  family.push_back(path_graph(4));
  family.push_back(disjoint_union(path_graph(2), path_graph(2)));
  family.push_back(disjoint_union(path_graph(3), path_graph(1)));
  family.push_back(disjoint_union(path_graph(2), empty_graph(2)));
  family.push_back(empty_graph(4));
  std::set<std::string> want;
  for (const Graph& g : family) want.insert(canonical_form(g));
  if (want.size() != 10) return failed(name, "reference family collapsed under canonicalization");

  Catalog cat = catalog(RuleId::FloorZ, 3);
  std::set<std::string> got(cat.exact.begin(), cat.exact.end());
  if (got != want) {
    std::ostringstream out;
    out << "exact catalog has " << got.size() << " graphs, expected the known 10;";
    for (const std::string& s : got)
      if (!want.count(s)) out << " extra " << s;
    for (const std::string& s : want)
      if (!got.count(s)) out << " missing " << s;
    return failed(name, out.str());
  }
  for (const std::string& s : got) {
    Graph g = parse_graph6(s);
    int th = throttling_number(RuleId::FloorZ, g).value;
    if (th != 3)
      return failed(name, s + " is in the exact catalog but its searched value is " +
                              std::to_string(th));
  }
  return passed(name, "exact catalog at t = 3 equals the known 10-graph family");
}

SuiteResult chain_contraction_suite() {
  const std::string name = "chain-contraction";
  long long checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      for (VertexSet b = 0; b <= full_set(n); ++b) {
        PtResult r = pt_of_set(RuleId::Z, g, b);
        if (!r.pt) continue;
        for (const Force& f : r.witness.forces) {
          if (f.kind != ForceKind::Standard) continue;
          // throws if the contracted replay is slower
          ChainContraction c = contract_chain_edge(g, b, r.witness, make_edge(f.source, f.target));
          Schedule after = propagate_force_set(RuleId::Z, c.graph, c.blue, c.forces);
          if (!after.pt || *after.pt > *r.pt) {
            std::ostringstream out;
            out << write_graph6(g) << " B=" << vs(b) << " edge (" << f.source << "," << f.target
                << "): contracted pt " << opt_str(after.pt) << " vs " << *r.pt;
            return failed(name, out.str());
          }
          ++checked;
        }
      }
    }
  }
  std::ostringstream out;
  out << checked << " chain-edge contractions never slowed a replay (n <= 5, all forcing sets)";
  return passed(name, out.str());
}

SuiteResult extension_invariant_suite() {
  const std::string name = "extension-invariant";
  long long checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      for (VertexSet b = 1; b <= full_set(n); ++b) {
        PtResult r = pt_of_set(RuleId::Z, g, b);
        if (!r.pt) continue;
        Extension ext = build_extension(g, b, r.witness);
        if (ext.rows != popcount(b) || ext.cols != *r.pt + 1)
          return failed(name, write_graph6(g) + " B=" + vs(b) + ": wrong array shape");
        Graph prod = complete_path_product(ext.rows, ext.cols);
        if (ext.graph.order() != prod.order())
          return failed(name, write_graph6(g) + " B=" + vs(b) + ": order differs from product");
        for (const Edge& e : ext.graph.edges())
          if (!prod.has_edge(e.first, e.second)) {
            std::ostringstream out;
            out << write_graph6(g) << " B=" << vs(b) << ": edge (" << e.first << "," << e.second
                << ") missing from the product";
            return failed(name, out.str());
          }
        Graph recovered(g.order());
        for (const Edge& e : ext.graph.edges()) {
          int u = ext.origin[e.first];
          int v = ext.origin[e.second];
          if (u != v) recovered.add_edge(u, v);
        }
        if (!(recovered == g))
          return failed(name,
                        write_graph6(g) + " B=" + vs(b) + ": collapsing copies lost an edge");
        ++checked;
      }
    }
  }
  std::ostringstream out;
  out << checked << " extensions embed in the array product and collapse back to the original";
  return passed(name, out.str());
}

SuiteResult non_monotone_minor_suite() {
  const std::string name = "non-monotone-minor";
  NonMonotoneSearch s = find_non_monotone_minor();
  if (s.base_th != 5)
    return failed(name, "searched base value " + std::to_string(s.base_th) + ", expected 5");
  if (s.witness_index < 0 || s.witness_index >= static_cast<int>(s.classes.size()))
    return failed(name, "no contraction exceeded the base value");
  const ContractionClass& w = s.classes[s.witness_index];
  const std::vector<int> want_degrees = {5, 3, 3, 3, 3, 3, 3, 3};
  if (w.th != 6)
    return failed(name, "witness value " + std::to_string(w.th) + ", expected 6");
  if (w.degrees != want_degrees) {
    std::ostringstream out;
    out << "witness degrees";
    for (int d : w.degrees) out << ' ' << d;
    out << ", expected 5 3 3 3 3 3 3 3";
    return failed(name, out.str());
  }
  const std::vector<int> row_degrees = {5, 4, 4, 3, 3, 3, 3, 3};
  bool saw_row = false;
  for (const ContractionClass& c : s.classes) saw_row = saw_row || c.degrees == row_degrees;
  if (!saw_row) return failed(name, "no contraction class with degrees 5 4 4 3 3 3 3 3");
  std::ostringstream out;
  out << "base value 5; contracting one clique edge raises it to 6 (degrees 5 3 3 3 3 3 3 3)";
  return passed(name, out.str());
}

SuiteResult star_wheel_suite() {
  const std::string name = "star-wheel";
  int star_std = throttling_number(RuleId::Z, star_graph(6)).value;
  if (star_std != 6)
    return failed(name, "standard value on the 6-vertex star is " + std::to_string(star_std) +
                            ", expected 6");
  int cyc = throttling_number(RuleId::FloorZ, cycle_graph(5)).value;
  if (cyc + 1 != 5)
    return failed(name, "hop value on C_5 is " + std::to_string(cyc) + ", expected 4");
  int star_floor = throttling_number(RuleId::FloorZ, star_graph(6)).value;
  if (star_floor > cyc + 1)
    return failed(name, "hop value on the star is " + std::to_string(star_floor) +
                            ", above the C_5 bound " + std::to_string(cyc + 1));
  std::ostringstream out;
  out << "star: standard 6, hop " << star_floor << " <= 5 = hop(C_5) + 1";
  return passed(name, out.str());
}

SuiteResult alpha_bound_suite() {
  const std::string name = "alpha-bound";
  long long checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : graphs_up_to_iso(n)) {
      int th = throttling_number(RuleId::FloorZ, g).value;
      int bound = alpha_upper_bound(g);
      if (th > bound) {
        std::ostringstream out;
        out << write_graph6(g) << ": value " << th << " above independence bound " << bound;
        return failed(name, out.str());
      }
      if (th == n && independence_number(g) > 3) {
        std::ostringstream out;
        out << write_graph6(g) << ": value equals the order but alpha = "
            << independence_number(g);
        return failed(name, out.str());
      }
      ++checked;
    }
  }
  std::ostringstream out;
  out << checked << " graphs respect the independence bound (n <= 7); value n forces alpha <= 3";
  return passed(name, out.str());
}

using SuiteFn = SuiteResult (*)();

constexpr std::pair<const char*, SuiteFn> kSuites[] = {
    {"path-formula", path_formula_suite},
    {"cycle-formula", cycle_formula_suite},
    {"floor-cycle", floor_cycle_suite},
    {"pt-oracle", pt_oracle_suite},
    {"th-oracle", th_oracle_suite},
    {"subgraph-monotone", subgraph_monotone_suite},
    {"characterization", characterization_suite},
    {"catalog-t3", catalog_t3_suite},
    {"chain-contraction", chain_contraction_suite},
    {"extension-invariant", extension_invariant_suite},
    {"non-monotone-minor", non_monotone_minor_suite},
    {"star-wheel", star_wheel_suite},
    {"alpha-bound", alpha_bound_suite},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : kSuites) names.emplace_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& [key, fn] : kSuites) {
    if (name == key) {
      try {
        return fn();
      } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
      }
    }
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites() {
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : kSuites) results.push_back(run_suite(name));
  return results;
}

}  // namespace zft
