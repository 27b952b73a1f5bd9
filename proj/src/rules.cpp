#include "zft/rules.hpp"

#include <algorithm>

namespace zft {

RuleId parse_rule(const std::string& name) {
  if (name == "Z") return RuleId::Z;
  if (name == "Z+") return RuleId::Zplus;
  if (name == "Zl") return RuleId::Zloop;
  if (name == "floorZ") return RuleId::FloorZ;
  if (name == "floorZ+") return RuleId::FloorZplus;
  if (name == "floorZl") return RuleId::FloorZloop;
  throw std::invalid_argument("unknown rule: " + name +
                              " (expected Z, Z+, Zl, floorZ, floorZ+, floorZl)");
}

std::string rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::Z: return "Z";
    case RuleId::Zplus: return "Z+";
    case RuleId::Zloop: return "Zl";
    case RuleId::FloorZ: return "floorZ";
    case RuleId::FloorZplus: return "floorZ+";
    case RuleId::FloorZloop: return "floorZl";
  }
  throw std::logic_error("bad rule id");
}

bool is_floor(RuleId rule) {
  return rule == RuleId::FloorZ || rule == RuleId::FloorZplus || rule == RuleId::FloorZloop;
}

RuleId base_rule(RuleId rule) {
  switch (rule) {
    case RuleId::FloorZ: return RuleId::Z;
    case RuleId::FloorZplus: return RuleId::Zplus;
    case RuleId::FloorZloop: return RuleId::Zloop;
    default: return rule;
  }
}

RuleId floor_rule(RuleId rule) {
  switch (rule) {
    case RuleId::Z: return RuleId::FloorZ;
    case RuleId::Zplus: return RuleId::FloorZplus;
    case RuleId::Zloop: return RuleId::FloorZloop;
    default: return rule;
  }
}

std::string kind_name(ForceKind kind) {
  switch (kind) {
    case ForceKind::Standard: return "standard";
    case ForceKind::Hop: return "hop";
    case ForceKind::SelfLoop: return "self";
  }
  throw std::logic_error("bad force kind");
}

bool valid_state(const Graph& g, ForcingState s) {
  VertexSet all = g.vertex_mask();
  return (s.blue & ~all) == 0 && (s.spent & ~s.blue) == 0;
}

namespace {

void standard_forces(const Graph& g, ForcingState s, bool gate_on_spent,
                     std::vector<Force>& out) {
  VertexSet white = g.vertex_mask() & ~s.blue;
  VertexSet sources = gate_on_spent ? (s.blue & ~s.spent) : s.blue;
  for_each_vertex(sources, [&](int v) {
    VertexSet wn = g.neighbors(v) & white;
    if (popcount(wn) == 1) out.push_back({v, first_vertex(wn), ForceKind::Standard});
  });
}

// Standard rule applied inside each white component together with the blues.
void psd_forces(const Graph& g, ForcingState s, std::vector<Force>& out) {
  VertexSet white = g.vertex_mask() & ~s.blue;
  if (!white) return;
  auto comps = connected_components(g, white);
  for_each_vertex(s.blue, [&](int v) {
    for (VertexSet comp : comps) {
      VertexSet wn = g.neighbors(v) & comp;
      if (popcount(wn) == 1) out.push_back({v, first_vertex(wn), ForceKind::Standard});
    }
  });
}

void self_forces(const Graph& g, ForcingState s, std::vector<Force>& out) {
  VertexSet white = g.vertex_mask() & ~s.blue;
  for_each_vertex(white, [&](int w) {
    if ((g.neighbors(w) & ~s.blue) == 0) out.push_back({w, w, ForceKind::SelfLoop});
  });
}

// An active vertex with an all-blue neighborhood may force any white vertex.
void hop_forces(const Graph& g, ForcingState s, std::vector<Force>& out) {
  VertexSet white = g.vertex_mask() & ~s.blue;
  if (!white) return;
  for_each_vertex(s.blue & ~s.spent, [&](int v) {
    if ((g.neighbors(v) & white) != 0) return;
    for_each_vertex(white, [&](int w) { out.push_back({v, w, ForceKind::Hop}); });
  });
}

}  // namespace

std::vector<Force> admissible_forces(RuleId rule, const Graph& g, ForcingState s) {
  if (!valid_state(g, s)) throw std::invalid_argument("admissible_forces: invalid state");
  std::vector<Force> out;
  switch (base_rule(rule)) {
    case RuleId::Z:
      standard_forces(g, s, /*gate_on_spent=*/true, out);
      break;
    case RuleId::Zplus:
      psd_forces(g, s, out);
      break;
    case RuleId::Zloop:
      standard_forces(g, s, /*gate_on_spent=*/false, out);
      self_forces(g, s, out);
      break;
    default:
      throw std::logic_error("base_rule returned a floor rule");
  }
  if (is_floor(rule)) hop_forces(g, s, out);
  std::sort(out.begin(), out.end(), [](const Force& a, const Force& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
  });
  return out;
}

bool is_admissible(RuleId rule, const Graph& g, ForcingState s, Force f) {
  auto all = admissible_forces(rule, g, s);
  return std::find(all.begin(), all.end(), f) != all.end();
}

ForcingState apply_force(RuleId rule, const Graph& g, ForcingState s, Force f) {
  if (!is_admissible(rule, g, s, f))
    throw std::invalid_argument("apply_force: force not admissible");
  s.blue |= bit(f.target);
  s.spent |= bit(f.source);
  return s;
}

}  // namespace zft
