#pragma once

// Color change rules. A force moves one white vertex to blue; `spent` records
// vertices that have already performed a force (self forces count: the target
// forced itself). Spent-ness gates nothing under Zplus/Zloop standard forces
// (those rules let a vertex force repeatedly) but always gates hop eligibility
// under the floor rules, and gates standard forces under Z/FloorZ where a
// forcing vertex goes inactive.

#include <string>
#include <vector>

#include "zft/graph.hpp"

namespace zft {

enum class RuleId { Z, Zplus, Zloop, FloorZ, FloorZplus, FloorZloop };

RuleId parse_rule(const std::string& name);
std::string rule_name(RuleId rule);
bool is_floor(RuleId rule);
RuleId base_rule(RuleId rule);   // identity on non-floor rules
RuleId floor_rule(RuleId rule);  // identity on floor rules

enum class ForceKind { Standard, Hop, SelfLoop };

std::string kind_name(ForceKind kind);

struct Force {
  int source = 0;
  int target = 0;
  ForceKind kind = ForceKind::Standard;

  bool operator==(const Force&) const = default;
  auto operator<=>(const Force&) const = default;
};

struct ForcingState {
  VertexSet blue = 0;
  VertexSet spent = 0;

  bool operator==(const ForcingState&) const = default;
};

bool valid_state(const Graph& g, ForcingState s);

// Every force the rule admits from this state, sorted by (kind, source, target).
std::vector<Force> admissible_forces(RuleId rule, const Graph& g, ForcingState s);

bool is_admissible(RuleId rule, const Graph& g, ForcingState s, Force f);

// Applies one admissible force: target turns blue; source becomes spent (for
// a self force that is the target itself). Throws if the force is not
// admissible from s.
ForcingState apply_force(RuleId rule, const Graph& g, ForcingState s, Force f);

}  // namespace zft
