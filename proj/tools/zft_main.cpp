// Command line front end. Exit codes: 0 success, 1 failed verification suite,
// 2 usage or input error, 3 search guard refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zft/charlib.hpp"
#include "zft/graph.hpp"
#include "zft/jsonio.hpp"
#include "zft/propagation.hpp"
#include "zft/rules.hpp"
#include "zft/throttling.hpp"
#include "zft/verify.hpp"

using nlohmann::json;

namespace {

// Accepts a generator shorthand (P9, C16, K5, S6, W7, E4, KxP:3,3), a file of
// graph6 lines (first one is used), "-" for stdin, or a graph6 literal.
zft::Graph load_graph(const std::string& arg) {
  static const std::regex gen(R"(^([PCKSWE])([0-9]{1,2})$)");
  static const std::regex prod(R"(^KxP:([0-9]{1,2}),([0-9]{1,2})$)");
  std::smatch m;
  if (std::regex_match(arg, m, gen)) {
    int n = std::stoi(m[2]);
    switch (m[1].str()[0]) {
      case 'P': return zft::path_graph(n);
      case 'C': return zft::cycle_graph(n);
      case 'K': return zft::complete_graph(n);
      case 'S': return zft::star_graph(n);
      case 'W': return zft::wheel_graph(n);
      default: return zft::empty_graph(n);
    }
  }
  if (std::regex_match(arg, m, prod))
    return zft::complete_path_product(std::stoi(m[1]), std::stoi(m[2]));
  std::string line;
  if (arg == "-") {
    if (!std::getline(std::cin, line)) throw std::invalid_argument("no graph on stdin");
    return zft::parse_graph6(line);
  }
  if (std::ifstream in(arg); in) {
    while (std::getline(in, line))
      if (!line.empty()) return zft::parse_graph6(line);
    throw std::invalid_argument("no graph6 line in file " + arg);
  }
  return zft::parse_graph6(arg);
}

std::string join(const std::vector<int>& vs, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << sep;
    out << vs[i];
  }
  return out.str();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string graph;
  std::string rule = "Z";
  std::string blue;
  std::string format = "json";
  int t = 0;
  int max_n = 0;
  int round_limit = 0;
  int seed = 0;  // reserved: no command samples yet, kept for interface stability
  bool exact = false;
};

int run_pt(const Options& o) {
  zft::Graph g = load_graph(o.graph);
  zft::RuleId rule = zft::parse_rule(o.rule);
  zft::VertexSet blue = zft::parse_vertex_list(o.blue, g.order());
  zft::PtOptions opts;
  if (o.max_n > 0) opts.max_n = o.max_n;
  if (o.round_limit > 0) opts.round_limit = o.round_limit;
  zft::PtResult r = zft::pt_of_set(rule, g, blue, opts);
  if (o.format == "json") {
    json j = zft::schedule_to_json(r.schedule);
    j["graph6"] = zft::write_graph6(g);
    j["rule"] = zft::rule_name(rule);
    j["blue"] = zft::set_to_vector(blue);
    j["nodes_explored"] = r.nodes_explored;
    emit(j);
  } else if (o.format == "csv") {
    std::cout << zft::write_graph6(g) << "," << zft::rule_name(rule) << ","
              << join(zft::set_to_vector(blue), ';') << ","
              << (r.pt ? std::to_string(*r.pt) : "inf") << "\n";
  } else {
    std::cout << "pt = " << (r.pt ? std::to_string(*r.pt) : "inf") << "\n";
    for (const zft::TimedForce& tf : r.schedule.forces)
      std::cout << "  round " << tf.step << ": " << tf.force.source
                << (tf.force.kind == zft::ForceKind::Hop ? " ~> " : " -> ")
                << tf.force.target << "\n";
  }
  return 0;
}

int run_throttle(const Options& o) {
  zft::Graph g = load_graph(o.graph);
  zft::RuleId rule = zft::parse_rule(o.rule);
  zft::ThrottlingResult r = zft::throttling_number(rule, g, o.max_n);
  if (o.format == "json") {
    json j = zft::throttling_to_json(r);
    j["graph6"] = zft::write_graph6(g);
    j["rule"] = zft::rule_name(rule);
    emit(j);
  } else if (o.format == "csv") {
    std::cout << zft::write_graph6(g) << "," << zft::rule_name(rule) << "," << r.value << ","
              << join(zft::set_to_vector(r.witness), ';') << "\n";
  } else {
    std::cout << "th = " << r.value << " with seed {" << join(zft::set_to_vector(r.witness), ',')
              << "}\n";
  }
  return 0;
}

int run_forcing(const Options& o) {
  zft::Graph g = load_graph(o.graph);
  zft::RuleId rule = zft::parse_rule(o.rule);
  zft::ForcingNumberResult r = zft::forcing_number(rule, g);
  if (o.format == "json") {
    json j{{"graph6", zft::write_graph6(g)},
           {"rule", zft::rule_name(rule)},
           {"number", r.number},
           {"witness", zft::set_to_vector(r.witness)}};
    if (r.pt)
      j["pt"] = *r.pt;
    else
      j["pt"] = "inf";
    emit(j);
  } else if (o.format == "csv") {
    std::cout << zft::write_graph6(g) << "," << zft::rule_name(rule) << "," << r.number << ","
              << join(zft::set_to_vector(r.witness), ';') << "\n";
  } else {
    std::cout << "forcing number = " << r.number << " with seed {"
              << join(zft::set_to_vector(r.witness), ',') << "}\n";
  }
  return 0;
}

int run_extend(const Options& o) {
  zft::Graph g = load_graph(o.graph);
  zft::RuleId rule = zft::parse_rule(o.rule);
  if (rule != zft::RuleId::Z)
    throw std::invalid_argument("extension arrays are built from plain Z chains");
  zft::VertexSet blue = zft::parse_vertex_list(o.blue, g.order());
  zft::PtResult r = zft::pt_of_set(rule, g, blue);
  if (!r.pt) throw std::invalid_argument("blue set never finishes; nothing to extend");
  zft::Extension ext = zft::build_extension(g, blue, r.witness);
  if (o.format == "json") {
    emit(zft::extension_to_json(ext));
  } else {
    std::cout << ext.rows << " x " << ext.cols << " array on "
              << ext.graph.order() << " copies, graph6 " << zft::write_graph6(ext.graph) << "\n";
  }
  return 0;
}

int run_catalog(const Options& o) {
  zft::RuleId rule = zft::parse_rule(o.rule);
  zft::Catalog c = zft::catalog(rule, o.t);
  if (o.format == "json") {
    emit(json{{"rule", zft::rule_name(rule)},
              {"t", c.t},
              {"all", c.all},
              {"exact", c.exact}});
  } else {
    for (const std::string& g6 : o.exact ? c.exact : c.all) std::cout << g6 << "\n";
  }
  return 0;
}

int run_char_test(const Options& o) {
  zft::Graph g = load_graph(o.graph);
  zft::RuleId rule = zft::parse_rule(o.rule);
  std::optional<zft::Witness> w;
  if (rule == zft::RuleId::FloorZ)
    w = zft::obtainable_floor(g, o.t);
  else if (rule == zft::RuleId::Z)
    w = zft::obtainable_standard(g, o.t);
  else
    throw std::invalid_argument("membership tests exist for Z and floorZ only");
  if (o.format == "json") {
    json j{{"graph6", zft::write_graph6(g)},
           {"rule", zft::rule_name(rule)},
           {"t", o.t},
           {"obtainable", w.has_value()}};
    j["witness"] = w ? zft::witness_to_json(*w) : json(nullptr);
    emit(j);
  } else if (w) {
    std::cout << "yes: a=" << w->a << " b=" << w->b << " contract " << w->contracted.size()
              << " delete " << w->deleted.size() << "\n";
  } else {
    std::cout << "no\n";
  }
  return 0;
}

int run_verify(const std::vector<std::string>& names, const std::string& format) {
  std::vector<zft::SuiteResult> results;
  if (names.empty()) {
    results = zft::run_all_suites();
  } else {
    for (const std::string& name : names) results.push_back(zft::run_suite(name));
  }
  int failures = 0;
  for (const auto& r : results)
    if (!r.pass) ++failures;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back({{"suite", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit(arr);
  } else {
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero forcing propagation and throttling toolkit"};
  app.require_subcommand(1);

  Options o;
  std::vector<std::string> suites;
  bool list_suites = false;

  auto add_common = [&](CLI::App* cmd, bool wants_graph) {
    if (wants_graph)
      cmd->add_option("graph", o.graph,
                      "generator (P9, C16, K5, S6, W7, E4, KxP:3,3), graph6 string, "
                      "file of graph6 lines, or - for stdin")
          ->required();
    cmd->add_option("--rule", o.rule, "Z, Z+, Zl, floorZ, floorZ+ or floorZl");
    cmd->add_option("--format", o.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--seed", o.seed, "random seed (reserved)");
    return cmd;
  };

  CLI::App* pt = add_common(app.add_subcommand("pt", "propagation time of a blue set"), true);
  pt->add_option("--blue", o.blue, "comma separated blue vertices")->required();
  pt->add_option("--max-n", o.max_n, "override the floor search order guard");
  pt->add_option("--round-limit", o.round_limit,
                 "floor rules: give up the schedule search past this many rounds");

  CLI::App* th = add_common(app.add_subcommand("throttle", "minimize |B| plus propagation time"), true);
  th->add_option("--max-n", o.max_n, "override the search order guard");

  add_common(app.add_subcommand("forcing-number", "least blue set that finishes"), true);

  CLI::App* ext = add_common(app.add_subcommand("extend", "array of vertex copies from a fastest force set"), true);
  ext->add_option("--blue", o.blue, "comma separated blue vertices")->required();

  CLI::App* cat = add_common(app.add_subcommand("catalog", "every graph with throttling at most t"), false);
  cat->add_option("--t", o.t, "throttling value")->required();
  cat->add_flag("--exact", o.exact, "list only graphs meeting t exactly");

  CLI::App* chr = add_common(app.add_subcommand("char-test", "array obtainability membership test"), true);
  chr->add_option("--t", o.t, "throttling value")->required();

  CLI::App* ver = app.add_subcommand("verify", "run named check suites (all by default)");
  ver->add_option("suites", suites, "suite names");
  ver->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  ver->add_flag("--list", list_suites, "list suite names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (pt->parsed()) return run_pt(o);
    if (th->parsed()) return run_throttle(o);
    if (app.get_subcommand("forcing-number")->parsed()) return run_forcing(o);
    if (ext->parsed()) return run_extend(o);
    if (cat->parsed()) return run_catalog(o);
    if (chr->parsed()) return run_char_test(o);
    if (ver->parsed()) {
      if (list_suites) {
        for (const std::string& name : zft::suite_names()) std::cout << name << "\n";
        return 0;
      }
      return run_verify(suites, o.format);
    }
  } catch (const zft::GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
