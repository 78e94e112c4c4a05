#include "rankbrittle/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "rankbrittle/cut_rank.hpp"
#include "rankbrittle/errors.hpp"
#include "rankbrittle/graph6.hpp"
#include "rankbrittle/serialize.hpp"
#include "rankbrittle/solvers.hpp"
#include "rankbrittle/spec_parser.hpp"
#include "rankbrittle/witnesses.hpp"

namespace rankbrittle {

namespace {

struct GraphInput {
  Graph graph;
  json echo;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file holding a single token is graph6; anything longer is an edge list.
Graph graph_from_file_text(const std::string& text) {
  std::istringstream tokens(text);
  std::string first;
  std::string second;
  tokens >> first >> second;
  if (second.empty() && first.rfind('#', 0) != 0) return from_graph6(first);
  std::istringstream in(text);
  return parse_edge_list(in);
}

GraphInput load_graph(const std::string& positional, const std::string& family) {
  if (!positional.empty() && !family.empty()) throw InputError("give either a graph or --family, not both");
  if (!family.empty()) return {parse_graph_expression(family), {{"family", family}}};
  if (positional.empty()) throw InputError("no graph given (graph6 literal, @file, or --family)");
  if (positional.front() == '@') {
    const std::string path = positional.substr(1);
    return {graph_from_file_text(read_file(path)), {{"file", path}}};
  }
  return {from_graph6(positional), {{"graph6_input", positional}}};
}

VertexSet parse_set(const std::string& text, int n) {
  VertexSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + item + "' in --set");
    }
    if (used != item.size() || v < 0 || v >= n) throw InputError("vertex '" + item + "' in --set is out of range");
    s.insert(v);
  }
  return s;
}

json caps_json(const SolverCaps& c) {
  return {{"rbrit1", c.rbrit1_max_n}, {"rbrit2", c.rbrit2_max_n}, {"rbrit", c.rbrit_max_n},
          {"rankdepth", c.rank_depth_max_n}, {"beta", c.beta_max_n}, {"lrw", c.lrw_max_n},
          {"vm", c.vertex_minor_max_n}, {"orbit", c.orbit_cap}, {"iso", c.iso_node_limit}};
}

void print_table(std::ostream& out, const json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      print_table(out, value, name);
    } else {
      out << name << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

void emit(std::ostream& out, const json& report, const std::string& format) {
  if (format == "table") {
    print_table(out, report);
  } else {
    out << report.dump() << '\n';
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct ParamArgs {
  std::string which;
  std::string graph;
  std::string family;
  std::string set;
  int depth = 0;
  int k = 0;
};

json run_param(const ParamArgs& a, const SolverOptions& opts) {
  const auto input = load_graph(a.graph, a.family);
  const Graph& g = input.graph;
  json report;
  report["command"] = "param " + a.which;
  report["input"] = input.echo;
  report["input"]["graph6"] = g.order() <= 62 ? json(to_graph6(g)) : json(nullptr);
  report["input"]["n"] = g.order();

  if (a.which == "cutrank") {
    if (a.set.empty()) throw InputError("cutrank requires --set");
    const VertexSet s = parse_set(a.set, g.order());
    report["set"] = json_of(s);
    report["value"] = cut_rank(g, s);
  } else if (a.which == "rbrit") {
    if (a.depth < 1) throw InputError("rbrit requires --depth d with d >= 1");
    const auto r = rbrit_exact(g, a.depth, opts);
    report["depth"] = a.depth;
    report["value"] = r.value;
    report["witness"] = r.witness ? json_of(*r.witness) : json(nullptr);
  } else if (a.which == "rankdepth") {
    const auto r = rank_depth_exact(g, opts);
    report["value"] = r.value;
    report["witness"] = r.witness ? json_of(*r.witness) : json(nullptr);
  } else if (a.which == "lrw") {
    const auto r = lrw_exact(g, opts);
    report["value"] = r.width;
    report["witness"] = json_of(r);
  } else if (a.which == "betark") {
    if (a.k < 1) throw InputError("betark requires --k with k >= 1");
    const auto r = beta_rho_k(g, a.k, opts);
    report["k"] = a.k;
    report["value"] = r.value;
    report["witness"] = json_of(r.witness);
  } else {
    throw InputError("unknown parameter '" + a.which + "'");
  }
  return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cut-rank, rank-depth and rank-brittleness toolkit", "rankbrittle"};
  app.require_subcommand(1);
  std::string format = "json";
  int threads = 1;
  std::string caps_override;

  ParamArgs pa;
  auto* param = app.add_subcommand("param", "Compute a width parameter exactly, with a witness");
  param->add_option("which", pa.which, "cutrank | rbrit | rankdepth | lrw | betark")->required();
  param->add_option("graph", pa.graph, "graph6 literal or @file (graph6 or edge list)");
  param->add_option("--family", pa.family, "Graph expression, e.g. path:4 or prod(half,edgeless:2,edgeless:2)");
  param->add_option("--set", pa.set, "Comma-separated vertex set for cutrank");
  param->add_option("--depth", pa.depth, "Radius bound for rbrit");
  param->add_option("--k", pa.k, "Part-size bound for betark");

  std::string spec;
  auto* construct = app.add_subcommand("construct", "Print the graph6 string of a graph expression");
  construct->add_option("spec", spec, "Graph expression")->required();

  std::string lemma;
  VerifyOptions vo;
  std::size_t orbit_cap = 0;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Run a lemma verification and report each check");
  verify->add_option("lemma", lemma, "Lemma id (see --list)");
  verify->add_flag("--list", list, "List lemma ids");
  verify->add_option("--n", vo.n, "Size parameter");
  verify->add_option("--samples", vo.samples, "Random samples, where applicable");
  verify->add_option("--seed", vo.seed, "Seed for all random sampling");
  verify->add_option("--orbit-cap", orbit_cap, "Cap on local-complementation orbit size");

  for (auto* sub : {param, verify}) {
    sub->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));
  }
  std::string construct_format = "graph6";
  construct->add_option("--format", construct_format, "graph6 | json | table")
      ->check(CLI::IsMember({"graph6", "json", "table"}));
  for (auto* sub : {param, verify}) {
    sub->add_option("--threads", threads, "Worker threads for exact search")->check(CLI::PositiveNumber);
    sub->add_option("--caps", caps_override, "Solver cap overrides, as in RANKBRITTLE_CAPS");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  SolverOptions opts;
  try {
    opts.caps = SolverCaps::from_env();
    opts.caps.apply_overrides(caps_override);
    if (orbit_cap > 0) opts.caps.orbit_cap = orbit_cap;
    opts.threads = threads;

    if (*construct) {
      const Graph g = parse_graph_expression(spec);
      if (g.order() > 62) throw InputError("graph has more than 62 vertices; graph6 short form cannot encode it");
      if (construct_format == "json") {
        out << json{{"spec", spec}, {"n", g.order()}, {"graph6", to_graph6(g)}}.dump() << '\n';
      } else {
        out << to_graph6(g) << '\n';
      }
      return kExitOk;
    }

    if (*param) {
      json report = run_param(pa, opts);
      report["caps"] = caps_json(opts.caps);
      report["timing_ms"] = elapsed_ms(start);
      emit(out, report, format);
      return kExitOk;
    }

    if (list) {
      for (const auto& id : lemma_ids()) out << id << '\n';
      return kExitOk;
    }
    if (lemma.empty()) throw InputError("verify needs a lemma id (see --list)");
    vo.solver = opts;
    const auto rep = run_lemma(lemma, vo);
    json report = rep.to_json();
    report["caps"] = caps_json(opts.caps);
    report["timing_ms"] = elapsed_ms(start);
    emit(out, report, format);
    return rep.passed() ? kExitOk : kExitFailed;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    emit(out, json{{"error", "resource"}, {"message", e.what()}, {"caps_hit", true}, {"caps", caps_json(opts.caps)}}, format);
    return kExitResource;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    emit(out, json{{"error", "input"}, {"message", e.what()}}, format);
    return kExitInput;
  }
}

}  // namespace rankbrittle
