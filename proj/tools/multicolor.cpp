// multicolor: command-line front end for the list multicoloring solver.
//
// Exit codes: 0 success, 1 infeasible / not permissible, 2 input or usage
// error, 3 resource limit exceeded. Structured output is line-delimited JSON
// on stdout; diagnostics go to stderr.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include <multicolor/json_io.hpp>
#include <multicolor/multicolor.hpp>

namespace {

using namespace multicolor;
using io::Json;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;

struct Options {
  std::string instance;
  std::string sidecar;
  Limits limits;
  bool prune = false;
  bool emit_certificates = false;
  bool emit_mis = false;
  std::optional<std::size_t> limit;
  bool with_colorings = false;
  std::string precoloring;
  int base_colors = 0;
  bool exact = false;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Instance load(const Options& opt) {
  if (ends_with(opt.instance, ".col")) {
    std::string sidecar = opt.sidecar.empty() ? std::string{} : io::read_file(opt.sidecar);
    return io::parse_dimacs_instance(io::read_file(opt.instance), sidecar);
  }
  return io::parse_instance(io::read_file(opt.instance));
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int run_wmax(const Options& opt) {
  const Instance inst = load(opt);
  if (opt.emit_mis) {
    for (const auto& s : enumerate_mis(inst.graph)) emit(io::vector_json(s));
    return kOk;
  }
  const WmaxSet set = wmax(inst, {opt.prune, opt.limits});
  for (const auto& v : set.vectors) {
    if (opt.emit_certificates) {
      Json line = Json::object();
      line["vector"] = io::vector_json(v);
      line["certificate"] = io::certificate_json(inst, set.certificate(v));
      emit(line);
    } else {
      emit(io::vector_json(v));
    }
  }
  return kOk;
}

int run_check(const Options& opt) {
  const Instance inst = load(opt);
  auto witness = is_permissible(inst, opt.limits);
  if (!witness) {
    std::cout << "NOT PERMISSIBLE\n";
    return kInfeasible;
  }
  emit(io::vector_json(*witness));
  return kOk;
}

int run_color(const Options& opt) {
  const Instance inst = load(opt);
  try {
    emit(io::coloring_json(inst, find_coloring(inst, opt.limits)));
  } catch (const NotPermissible&) {
    std::cout << "NOT PERMISSIBLE\n";
    return kInfeasible;
  }
  return kOk;
}

int run_enumerate(const Options& opt) {
  const Instance inst = load(opt);
  auto stream = enumerate_colorings(inst, opt.limit, opt.limits);
  std::size_t count = 0;
  while (auto c = stream.next()) {
    emit(io::coloring_json(inst, *c));
    ++count;
  }
  if (count == 0 && !(opt.limit && *opt.limit == 0)) return kInfeasible;
  return kOk;
}

int run_chromatic(const Options& opt) {
  const Instance inst = load(opt);
  if (!all_colors(inst.lists).empty()) {
    std::cerr << "warning: lists in the instance are ignored; chromatic uses uniform lists {1..a}\n";
  }
  auto r = weighted_chromatic(inst.graph, inst.weight(), opt.limits);
  Json line = Json::object();
  line["chi"] = r.chi;
  line["coloring"] = io::coloring_json(inst, r.coloring);
  emit(line);
  return kOk;
}

int run_oncall(const Options& opt) {
  const Instance inst = load(opt);
  auto r = oncall_solutions(inst, opt.limits);
  if (r.already_permissible) std::cerr << "note: demand is already permissible\n";
  std::size_t i = 0;
  for (const auto& s : r.solutions) {
    if (opt.with_colorings) {
      Json line = Json::object();
      line["solution"] = io::vector_json(s);
      line["coloring"] = io::coloring_json(inst, r.colorings[i]);
      emit(line);
    } else {
      emit(io::vector_json(s));
    }
    ++i;
  }
  return kOk;
}

int run_extend(const Options& opt) {
  const Instance inst = load(opt);
  if (!all_colors(inst.lists).empty()) {
    std::cerr << "warning: lists in the instance are ignored; extend uses uniform lists\n";
  }
  const Coloring c0 = io::parse_coloring(io::read_file(opt.precoloring), inst);
  auto r = extend_coloring(inst.graph, opt.base_colors, c0, inst.weight(), opt.limits);
  Json line = Json::object();
  line["bound"] = r.bound;
  line["coloring"] = io::coloring_json(inst, r.coloring);
  if (opt.exact) {
    int exact = exact_nonrecolor_chi(inst.graph, opt.base_colors, c0, inst.weight(), opt.limits);
    line["exact"] = exact;
    line["relation"] = exact == r.bound ? "EQUALITY" : "STRICT";
  }
  emit(line);
  return kOk;
}

int run_verify(const Options& opt) {
  const Instance inst = load(opt);
  const WeightVector& w = inst.weight();
  bool all_pass = true;
  auto report = [&](const char* check, bool pass, Json detail) {
    Json line = Json::object();
    line["check"] = check;
    line["status"] = pass ? "PASS" : "FAIL";
    for (auto& [k, v] : detail.items()) line[k] = v;
    emit(line);
    all_pass = all_pass && pass;
  };
  auto skip = [&](const char* check, const std::string& why) {
    Json line = Json::object();
    line["check"] = check;
    line["status"] = "SKIP";
    line["reason"] = why;
    emit(line);
  };

  const bool solver = is_permissible(inst, opt.limits).has_value();
  const bool brute = oracle::brute_colorable(inst, opt.limits).has_value();
  report("permissible", solver == brute, Json{{"solver", solver}, {"oracle", brute}});

  try {
    auto expected = oracle::brute_all_colorings(inst, opt.limits);
    auto got = collect(enumerate_colorings(inst, std::nullopt, opt.limits));
    std::set<Coloring> got_set(got.begin(), got.end());
    report("enumeration", got_set == expected && got_set.size() == got.size(),
           Json{{"solver", got.size()}, {"oracle", expected.size()}});
  } catch (const ResourceLimitExceeded& e) {
    skip("enumeration", e.what());
  }

  try {
    int chi = weighted_chromatic(inst.graph, w, opt.limits).chi;
    int brute_chi = oracle::brute_chromatic(inst.graph, w, opt.limits);
    report("chromatic", chi == brute_chi, Json{{"solver", chi}, {"oracle", brute_chi}});
  } catch (const ResourceLimitExceeded& e) {
    skip("chromatic", e.what());
  }

  if (all_colors(inst.lists).empty()) {
    skip("oncall", "instance has no colors");
  } else {
    try {
      auto solver_set = oncall_solutions(inst, opt.limits).solutions;
      auto brute_set = oracle::brute_oncall(inst, opt.limits);
      report("oncall", solver_set == brute_set,
             Json{{"solver", solver_set.size()}, {"oracle", brute_set.size()}});
    } catch (const ResourceLimitExceeded& e) {
      skip("oncall", e.what());
    }
  }
  return all_pass ? kOk : kInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List multicoloring of weighted graphs"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-vectors", opt.limits.max_vectors, "Cap on intermediate vector-set size")->capture_default_str();
  app.add_option("--max-branches", opt.limits.max_branches, "Cap on backtracking search nodes")->capture_default_str();

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("instance", opt.instance, "Instance file (.json, or DIMACS .col)")->required();
    sub->add_option("--sidecar", opt.sidecar, "Lists/weights JSON for a DIMACS instance");
    return sub;
  };

  auto* wmax_cmd = add("wmax", "Print W_max, one vector per line");
  wmax_cmd->add_flag("--prune-dominated", opt.prune, "Drop dominated vectors");
  wmax_cmd->add_flag("--emit-certificates", opt.emit_certificates, "Print a certificate with each vector");
  wmax_cmd->add_flag("--emit-mis", opt.emit_mis, "Print the maximal independent sets of the graph instead");
  auto* check_cmd = add("check", "Decide whether the instance weight is permissible");
  auto* color_cmd = add("color", "Print one coloring of the instance weight");
  auto* enum_cmd = add("enumerate", "Print every coloring of the instance weight");
  enum_cmd->add_option("--limit", opt.limit, "Stop after N colorings");
  auto* chromatic_cmd = add("chromatic", "Weighted chromatic number with a coloring");
  auto* oncall_cmd = add("oncall", "Nearest permissible weights below the demand");
  oncall_cmd->add_flag("--with-colorings", opt.with_colorings, "Print a witness coloring per solution");
  auto* extend_cmd = add("extend", "Extend a precoloring without recoloring");
  extend_cmd->add_option("--precoloring", opt.precoloring, "Coloring JSON to keep")->required();
  extend_cmd->add_option("--base-colors", opt.base_colors, "Colors 1..a0 used by the precoloring")->required();
  extend_cmd->add_flag("--exact", opt.exact, "Also compute the exact optimum by brute force");
  auto* verify_cmd = add("verify", "Cross-check the solver against the brute-force oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*wmax_cmd) return run_wmax(opt);
    if (*check_cmd) return run_check(opt);
    if (*color_cmd) return run_color(opt);
    if (*enum_cmd) return run_enumerate(opt);
    if (*chromatic_cmd) return run_chromatic(opt);
    if (*oncall_cmd) return run_oncall(opt);
    if (*extend_cmd) return run_extend(opt);
    if (*verify_cmd) return run_verify(opt);
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const NotPermissible& e) {
    std::cerr << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
