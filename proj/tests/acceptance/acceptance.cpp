// Acceptance sweep. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Every comparison is exact.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <multicolor/json_io.hpp>
#include <multicolor/multicolor.hpp>

#include "../support/fixtures.hpp"

using namespace multicolor;
namespace mt = multicolor::test_support;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }
};

std::string describe(const Instance& inst) { return io::serialize_instance(inst); }

// Shared by criteria 1, 3, 5 and 6: connected graphs up to isomorphism with
// n <= 6 (three list draws each) and 500 random graphs with n <= 8.
struct SweepCase {
  Graph graph;
  ListAssignment lists;
  std::vector<WeightVector> weights;
};

std::vector<WeightVector> sample_weights(std::mt19937& rng, std::size_t n, std::size_t want) {
  auto all = mt::all_weights(n, 3);
  if (all.size() <= want) return all;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(want);
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<SweepCase> build_sweep() {
  std::mt19937 rng(2024);
  std::vector<SweepCase> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& g : mt::all_graphs_up_to_isomorphism(n)) {
      if (!mt::is_connected(g)) continue;
      for (int draw = 0; draw < 3; ++draw) {
        auto lists = mt::random_lists(rng, n, 4);
        out.push_back({g, lists, sample_weights(rng, n, 50)});
      }
    }
  }
  std::uniform_int_distribution<std::size_t> order(1, 8);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = order(rng);
    auto g = mt::random_graph(rng, n, density(rng));
    auto lists = mt::random_lists(rng, n, 4);
    out.push_back({g, lists, sample_weights(rng, n, 50)});
  }
  return out;
}

void round_trip(Tally& t, const Coloring& c, const WeightVector& w) {
  auto parts = decompose(c);
  WeightVector sum(c.size());
  for (const auto& [x, sub] : parts) sum += sub.indicator;
  t.expect(reassemble(parts, c.size()) == c && sum == w && sum == c.weight_vector(),
           [&] { return "round trip failed on " + c.to_string(); });
}

// Criteria 1 and 6 walk the same instances; round trips of the colorings
// they produce feed criterion 3.
void criteria_1_and_6(const std::vector<SweepCase>& sweep, Tally& c1, Tally& c3, Tally& c6) {
  for (const auto& sc : sweep) {
    for (const auto& w : sc.weights) {
      auto inst = make_instance(sc.graph, sc.lists, w);
      auto solver = is_permissible(inst);
      auto brute = oracle::brute_colorable(inst);
      c1.expect(solver.has_value() == brute.has_value(), [&] { return describe(inst); });
      if (brute) round_trip(c3, *brute, w);
      if (solver) {
        round_trip(c3, find_coloring(inst), w);
        continue;
      }
      if (all_colors(inst.lists).empty()) continue;
      auto got = oncall_solutions(inst).solutions;
      c6.expect(got == oracle::brute_oncall(inst), [&] { return describe(inst); });
    }
  }
}

// Every graph up to isomorphism on n <= 5 vertices with every weight of
// entries <= 2. All list assignments over {1,2,3} for n <= 4; for n = 5
// a fixed sample of 100 list assignments per graph.
void criterion_2(Tally& c2, Tally& c3) {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : mt::all_graphs_up_to_isomorphism(n)) {
      std::vector<ListAssignment> assignments;
      if (n <= 4) {
        std::size_t total = std::size_t{1} << (3 * n);
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<ColorSet> lists(n);
          for (std::size_t v = 0; v < n; ++v) {
            for (Color c = 1; c <= 3; ++c) {
              if ((code >> (3 * v + c - 1)) & 1U) lists[v].insert(c);
            }
          }
          assignments.emplace_back(std::move(lists));
        }
      } else {
        for (int i = 0; i < 100; ++i) assignments.push_back(mt::random_lists(rng, n, 3));
      }
      for (const auto& lists : assignments) {
        for (const auto& w : mt::all_weights(n, 2)) {
          auto inst = make_instance(g, lists, w);
          auto got = collect(enumerate_colorings(inst));
          auto expected = oracle::brute_all_colorings(inst);
          c2.expect(got.size() == expected.size() && mt::as_set(got) == expected,
                    [&] { return describe(inst); });
          for (const auto& c : got) round_trip(c3, c, w);
        }
      }
    }
  }
}

void criterion_4(Tally& t) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : mt::all_graphs_up_to_isomorphism(n)) {
      for (int a = 1; a <= 3; ++a) {
        t.expect(wmax(g, ListAssignment::uniform(n, a)).vectors == wmax_uniform(g, a).vectors, [&] {
          return "n=" + std::to_string(n) + " a=" + std::to_string(a) + " edges=" + std::to_string(g.edges().size());
        });
      }
    }
  }
}

void criterion_5(const std::vector<SweepCase>& sweep, Tally& t) {
  auto check = [&](const Graph& g, const WeightVector& w, std::optional<int> expected) {
    auto r = weighted_chromatic(g, w);
    int brute = oracle::brute_chromatic(g, w);
    auto lower = (norm(w) + static_cast<long>(independence_number(g)) - 1) / static_cast<long>(independence_number(g));
    auto inst = make_instance(g, ListAssignment::uniform(g.dimension(), std::max(r.chi, 1)), w);
    bool ok = r.chi == brute && r.chi >= lower && is_valid_coloring(inst, r.coloring) &&
              (!expected || r.chi == *expected);
    t.expect(ok, [&] {
      return describe(inst) + " solver=" + std::to_string(r.chi) + " oracle=" + std::to_string(brute);
    });
  };
  check(mt::fix_k2().graph, WeightVector{1, 1}, 2);
  check(mt::cycle(5), mt::constant(5, 1), 3);
  check(mt::cycle(5), mt::constant(5, 2), 5);
  for (std::size_t n = 1; n <= 6; ++n) check(mt::complete(n), mt::constant(n, 1), static_cast<int>(n));
  for (const auto& sc : sweep) {
    for (const auto& w : sc.weights) check(sc.graph, w, std::nullopt);
  }
}

std::size_t criterion_7(Tally& t) {
  std::mt19937 rng(4);
  std::size_t strict = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 2 + rng() % 6;
    auto g = mt::random_graph(rng, n, 0.5);
    auto w0 = mt::random_weight(rng, n, 2);
    if (w0.is_zero()) w0[rng() % n] = 1;
    auto base = weighted_chromatic(g, w0);
    const int a0 = base.chi;
    std::vector<Color> perm(a0);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    Coloring c0(n);
    for (Vertex v = 0; v < n; ++v) {
      for (Color x : base.coloring[v]) c0[v].insert(perm[x - 1]);
    }
    auto w = w0 + mt::random_weight(rng, n, 3);

    auto r = extend_coloring(g, a0, c0, w);
    auto inst = make_instance(g, ListAssignment::uniform(n, r.bound), w);
    int exact = exact_nonrecolor_chi(g, a0, c0, w);
    bool ok = is_valid_coloring(inst, r.coloring) && r.coloring.contains(c0) && exact <= r.bound;
    for (Color x : r.coloring.colors()) ok = ok && x >= 1 && x <= r.bound;
    t.expect(ok, [&] { return describe(inst) + " c0=" + c0.to_string(); });
    if (exact < r.bound) ++strict;
  }
  return strict;
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(MULTICOLOR_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion_8(Tally& t) {
  namespace fs = std::filesystem;
  const fs::path dir(MULTICOLOR_FIXTURES);
  std::vector<std::string> instances;
  for (const auto& entry : fs::directory_iterator(dir)) {
    auto name = entry.path().filename().string();
    if (name.rfind("fix-", 0) == 0) instances.push_back(entry.path().string());
  }
  std::sort(instances.begin(), instances.end());
  const std::string triangle = (dir / "triangle.col").string() + " --sidecar " + (dir / "triangle-sidecar.json").string();
  instances.push_back(triangle);

  const std::vector<std::string> commands = {
      "wmax",      "wmax --prune-dominated", "wmax --emit-certificates", "wmax --emit-mis", "check", "color",
      "enumerate", "enumerate --limit 3",    "chromatic",                "oncall",          "oncall --with-colorings",
      "verify"};
  std::vector<std::string> invocations;
  for (const auto& inst : instances) {
    for (const auto& cmd : commands) invocations.push_back(cmd + " " + inst);
  }
  invocations.push_back("extend " + (dir / "fix-k3.json").string() + " --precoloring " +
                        (dir / "k3-precoloring.json").string() + " --base-colors 2 --exact");
  for (const auto& args : invocations) {
    auto first = run_cli(args);
    auto second = run_cli(args);
    t.expect(first.code == second.code && first.out == second.out && first.code != 2,
             [&] { return args + " (exit " + std::to_string(first.code) + ")"; });
  }
}

bool report(int id, const char* title, const Tally& t, double seconds, const std::string& extra = {}) {
  bool ok = t.failed == 0 && t.checked > 0;
  std::printf("%s criterion %d: %s: %zu checks, %zu failures, %.1fs%s\n", ok ? "PASS" : "FAIL", id, title, t.checked,
              t.failed, seconds, extra.c_str());
  if (!ok && !t.first_failure.empty()) std::printf("    first failure: %s\n", t.first_failure.c_str());
  std::fflush(stdout);
  return ok;
}

template <typename F>
double timed(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
  bool all = true;
  const auto sweep = build_sweep();

  Tally c1, c2, c3, c4, c5, c6, c7, c8;
  double t16 = timed([&] { criteria_1_and_6(sweep, c1, c3, c6); });
  all &= report(1, "permissibility agrees with exhaustive coloring", c1, t16);
  double t2 = timed([&] { criterion_2(c2, c3); });
  all &= report(2, "coloring enumeration is complete", c2, t2);
  all &= report(3, "decompose/reassemble round trip", c3, 0.0);
  double t4 = timed([&] { criterion_4(c4); });
  all &= report(4, "uniform-list W_max matches multiset sums", c4, t4);
  double t5 = timed([&] { criterion_5(sweep, c5); });
  all &= report(5, "weighted chromatic number", c5, t5);
  all &= report(6, "on-call solutions match exhaustive scan", c6, t16);
  std::size_t strict = 0;
  double t7 = timed([&] { strict = criterion_7(c7); });
  all &= report(7, "non-recoloring extension", c7, t7, ", strict inequalities: " + std::to_string(strict));
  double t8 = timed([&] { criterion_8(c8); });
  all &= report(8, "CLI output is deterministic", c8, t8);
  return all ? 0 : 1;
}
