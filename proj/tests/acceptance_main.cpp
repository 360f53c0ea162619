// Acceptance suite: every release criterion, one pass/fail line each.
// Exits nonzero if anything fails. Scales: the named fixtures plus seeded
// random corpora (1000 cubic graphs on 8..16 vertices, 500 small graphs for
// oracle agreement, the claw-free family up to 14 vertices).

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "domkit/clawfree.hpp"
#include "domkit/cubic.hpp"
#include "domkit/exact.hpp"
#include "domkit/graph6.hpp"
#include "domkit/harness.hpp"
#include "domkit/random_regular.hpp"
#include "domkit/scheme.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace domkit;
using namespace domkit::testing;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << label;
  if (!detail.empty()) std::cout << "  -- " << detail;
  std::cout << '\n';
  if (!pass) ++failures;
}

template <typename F>
void criterion(int id, const std::string& label, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  report(id, label, pass, detail + (detail.empty() ? "" : "; ") + std::to_string(ms) + " ms");
}

Matching minimum_matching(const Graph& g) {
  return Matching(g, edge_domination_number(g).witness);
}

// 1000 seeded cubic graphs on 8..16 vertices.
std::vector<Graph> cubic_corpus() {
  std::vector<Graph> graphs;
  for (int n : {8, 10, 12, 14, 16}) {
    for (uint64_t seed = 0; seed < 200; ++seed) {
      graphs.push_back(random_regular(n, 3, mix_seed(1000 + n, seed)));
    }
  }
  return graphs;
}

std::vector<Graph> regular_sample() {
  std::vector<Graph> graphs{prism(), k4(), petersen(), k33(), c4()};
  for (int n : {8, 10, 12, 14, 16}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      graphs.push_back(random_regular(n, 3, mix_seed(77 + n, seed)));
    }
  }
  for (int delta : {4, 5}) {
    for (int n : {8, 10, 12}) {
      for (uint64_t seed = 0; seed < 8; ++seed) {
        graphs.push_back(random_regular(n, delta, mix_seed(delta * 131 + n, seed)));
      }
    }
  }
  return graphs;
}

std::vector<Graph> clawfree_corpus() {
  std::vector<Graph> graphs{k4(), prism(), inflate_triangles(k4())};
  for (int target : {8, 10, 12, 14}) {
    for (uint64_t seed = 0; seed < 25; ++seed) {
      graphs.push_back(cubic_clawfree(target, mix_seed(target, seed)));
    }
  }
  for (uint64_t seed = 0; seed < 20; ++seed) {
    graphs.push_back(inflate_multigraph(4, mix_seed(321, seed)));
  }
  return graphs;
}

}  // namespace

int main() {
  criterion(1, "six-vertex fixture: gamma 2, edge domination 1", [](std::string& detail) {
    Graph g = double_star();
    int gamma = domination_number(g).value;
    int gamma_e = edge_domination_number(g).value;
    detail = "gamma=" + std::to_string(gamma) + " gamma_e=" + std::to_string(gamma_e);
    return gamma == 2 && gamma_e == 1;
  });

  std::vector<Graph> cubic = cubic_corpus();

  criterion(2, "conjecture sweep over the cubic corpus, exit code 0", [&](std::string& detail) {
    long connected_checked = 0;
    for (const Graph& g : cubic) {
      if (!is_connected(g)) continue;
      ++connected_checked;
      if (domination_number(g).value > edge_domination_number(g).value) return false;
    }
    std::ostringstream corpus;
    for (const Graph& g : cubic) corpus << write_graph6(g) << '\n';
    harness::RunConfig config;
    config.jobs = 4;
    std::istringstream in(corpus.str());
    std::ostringstream out, err;
    harness::RunSummary summary = harness::run_check(config, in, out, err);
    detail = std::to_string(connected_checked) + " connected of " +
             std::to_string(cubic.size()) + " graphs, exit " +
             std::to_string(summary.exit_code());
    return summary.exit_code() == 0 && summary.processed == static_cast<long>(cubic.size());
  });

  criterion(3, "prism tightness: gamma = gamma_e = 2", [](std::string& detail) {
    Graph g = prism();
    int gamma = domination_number(g).value;
    int gamma_e = edge_domination_number(g).value;
    detail = "gamma=" + std::to_string(gamma) + " gamma_e=" + std::to_string(gamma_e);
    return gamma == 2 && gamma_e == 2;
  });

  std::vector<Graph> regulars = regular_sample();

  criterion(4, "transversal bound chain with Monte Carlo agreement", [&](std::string& detail) {
    if (!(transversal_bound_factor(3) == Rational(7, 6))) return false;
    long mc_checked = 0;
    for (const Graph& g : regulars) {
      int delta = *is_regular(g);
      Matching m = minimum_matching(g);
      SelectionScheme s = uniform_scheme(m);
      ExpectationReport rep = expectation_report(g, m, s);
      if (!rep.bound_rhs || !(rep.total <= *rep.bound_rhs)) return false;
      Rational chain = Rational(m.size()) + rep.total.to_rational();
      if (!(chain <= transversal_bound_factor(delta) * m.size())) return false;
      MonteCarlo mc = monte_carlo_uncovered(g, m, s, 10000, mix_seed(4242, mc_checked));
      if (!within_four_se(mc, rep.total)) {
        detail = "Monte Carlo drift on graph " + write_graph6(g);
        return false;
      }
      ++mc_checked;
    }
    detail = std::to_string(mc_checked) + " regular graphs at 10000 trials";
    return true;
  });

  criterion(5, "derandomization reaches the floor on every instance", [&](std::string& detail) {
    long checked = 0;
    for (const Graph& g : regulars) {
      Matching m = minimum_matching(g);
      SelectionScheme s = uniform_scheme(m);
      Dyadic expectation = expectation_report(g, m, s).total;
      VertexSet d = derandomize_conditional(g, m, s);
      VertexSet b = uncovered_set(g, m, d);
      if (BigInt(d.count() + b.count()) > m.size() + expectation.floor()) return false;
      if (!is_dominating(g, d | b)) return false;
      ++checked;
    }
    detail = std::to_string(checked) + " instances";
    return true;
  });

  criterion(6, "refinement certificates on every connected cubic graph", [&](std::string& detail) {
    std::vector<Graph> graphs{prism(), k4(), petersen(), k33(), paired_cubic10(),
                              crossing_cubic12()};
    for (const Graph& g : cubic) {
      if (is_connected(g)) graphs.push_back(g);
    }
    long certified = 0, shortcuts = 0;
    for (const Graph& g : graphs) {
      Matching m = minimum_matching(g);
      cubic::PipelineResult pipe = cubic::build_refined_scheme(g, m, cubic::PipelineOptions{false});
      cubic::Certificate cert = cubic::certify(g, m, pipe);
      if (!cert.holds_budget || !cert.holds_structural || !cert.holds_ratio ||
          !cert.holds_total) {
        return false;
      }
      const cubic::ResidueClassification& cls = pipe.classification;
      if (cls.r_eligible < cls.r - 13 * cls.r0 - 28 * cls.p) return false;
      for (const cubic::TripleTrace& trace : pipe.traces) {
        if (trace.spill.count() > 18 || trace.removed.count() > 34) return false;
        if (trace.tag == cubic::TripleCase::double_center &&
            (trace.spill.count() > 12 || trace.removed.count() > 24)) {
          return false;
        }
      }
      ++certified;
      // Production path: the shortcut may preempt the scheme with a
      // three-vertex dominating set.
      cubic::PipelineResult fast = cubic::build_refined_scheme(g, m);
      if (fast.shortcut) {
        ++shortcuts;
        if (!is_dominating(g, *fast.shortcut) || fast.shortcut->count() > m.size()) return false;
      }
    }
    detail = std::to_string(certified) + " graphs certified, " + std::to_string(shortcuts) +
             " shortcut hits";
    return true;
  });

  criterion(7, "exchange construction matches gamma_e on the claw-free corpus",
            [&](std::string& detail) {
              std::vector<Graph> graphs = clawfree_corpus();
              for (const Graph& g : graphs) {
                Matching m = minimum_matching(g);
                VertexSet d = clawfree::dominating_transversal(g, m);  // throws if it stalls
                if (!is_dominating(g, d) || d.count() != m.size()) return false;
              }
              detail = std::to_string(graphs.size()) + " graphs, zero stalls";
              return true;
            });

  criterion(8, "certified degree threshold flips exactly at 13", [](std::string& detail) {
    for (int delta = 1; delta <= 100; ++delta) {
      bool verdict = harness::degree_threshold(delta).holds;
      if (verdict != (delta >= 13)) {
        detail = "wrong verdict at degree " + std::to_string(delta);
        return false;
      }
    }
    detail = "degrees 1..100";
    return true;
  });

  criterion(9, "solvers agree with naive enumeration on 500 small graphs",
            [](std::string& detail) {
              long checked = 0;
              for (uint64_t seed = 0; seed < 500; ++seed) {
                int n = 2 + static_cast<int>(seed % 9);
                int density = 30 + static_cast<int>(seed % 3) * 20;
                Graph g = random_simple(n, mix_seed(900, seed), density);
                if (domination_number(g).value != naive_domination(g).value) return false;
                if (g.edge_count() > 0 &&
                    edge_domination_number(g).value != naive_edge_domination(g).minimum) {
                  return false;
                }
                ++checked;
              }
              detail = std::to_string(checked) + " graphs";
              return true;
            });

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
