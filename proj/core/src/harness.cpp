#include "domkit/harness.hpp"

#include <atomic>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "domkit/clawfree.hpp"
#include "domkit/cubic.hpp"
#include "domkit/exact.hpp"
#include "domkit/graph6.hpp"
#include "domkit/random_regular.hpp"
#include "domkit/rng.hpp"
#include "domkit/scheme.hpp"

namespace domkit {
namespace harness {

namespace {

using nlohmann::json;

// Construction sizes for the random-transversal methods on one matching.
void run_transversal_methods(const Graph& g, const Matching& m, const RunConfig& config,
                             uint64_t record_seed, ConjectureRecord& rec) {
  SelectionScheme scheme = uniform_scheme(m);
  if (config.methods & kMethodT1) {
    int best = g.order() + 1;
    for (int trial = 0; trial < std::max(1, config.trials); ++trial) {
      VertexSet d = sample(scheme, mix_seed(record_seed, trial));
      int size = d.count() + uncovered_set(g, m, d).count();
      best = std::min(best, size);
    }
    rec.t1_sampled = best;
  }
  if (config.methods & kMethodT1d) {
    VertexSet d = derandomize_conditional(g, m, scheme);
    rec.t1_derand = d.count() + uncovered_set(g, m, d).count();
  }
}

// Cubic refinement per connected component; sizes add up.
void run_refinement_method(const Graph& g, const RunConfig& config, ConjectureRecord& rec) {
  SolverOptions solver{config.cap, true};
  int total = 0;
  bool certified = true;
  for (const VertexSet& comp : components(g)) {
    InducedSubgraph sub = induced_subgraph(g, comp);
    EdgeSolveResult ed = edge_domination_number(sub.graph, solver);
    Matching m(sub.graph, ed.witness);
    cubic::PipelineResult pipeline = cubic::build_refined_scheme(sub.graph, m);
    if (pipeline.shortcut) {
      rec.t2_shortcut = true;
      total += pipeline.shortcut->count();
      continue;
    }
    try {
      cubic::certify(sub.graph, m, pipeline);
    } catch (const Error& e) {
      if (e.code() != errc::certificate_violation) throw;
      certified = false;
    }
    VertexSet d = derandomize_conditional(sub.graph, m, pipeline.scheme);
    total += d.count() + uncovered_set(sub.graph, m, d).count();
  }
  rec.t2 = total;
  rec.t2_certified = certified;
}

json record_to_json(const ConjectureRecord& r) {
  json j;
  j["type"] = "record";
  j["graph_id"] = r.graph_id;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["delta"] = r.delta ? json(*r.delta) : json(nullptr);
  j["connected"] = r.connected;
  j["claw_free"] = r.claw_free;
  j["gamma"] = r.gamma ? json(*r.gamma) : json(nullptr);
  j["gamma_e"] = r.gamma_e ? json(*r.gamma_e) : json(nullptr);
  if (r.ratio) {
    j["ratio"] = rational_to_decimal(*r.ratio, 6);
    j["ratio_exact"] = rational_to_string(*r.ratio);
  } else {
    j["ratio"] = nullptr;
    j["ratio_exact"] = nullptr;
  }
  j["conjecture_holds"] = r.conjecture_holds ? json(*r.conjecture_holds) : json(nullptr);
  j["gamma_witness"] = r.gamma_witness;
  json ew = json::array();
  for (auto [u, v] : r.gamma_e_witness) ew.push_back({u, v});
  j["gamma_e_witness"] = ew;
  j["cross_check_ok"] = r.cross_check_ok ? json(*r.cross_check_ok) : json(nullptr);
  j["inequality_e1_ok"] = r.inequality_e1_ok ? json(*r.inequality_e1_ok) : json(nullptr);
  json methods;
  methods["t1_sampled"] = r.t1_sampled ? json(*r.t1_sampled) : json(nullptr);
  methods["t1_derand"] = r.t1_derand ? json(*r.t1_derand) : json(nullptr);
  methods["t2"] = r.t2 ? json(*r.t2) : json(nullptr);
  methods["t3"] = r.t3 ? json(*r.t3) : json(nullptr);
  j["methods"] = methods;
  j["t2_shortcut"] = r.t2_shortcut;
  j["t2_certified"] = r.t2_certified ? json(*r.t2_certified) : json(nullptr);
  if (r.error) j["error"] = *r.error;
  return j;
}

std::string record_to_csv(const ConjectureRecord& r) {
  auto opt_str = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  std::ostringstream os;
  os << r.graph_id << ',' << r.graph6 << ',' << r.n << ',' << opt_str(r.delta) << ','
     << (r.connected ? 1 : 0) << ',' << (r.claw_free ? 1 : 0) << ',' << opt_str(r.gamma) << ','
     << opt_str(r.gamma_e) << ',' << (r.ratio ? rational_to_string(*r.ratio) : "") << ','
     << (r.conjecture_holds ? (*r.conjecture_holds ? "true" : "false") : "") << ','
     << opt_str(r.t1_sampled) << ',' << opt_str(r.t1_derand) << ',' << opt_str(r.t2) << ','
     << opt_str(r.t3);
  return os.str();
}

constexpr const char* kCsvHeader =
    "graph_id,graph6,n,delta,connected,claw_free,gamma,gamma_e,ratio,conjecture_holds,"
    "t1_sampled,t1_derand,t2,t3";

}  // namespace

ConjectureRecord evaluate_graph(const Graph& g, long graph_id, const RunConfig& config) {
  ConjectureRecord rec;
  rec.graph_id = graph_id;
  rec.graph6 = write_graph6(g);
  rec.n = g.order();
  rec.delta = is_regular(g);
  rec.connected = is_connected(g);
  rec.claw_free = is_claw_free(g);

  SolverOptions solver{config.cap, true};
  const uint64_t record_seed = mix_seed(config.seed, static_cast<uint64_t>(graph_id));
  try {
    SolveResult dom = domination_number(g, solver);
    rec.gamma = dom.value;
    rec.gamma_witness = dom.witness.to_vector();

    if (g.edge_count() > 0) {
      EdgeSolveResult ed = edge_domination_number(g, solver);
      rec.gamma_e = ed.value;
      for (const Edge& e : ed.witness) rec.gamma_e_witness.emplace_back(e.u, e.v);
      rec.ratio = Rational(dom.value, ed.value);
      try {
        rec.cross_check_ok = cross_check_line_graph(g, solver).consistent;
      } catch (const Error& e) {
        if (e.code() != errc::cap_exceeded) throw;
      }

      Matching minimum(g, ed.witness);
      if (rec.delta && *rec.delta >= 1) {
        rec.conjecture_holds = dom.value <= ed.value;
        rec.inequality_e1_ok = check_inequality_e1(g, minimum).holds;
      }
      if (config.methods & (kMethodT1 | kMethodT1d)) {
        run_transversal_methods(g, minimum, config, record_seed, rec);
      }
      if ((config.methods & kMethodT2) && rec.delta == std::optional<int>(3)) {
        run_refinement_method(g, config, rec);
      }
      if ((config.methods & kMethodT3) && rec.delta == std::optional<int>(3) && rec.claw_free) {
        try {
          VertexSet d = clawfree::dominating_transversal(g, minimum);
          rec.t3 = d.count();
          if (!is_dominating(g, d) || d.count() != ed.value) {
            rec.error = "exchange construction missed the matching size";
            rec.construction_ok = false;
          }
        } catch (const Error& e) {
          if (e.code() != errc::no_improving_move) throw;
          rec.error = e.what();
          rec.construction_ok = false;
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() != errc::cap_exceeded) throw;
    rec.error = "cap_exceeded";
  }
  return rec;
}

RunSummary run_check(const RunConfig& config, std::istream& in, std::ostream& out,
                     std::ostream& err) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  struct Slot {
    std::optional<ConjectureRecord> record;
    std::string parse_error;
    bool done = false;
  };
  std::vector<Slot> slots(lines.size());
  std::atomic<size_t> cursor{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= lines.size() || stop.load()) break;
      Slot& slot = slots[i];
      if (lines[i].empty()) {
        slot.parse_error = "empty line";
      } else {
        try {
          Graph g = parse_graph6(lines[i]);
          slot.record = evaluate_graph(g, static_cast<long>(i) + 1, config);
        } catch (const Error& e) {
          slot.parse_error = e.what();
        } catch (const std::invalid_argument& e) {
          slot.parse_error = e.what();
        }
      }
      slot.done = true;
      if (config.fail_fast && slot.record) {
        const ConjectureRecord& r = *slot.record;
        bool violated = (r.conjecture_holds && !*r.conjecture_holds) ||
                        (r.t2_certified && !*r.t2_certified) || !r.construction_ok;
        if (violated) stop.store(true);
      }
    }
  };
  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  RunSummary summary;
  const bool jsonl = config.format == ReportFormat::jsonl;
  if (jsonl) {
    json header;
    header["type"] = "header";
    header["schema"] = "domkit.check.v1";
    header["config"] = {{"cap", config.cap},
                        {"seed", config.seed},
                        {"trials", config.trials},
                        {"methods", config.methods},
                        {"jobs", config.jobs},
                        {"fail_fast", config.fail_fast}};
    out << header.dump() << '\n';
  } else {
    out << kCsvHeader << '\n';
  }

  for (size_t i = 0; i < slots.size(); ++i) {
    Slot& slot = slots[i];
    if (!slot.done) {
      summary.stopped_early = true;
      break;
    }
    if (!slot.record) {
      ++summary.skipped;
      err << "record " << (i + 1) << " skipped: " << slot.parse_error << '\n';
      continue;
    }
    const ConjectureRecord& r = *slot.record;
    ++summary.processed;
    if (r.error && *r.error == "cap_exceeded") ++summary.cap_exceeded;
    if (r.delta && *r.delta >= 1 && r.ratio) {
      ++summary.regular;
      if (!summary.min_ratio || *r.ratio < *summary.min_ratio) summary.min_ratio = r.ratio;
      if (!summary.max_ratio || *r.ratio > *summary.max_ratio) summary.max_ratio = r.ratio;
    }
    if (r.conjecture_holds && !*r.conjecture_holds) ++summary.conjecture_violations;
    if ((r.t2_certified && !*r.t2_certified) || !r.construction_ok) {
      ++summary.certificate_violations;
    }
    out << (jsonl ? record_to_json(r).dump() : record_to_csv(r)) << '\n';
    if (config.fail_fast && summary.exit_code() != 0) {
      summary.stopped_early = true;
      break;
    }
  }

  if (jsonl) {
    json tail;
    tail["type"] = "summary";
    tail["processed"] = summary.processed;
    tail["skipped"] = summary.skipped;
    tail["cap_exceeded"] = summary.cap_exceeded;
    tail["regular"] = summary.regular;
    tail["min_ratio"] = summary.min_ratio ? json(rational_to_string(*summary.min_ratio))
                                          : json(nullptr);
    tail["max_ratio"] = summary.max_ratio ? json(rational_to_string(*summary.max_ratio))
                                          : json(nullptr);
    tail["conjecture_violations"] = summary.conjecture_violations;
    tail["certificate_violations"] = summary.certificate_violations;
    tail["stopped_early"] = summary.stopped_early;
    out << tail.dump() << '\n';
  } else {
    err << "processed " << summary.processed << ", skipped " << summary.skipped
        << ", conjecture violations " << summary.conjecture_violations
        << ", certificate violations " << summary.certificate_violations << '\n';
  }
  return summary;
}

void run_gen(const GenConfig& config, std::ostream& out) {
  for (long i = 0; i < config.count; ++i) {
    Graph g = random_regular(config.n, config.delta, mix_seed(config.seed, i));
    out << write_graph6(g) << '\n';
  }
}

ThresholdVerdict degree_threshold(int delta) {
  if (delta < 1) throw std::invalid_argument("degree must be positive");
  ThresholdVerdict verdict;
  verdict.rhs = Rational(delta, 4 * delta - 2);
  verdict.lhs_approx = (1.0 + std::log(delta + 1.0)) / (delta + 1.0);

  // The inequality rearranges to delta + 1 <= exp(q) with
  // q = (delta-1)(delta-2) / (2 (2 delta - 1)); exp(q) is bracketed by exact
  // rational Taylor partial sums until one side is certain.
  const Rational q(static_cast<long>(delta - 1) * (delta - 2), 2L * (2 * delta - 1));
  const Rational target(delta + 1);
  for (int terms = 32;; terms *= 2) {
    if (Rational(terms + 2) <= q) continue;
    Rational term = 1, lower = 1;
    for (int k = 1; k <= terms; ++k) {
      term *= q / k;
      lower += term;
    }
    Rational tail = term * q / (terms + 1);
    Rational upper = lower + tail * Rational(terms + 2) / (Rational(terms + 2) - q);
    if (target <= lower) {
      verdict.holds = true;
      return verdict;
    }
    if (target > upper) {
      verdict.holds = false;
      return verdict;
    }
  }
}

}  // namespace harness
}  // namespace domkit
