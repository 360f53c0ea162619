#include "domkit/clawfree.hpp"

#include <algorithm>

#include "domkit/exact.hpp"
#include "domkit/graph6.hpp"

namespace domkit {
namespace clawfree {

namespace {

int partner(const Matching& m, int v) {
  int ei = m.edge_of(v);
  return ei < 0 ? -1 : m.edges()[ei].other(v);
}

[[noreturn]] void structure(const std::string& what, int vertex) {
  fail(errc::structure_violation, what + " (vertex " + std::to_string(vertex) + ")");
}

// One ordering attempt of the adjacent pair; throws structure_violation
// when a forced adjacency fails to hold.
SigmaSequence grow(const Graph& g, const Matching& m, const ExchangeState& state, int seed,
                   int lone, int stay, int start) {
  SigmaSequence sigma;
  sigma.seed = seed;
  sigma.lone_neighbor = lone;
  sigma.lone_partner = partner(m, lone);
  sigma.stay_neighbor = stay;
  sigma.stay_partner = partner(m, stay);

  for (int v : {lone, stay, start}) {
    if (state.d.test(v)) structure("seed neighbor sits in the transversal", v);
    if (partner(m, v) < 0) structure("seed neighbor is unmatched", v);
  }

  // Third neighbor of the lone neighbor; claw-freeness forces it onto the
  // lone partner.
  int x = -1;
  g.neighbors(lone).for_each([&](int w) {
    if (w != seed && w != sigma.lone_partner) x = w;
  });
  if (x < 0) structure("lone neighbor has no third neighbor", lone);
  sigma.lone_third = x;
  if (!g.adjacent(x, sigma.lone_partner)) {
    structure("lone third neighbor misses the lone partner", x);
  }
  int start_partner = partner(m, start);
  if (x == sigma.stay_partner || x == start_partner) {
    structure("a single endpoint swap was still available", x);
  }

  VertexSet used(g.order());
  for (int v : {sigma.lone_partner, sigma.stay_partner, lone, stay, seed, x}) used.set(v);

  int cur_enter = start;          // v_j, joins d on swap
  int cur_leave = start_partner;  // u_j, leaves d on swap
  while (true) {
    if (used.test(cur_leave)) {
      if (cur_leave != x) structure("sequence closed on a non-anchor vertex", cur_leave);
      break;  // terminal: the chain reached x
    }
    int witness = -1;
    g.neighbors(cur_leave).for_each([&](int w) {
      if (witness < 0 && state.c.test(w)) witness = w;
    });
    if (witness < 0) break;  // terminal: leave is pinned by nothing
    if (used.test(witness)) structure("witness already used", witness);

    used.set(cur_enter);
    used.set(cur_leave);
    used.set(witness);
    sigma.steps.push_back(SigmaStep{cur_enter, cur_leave, witness});

    int next_enter = -1;
    g.neighbors(cur_leave).for_each([&](int w) {
      if (w != cur_enter && w != witness) next_enter = w;
    });
    if (next_enter < 0) structure("chain vertex has no forward neighbor", cur_leave);
    if (!g.adjacent(next_enter, witness)) structure("forward neighbor misses the witness", next_enter);
    if (partner(m, next_enter) < 0) structure("forward neighbor is unmatched", next_enter);
    if (state.d.test(next_enter)) structure("forward neighbor already in the transversal", next_enter);
    if (used.test(next_enter)) structure("forward neighbor already used", next_enter);
    cur_enter = next_enter;
    cur_leave = partner(m, next_enter);
  }
  sigma.terminal_enter = cur_enter;
  sigma.terminal_leave = cur_leave;
  return sigma;
}

}  // namespace

ExchangeState make_state(const Graph& g, const Matching& m, const VertexSet& d) {
  ExchangeState st{d, VertexSet(g.order()), VertexSet(g.order())};
  for (int u = 0; u < g.order(); ++u) {
    if (m.covers(u)) continue;
    int hits = (g.neighbors(u) & d).count();
    if (hits == 0) st.b.set(u);
    if (hits == 1) st.c.set(u);
  }
  return st;
}

VertexSet initial_transversal(const Matching& m) {
  VertexSet d(m.host().order());
  for (const Edge& e : m.edges()) d.set(e.u);
  return d;
}

std::optional<std::pair<Edge, int>> single_swap_improvement(const Graph& g, const Matching& m,
                                                            const ExchangeState& state) {
  const int before = state.b.count();
  for (const Edge& e : m.edges()) {
    int cur = state.d.test(e.u) ? e.u : e.v;
    VertexSet d = state.d;
    d.reset(cur);
    d.set(e.other(cur));
    if (make_state(g, m, d).b.count() < before) return std::make_pair(e, e.other(cur));
  }
  return std::nullopt;
}

SigmaSequence build_sigma(const Graph& g, const Matching& m, const ExchangeState& state, int b) {
  if (is_regular(g) != std::optional<int>(3)) fail(errc::not_cubic, "graph is not 3-regular");
  if (!is_claw_free(g)) fail(errc::not_claw_free, "graph contains an induced claw");
  if (!state.b.test(b)) structure("start vertex is already covered", b);

  std::vector<int> nbrs = g.neighbors(b).to_vector();
  if (nbrs.size() != 3) fail(errc::not_cubic, "uncovered vertex degree is not 3");
  // Exactly one adjacent pair exists among the three neighbors: two pairs
  // would overload a degree-3 vertex, none would be a claw.
  int lone = -1, p = -1, q = -1;
  for (int i = 0; i < 3; ++i) {
    int a = nbrs[i], c = nbrs[(i + 1) % 3];
    if (g.adjacent(a, c)) {
      p = a;
      q = c;
      lone = nbrs[(i + 2) % 3];
    }
  }
  if (lone < 0) fail(errc::not_claw_free, "uncovered vertex is a claw center");

  try {
    return grow(g, m, state, b, lone, p, q);
  } catch (const Error& first) {
    if (first.code() != errc::structure_violation) throw;
    return grow(g, m, state, b, lone, q, p);
  }
}

VertexSet path_swap(const Graph& g, const Matching& m, const ExchangeState& state,
                    const SigmaSequence& sigma) {
  VertexSet d = state.d;
  auto swap_edge = [&](int leave, int enter) {
    d.reset(leave);
    d.set(enter);
  };
  for (const SigmaStep& step : sigma.steps) swap_edge(step.leave, step.enter);
  swap_edge(sigma.terminal_leave, sigma.terminal_enter);

  for (const Edge& e : m.edges()) {
    if (d.test(e.u) + d.test(e.v) != 1) {
      throw std::logic_error("swap broke the one-endpoint-per-edge invariant");
    }
  }
  if (make_state(g, m, d).b.count() >= state.b.count()) {
    fail(errc::no_improvement, "sequence swap did not shrink the uncovered set");
  }
  return d;
}

VertexSet dominating_transversal(const Graph& g, const Matching& m) {
  if (is_regular(g) != std::optional<int>(3)) fail(errc::not_cubic, "graph is not 3-regular");
  if (!is_claw_free(g)) fail(errc::not_claw_free, "graph contains an induced claw");
  if (!is_maximal_matching(g, m)) fail(errc::not_maximal, "matching leaves an addable edge");

  VertexSet d = initial_transversal(m);
  for (int rounds = 0; rounds <= g.order(); ++rounds) {
    ExchangeState state = make_state(g, m, d);
    if (state.b.empty()) {
      if (!is_dominating(g, d)) throw std::logic_error("empty uncovered set but not dominating");
      return d;
    }
    if (auto swap = single_swap_improvement(g, m, state)) {
      d.reset(swap->first.other(swap->second));
      d.set(swap->second);
      continue;
    }
    try {
      SigmaSequence sigma = build_sigma(g, m, state, state.b.lowest());
      d = path_swap(g, m, state, sigma);
    } catch (const Error& inner) {
      fail(errc::no_improving_move,
           std::string("exchange got stuck: ") + inner.what() + "; graph " + write_graph6(g) +
               ", transversal {" + [&] {
                 std::string s;
                 d.for_each([&](int v) { s += std::to_string(v) + " "; });
                 return s;
               }() + "}");
    }
  }
  fail(errc::no_improving_move, "uncovered count failed to reach zero on " + write_graph6(g));
}

}  // namespace clawfree
}  // namespace domkit
