#include <doctest.h>

#include <algorithm>
#include <random>

#include "s3real/atlas.hpp"
#include "s3real/graph.hpp"

using namespace s3real;

namespace {

MultiGraph random_simple_graph(std::mt19937_64& rng, int n, double p) {
  MultiGraph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  std::bernoulli_distribution coin(p);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

// Oracle for the closure invariant: no non-adjacent pair with degree sum >= n.
bool closure_is_saturated(const MultiGraph& c) {
  const auto n = static_cast<int>(c.vertex_count());
  for (Vertex a : c.vertices())
    for (Vertex b : c.vertices())
      if (a < b && !c.multiplicity(a, b) && c.degree(a) + c.degree(b) >= n) return false;
  return true;
}

}  // namespace

TEST_CASE("edge list construction and parsing") {
  std::vector<std::pair<Vertex, Vertex>> four{{1, 2}, {1, 2}, {1, 2}, {1, 2}};
  MultiGraph g = MultiGraph::from_edge_list(four);
  CHECK(g == parallel_edges(4));
  CHECK(g.multiplicity(1, 2) == 4);
  std::vector<Vertex> one{1};
  MultiGraph k1 = MultiGraph::from_edge_list({}, one);
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK_THROWS_AS(parse_edge_list("1 1\n"), precondition_error);
  CHECK_THROWS_AS(parse_edge_list("1 x\n"), precondition_error);
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(parse_edge_list("# c\n3\n1 2 # note\n") == MultiGraph::from_edge_list(
                                                       std::vector<std::pair<Vertex, Vertex>>{{1, 2}},
                                                       std::vector<Vertex>{3}));
}

TEST_CASE("degree sequences and simplicity") {
  CHECK(degree_sequence(complete_graph(7)) == parse_sequence("6^7"));
  CHECK(degree_sequence(get_entry("K4*").graph) == parse_sequence("5^4"));
  CHECK(degree_sequence(parallel_edges(4)) == parse_sequence("4,4"));
  CHECK(is_simple(complete_graph(7)));
  CHECK_FALSE(is_simple(parallel_edges(4)));
  CHECK_FALSE(is_simple(get_entry("K(1,3,3)").graph));
}

TEST_CASE("lift") {
  MultiGraph k5 = complete_graph(5);
  MultiGraph l = lift(k5, 1, 2, 3);
  MultiGraph expected = complete_graph(4, 2);
  expected.add_edge(2, 3);
  CHECK(l == expected);
  CHECK_THROWS_AS(lift(complete_graph(4), 1, 2, 3), precondition_error);
  const AtlasEntry& e = get_entry("(7^4,4^4)");
  const LiftStep& first = e.script->steps.front();
  CHECK(first.u == 5);
  CHECK(first.v == 3);
  CHECK(first.w == 4);
  CHECK_NOTHROW(lift(e.graph, 5, 3, 4));
}

TEST_CASE("contraction") {
  MultiGraph k7 = complete_graph(7);
  std::vector<Vertex> six{1, 2, 3, 4, 5, 6};
  ContractResult r = contract_vertices(k7, six);
  CHECK(r.graph == [] {
    MultiGraph m;
    m.add_edge(1, 7, 6);
    return m;
  }());
  CHECK(r.mapping.at(6) == 1);

  MultiGraph g = complete_graph(3);
  g.add_edge(3, 4);
  g.add_edge(1, 5);
  std::vector<Vertex> tri{1, 2, 3};
  ContractResult t = contract_vertices(g, tri);
  CHECK(t.graph.vertex_count() == 3);
  CHECK(t.graph.multiplicity(1, 4) == 1);
  CHECK(t.graph.multiplicity(1, 5) == 1);

  CHECK(contract(g, std::span<const Edge>{}).graph == g);
}

TEST_CASE("join") {
  MultiGraph k1a = complete_graph(1), k1b = complete_graph(1, 2);
  CHECK(join(k1a, k1b) == complete_graph(2));
  MultiGraph w = join(complete_graph(1), cycle_graph(4, 2));
  CHECK(w == wheel_graph(4));
}

TEST_CASE("complement") {
  MultiGraph k5 = complete_graph(5);
  CHECK(complement(k5).edge_count() == 0);
  CHECK(complement(k5).vertex_count() == 5);
  CHECK(degree_sequence(complement(cycle_graph(5))) == parse_sequence("2^5"));
  CHECK(is_connected(complement(cycle_graph(5))));
  MultiGraph c = cycle_graph(6);
  CHECK(complement(complement(c)) == c);
}

TEST_CASE("Bondy-Chvatal closure") {
  CHECK(bc_closure(cycle_graph(5)).closure == cycle_graph(5));
  MultiGraph k4e = complete_graph(4);
  k4e.remove_edge(1, 2);
  ClosureResult r = bc_closure(k4e);
  CHECK(r.closure == complete_graph(4));
  CHECK(r.added == std::vector<Edge>{Edge(1, 2)});
}

TEST_CASE("hamiltonian_cycle") {
  auto c5 = hamiltonian_cycle(cycle_graph(5));
  REQUIRE(c5);
  CHECK(is_hamiltonian_cycle(cycle_graph(5), *c5));
  MultiGraph star;
  for (int v = 2; v <= 4; ++v) star.add_edge(1, v);
  bool exhausted = false;
  CHECK_FALSE(hamiltonian_cycle(star, 1000, &exhausted));
  CHECK(exhausted);
  MultiGraph co = complement(get_entry("(4^3,3^4)").graph);
  auto h = hamiltonian_cycle(co);
  REQUIRE(h);
  CHECK(is_hamiltonian_cycle(co, *h));
}

TEST_CASE("inverse layoff and inverse lift") {
  MultiGraph k6 = complete_graph(6);
  std::vector<Vertex> all{1, 2, 3, 4, 5, 6};
  Vertex x = 0;
  MultiGraph k7 = inverse_layoff(k6, all, &x);
  CHECK(x == 7);
  CHECK(degree_sequence(k7) == parse_sequence("6^7"));
  std::vector<Vertex> three{1, 2, 3};
  CHECK_THROWS_AS(inverse_layoff(k6, three), precondition_error);
  std::vector<Vertex> nbrs = k7.neighbors(7);
  ContractResult cr = contract_vertices(k7, all);
  CHECK(cr.graph.multiplicity(1, 7) == 6);

  // The (6^8) construction: w joins the degree-5 vertices and splits edge 3-4.
  const MultiGraph& base = get_entry("(6^3,5^4)").graph;
  std::vector<Vertex> targets;
  for (Vertex v : base.vertices())
    if (base.degree(v) == 5) targets.push_back(v);
  REQUIRE(targets.size() == 4);
  Vertex w = 0;
  MultiGraph g8 = inverse_lift(base, targets, Edge(3, 4), &w);
  CHECK(degree_sequence(g8) == parse_sequence("6^8"));
  CHECK(is_simple(g8));
  CHECK(lift(g8, w, 3, 4) == base);
  CHECK_THROWS_AS(inverse_lift(base, targets, Edge(targets[0], 3)), precondition_error);
}

TEST_CASE("expand_k6") {
  // u of degree 7 = (d1-5) + (d2-5) with d1 = 8, d2 = 9.
  MultiGraph g = complete_graph(8);
  std::vector<int> quotas{3, 4};
  K6Expansion ex = expand_k6(g, 1, quotas);
  CHECK(ex.k6.size() == 6);
  CHECK(ex.k6[0] == 1);
  CHECK(ex.graph.degree(ex.k6[0]) == 8);
  CHECK(ex.graph.degree(ex.k6[1]) == 9);
  for (std::size_t i = 2; i < 6; ++i) CHECK(ex.graph.degree(ex.k6[i]) == 5);
  ContractResult back = contract_vertices(ex.graph, ex.k6);
  CHECK(back.graph == g);
  std::vector<int> short_quotas{3, 3};
  CHECK_THROWS_AS(expand_k6(g, 1, short_quotas), precondition_error);
}

TEST_CASE("strong connectivity of orientations") {
  MultiGraph k3 = complete_graph(3);
  // Canonical instances: 1-2, 1-3, 2-3. 1->2, 3->1, 2->3 is a directed cycle.
  CHECK(is_strongly_connected(k3, Orientation{false, true, false}));
  // Everything into 3: 1->2, 1->3, 2->3.
  CHECK_FALSE(is_strongly_connected(k3, Orientation{false, false, false}));
  MultiGraph split;
  split.add_edge(1, 2);
  split.add_edge(3, 4);
  CHECK_FALSE(is_strongly_connected(split, Orientation{false, false}));
  CHECK_FALSE(is_strongly_connected(split, Orientation{true, false}));
}

TEST_CASE("to_dot") {
  MultiGraph g = parallel_edges(2);
  CHECK(to_dot(g, "P") == "graph \"P\" {\n  1;\n  2;\n  1 -- 2;\n  1 -- 2;\n}\n");
}

TEST_CASE("property: graph operation invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 11)(rng);
    MultiGraph g = random_simple_graph(rng, n, 0.55);
    CAPTURE(to_edge_list(g));

    // Closure never joins a pair below the threshold and ends saturated.
    ClosureResult cl = bc_closure(g);
    MultiGraph running = g;
    for (const Edge& e : cl.added) {
      CHECK(running.degree(e.u) + running.degree(e.v) >= n);
      running.add_edge(e.u, e.v);
    }
    CHECK(running == cl.closure);
    CHECK(closure_is_saturated(cl.closure));

    bool exhausted = false;
    if (auto h = hamiltonian_cycle(g, 200'000, &exhausted)) CHECK(is_hamiltonian_cycle(g, *h));

    // Layoff round trip.
    std::vector<Vertex> vs = g.vertices();
    std::shuffle(vs.begin(), vs.end(), rng);
    std::vector<Vertex> targets(vs.begin(), vs.begin() + 4);
    Vertex x = 0;
    MultiGraph up = inverse_layoff(g, targets, &x);
    CHECK(x == g.fresh_vertex());
    CHECK(delete_vertex(up, x) == g);

    // Inverse lift round trip on an edge avoiding two targets.
    std::vector<Vertex> two(vs.begin(), vs.begin() + 2);
    for (auto [e, m] : g.edges()) {
      if (e.u == two[0] || e.u == two[1] || e.v == two[0] || e.v == two[1]) continue;
      Vertex y = 0;
      MultiGraph il = inverse_lift(g, two, e, &y);
      CHECK(il.degree(y) == 4);
      CHECK(lift(il, y, e.u, e.v) == g);
      break;
    }

    // Contraction bookkeeping.
    auto inst = g.edge_instances();
    if (!inst.empty()) {
      std::vector<Edge> some;
      for (const Edge& e : inst)
        if (std::bernoulli_distribution(0.3)(rng)) some.push_back(e);
      ContractResult cr = contract(g, some);
      long long total = 0;
      for (Vertex v : cr.graph.vertices()) {
        total += cr.graph.degree(v);
        CHECK(cr.graph.multiplicity(v, v) == 0);
      }
      long long loops = 0;
      for (const Edge& e : inst)
        if (cr.mapping.at(e.u) == cr.mapping.at(e.v)) ++loops;
      CHECK(total == 2 * g.edge_count() - 2 * loops);
    }

    // Join degrees.
    MultiGraph h;
    for (Vertex v = 101; v <= 103; ++v) h.add_vertex(v);
    if (std::bernoulli_distribution(0.5)(rng)) h.add_edge(101, 102);
    MultiGraph j = join(g, h);
    CHECK(j.edge_count() == g.edge_count() + h.edge_count() + 3LL * n);

    // K6 expansion keeps all 15 K6 edges.
    Vertex u = vs.front();
    if (g.degree(u) >= 1) {
      std::vector<int> quotas;
      int left = g.degree(u);
      while (left > 0 && quotas.size() < 4) {
        int q = std::uniform_int_distribution<int>(1, left)(rng);
        quotas.push_back(q);
        left -= q;
      }
      if (left > 0) quotas.push_back(left);
      K6Expansion ex = expand_k6(g, u, quotas);
      for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) CHECK(ex.graph.multiplicity(ex.k6[a], ex.k6[b]) == 1);
      CHECK(contract_vertices(ex.graph, ex.k6).graph == g);
    }
  }
}
