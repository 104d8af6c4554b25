// One PASS/FAIL line per acceptance criterion. `--criterion N` runs one.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "s3real/atlas.hpp"
#include "s3real/certificates.hpp"
#include "s3real/oracles.hpp"
#include "s3real/realize.hpp"
#include "tamper.hpp"

using namespace s3real;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond) {
      ++failed_;
      if (first_.empty()) first_ = what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  [[nodiscard]] Outcome outcome() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!notes_.empty()) out << ", " << notes_;
    if (failed_) out << "; " << failed_ << " failed, first: " << first_;
    return {failed_ == 0, out.str()};
  }

 private:
  long long checks_ = 0, failed_ = 0;
  std::string first_, notes_;
};

// Graphs the oracle confirmed S3-connected during this run.
std::vector<MultiGraph>& s3_confirmed() {
  static std::vector<MultiGraph> graphs;
  return graphs;
}

bool s3_oracle(const MultiGraph& g) {
  bool yes = is_s3_connected(g);
  if (yes) s3_confirmed().push_back(g);
  return yes;
}

void time_limit(Check& c, std::chrono::steady_clock::time_point start, double seconds) {
  const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream s;
  s.precision(1);
  s << std::fixed << took << " s (limit " << seconds << " s)";
  c.note(s.str());
  c.expect(took < seconds, "time limit exceeded");
}

// Realizations checked by criteria 7 and 9.
std::vector<RealizationResult> small_realizations() {
  std::vector<RealizationResult> out;
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : graphic_sequences(n, 0)) {
      if (s.sum() / 2 > 24) continue;
      RealizeOutcome r = realize(s);
      if (r.accepted()) out.push_back(*r.result);
    }
  return out;
}

Outcome kernel_oracles() {
  auto start = std::chrono::steady_clock::now();
  Check c;
  c.expect(s3_oracle(complete_graph(7)), "K7");
  c.expect(s3_oracle(get_entry("K4*").graph), "K4*");
  c.expect(s3_oracle(get_entry("K(1,3,3)").graph), "K(1,3,3)");
  c.expect(s3_oracle(parallel_edges(4)), "4K2");
  c.expect(s3_oracle(parallel_edges(5)), "5K2");
  c.expect(!s3_oracle(complete_graph(6)), "K6");
  c.expect(!s3_oracle(complete_graph(5)), "K5");
  c.expect(!s3_oracle(parallel_edges(3)), "3K2");
  time_limit(c, start, 60);
  return c.outcome();
}

Outcome z3_oracles() {
  auto start = std::chrono::steady_clock::now();
  Check c;
  for (const char* name : {"W4", "(4^3,3^4)", "(4^4,3^4)", "(5,4^2,3^5)", "(5^2,3^6)", "(4^5,3^4)"})
    c.expect(is_z3_connected(get_entry(name).graph), name);
  c.expect(!is_z3_connected(complete_graph(4)), "K4");
  time_limit(c, start, 30);
  return c.outcome();
}

Outcome replay() {
  auto start = std::chrono::steady_clock::now();
  Check c;
  for (const char* name : {"(7^4,4^4)", "(7^3,6,5,4^3)", "(7^3,5^3,4^2)", "(7^2,6^3,4^3)",
                           "(8^3,5^2,4^4)", "(8^3,6,4^5)", "(9^3,5,4^6)", "(10^3,4^8)"}) {
    const AtlasEntry& e = get_entry(name);
    if (!e.script) {
      c.expect(false, std::string(name) + " has no script");
      continue;
    }
    try {
      MultiGraph end = replay_script(e.graph, *e.script);
      const MultiGraph& kernel = get_entry(e.script->kernel).graph;
      // Same size and a dominating bijection: isomorphic.
      c.expect(end.edge_count() == kernel.edge_count() && spans_kernel(end, kernel),
               std::string(name) + " does not end at " + e.script->kernel);
    } catch (const std::exception& ex) {
      c.expect(false, std::string(name) + ": " + ex.what());
    }
  }
  for (const char* name : {"(6^5,5^4)", "(6^3,5^4)", "(6^4,5^4)", "(7,6^2,5^5)", "(7^2,5^6)"}) {
    const AtlasEntry& e = get_entry(name);
    if (!e.decomposition) {
      c.expect(false, std::string(name) + " has no decomposition");
      continue;
    }
    c.expect(is_hamiltonian_cycle(e.graph, e.decomposition->cycle), std::string(name) + " cycle");
    c.expect(is_z3_connected(solid_part(e.graph, e.decomposition->cycle)),
             std::string(name) + " solid part");
  }
  time_limit(c, start, 10);
  return c.outcome();
}

Outcome erdos_gallai() {
  auto start = std::chrono::steady_clock::now();
  Check c;
  long long count = 0;
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
      if (left == 0) {
        DegreeSequence s(cur);
        if (s.sum() % 2) return;
        ++count;
        c.expect(is_graphic(s) == brute_force_realization(s, true).has_value(), s.to_string());
        return;
      }
      for (int v = cap; v >= 0; --v) {
        cur.push_back(v);
        rec(left - 1, v);
        cur.pop_back();
      }
    };
    rec(n, n - 1);
  }
  c.note(std::to_string(count) + " sequences");
  time_limit(c, start, 120);
  return c.outcome();
}

Outcome hakimi() {
  Check c;
  std::mt19937_64 rng(2024);
  long long graphic = 0;
  for (int i = 0; i < 10'000; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int& x : v) x = std::uniform_int_distribution<int>(1, n - 1)(rng);
    DegreeSequence s(v);
    const bool g = is_graphic(s);
    graphic += g;
    c.expect(g == is_graphic(laying_sequence(s)), s.to_string());
  }
  c.note(std::to_string(graphic) + " graphic");
  return c.outcome();
}

Outcome main_sweep() {
  auto start = std::chrono::steady_clock::now();
  Check c;
  long long total = 0;
  for (int n = 7; n <= 12; ++n) {
    SweepReport r = sweep(n);
    total += r.realized;
    c.expect(r.ok(), "n=" + std::to_string(n) + ": " + (r.failures.empty() ? "" : r.failures.front()));
    c.expect(r.realized == r.qualifying, "n=" + std::to_string(n) + " realized count");
  }
  c.note(std::to_string(total) + " realized and verified");
  time_limit(c, start, 600);
  return c.outcome();
}

Outcome oracle_cross_check() {
  auto start = std::chrono::steady_clock::now();
  Check c;
  auto rs = small_realizations();
  for (const auto& r : rs)
    c.expect(s3_oracle(r.graph), degree_sequence(r.graph).to_string() + " not S3-connected");
  c.note(std::to_string(rs.size()) + " graphs");
  time_limit(c, start, 1800);
  return c.outcome();
}

Outcome necessity() {
  Check c;
  long long rejected = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& s : graphic_sequences(n, 0)) {
      const bool violates = s.min() <= 3 || s.sum() < 6LL * n - 4;
      if (!violates) continue;
      RealizeOutcome r = realize(s);
      c.expect(!r.accepted() && !r.rejection.empty(), s.to_string() + " accepted");
      ++rejected;
    }
  }
  c.note(std::to_string(rejected) + " rejected");

  // Oracle sample on top of whatever earlier criteria confirmed: kernels,
  // atlas S3 graphs within the cap, and random multigraphs on 2..5 vertices.
  s3_oracle(complete_graph(7));
  s3_oracle(parallel_edges(4));
  for (const auto& name : list_entries()) {
    const AtlasEntry& e = get_entry(name);
    if (e.claim == Claim::s3_connected && e.graph.edge_count() <= 22) s3_oracle(e.graph);
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, 14)(rng);
    MultiGraph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    std::uniform_int_distribution<int> pick(1, n);
    for (int k = 0; k < m; ++k) {
      int a = pick(rng), b = pick(rng);
      if (a != b) g.add_edge(a, b);
    }
    s3_oracle(g);
  }
  for (const MultiGraph& g : s3_confirmed()) {
    const long long n = static_cast<long long>(g.vertex_count());
    c.expect(n == 1 || g.edge_count() >= 3 * n - 2, "edge bound fails on " + to_edge_list(g));
    for (Vertex v : g.vertices()) c.expect(n == 1 || g.degree(v) >= 4, "min degree fails on " + to_edge_list(g));
  }
  c.note(std::to_string(s3_confirmed().size()) + " S3-confirmed graphs");
  return c.outcome();
}

Outcome flow_witness() {
  Check c;
  auto rs = small_realizations();
  for (const auto& r : rs) {
    const MultiGraph& g = r.graph;
    auto o = find_beta_orientation(g, BoundaryFunction::zero(g), true);
    const std::string name = degree_sequence(g).to_string();
    c.expect(o.has_value(), name + " has no witness");
    if (!o) continue;
    c.expect(boundary_of(g, *o).residues == BoundaryFunction::zero(g).residues, name + " not mod-3");
    c.expect(is_strongly_connected(g, *o), name + " not strong");
  }
  c.note(std::to_string(rs.size()) + " graphs");
  return c.outcome();
}

Outcome join_family() {
  auto start = std::chrono::steady_clock::now();
  Check c;
  long long cases = 0;
  for (int n = 11; n <= 40; ++n) {
    for (int d3 = 10; d3 <= n - 1; d3 += 2) {
      const std::string tag = "n=" + std::to_string(n) + " d3=" + std::to_string(d3);
      try {
        JoinFamily jf = build_join_family(n, d3);
        ++cases;
        std::vector<int> want{n - 1, n - 1, d3};
        want.insert(want.end(), static_cast<std::size_t>(n - 3), 4);
        c.expect(degree_sequence(jf.graph) == DegreeSequence(want), tag + " degrees");
        MultiGraph end = replay_script(jf.graph, jf.script);
        const int q = (d3 - 2) / 4;
        c.expect(end.multiplicity(jf.u, jf.u1) == q + 1, tag + " |E(u,u1)|");
        c.expect(end.multiplicity(jf.u, jf.u2) == (d3 - 2) / 2 - q + 1, tag + " |E(u,u2)|");
        c.expect(end.multiplicity(jf.u, jf.u1) >= 3 && end.multiplicity(jf.u, jf.u2) >= 3, tag + " >= 3");
      } catch (const std::exception& ex) {
        c.expect(false, tag + ": " + ex.what());
      }
    }
  }
  c.note(std::to_string(cases) + " (n, d3) pairs");
  time_limit(c, start, 10);
  return c.outcome();
}

MultiGraph random_graph(std::mt19937_64& rng, int n, double p) {
  MultiGraph g;
  for (int v = 1; v <= n; ++v) g.add_vertex(v);
  std::bernoulli_distribution coin(p);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

Outcome properties() {
  Check c;
  std::mt19937_64 rng(99);

  // Lift / inverse-lift round trip.
  for (int i = 0; i < 1000; ++i) {
    const int n = std::uniform_int_distribution<int>(4, 12)(rng);
    MultiGraph g = random_graph(rng, n, 0.5);
    auto es = g.edge_instances();
    if (es.empty()) g.add_edge(1, 2), es = g.edge_instances();
    Edge split = es[std::uniform_int_distribution<std::size_t>(0, es.size() - 1)(rng)];
    std::vector<Vertex> others;
    for (Vertex v : g.vertices())
      if (v != split.u && v != split.v) others.push_back(v);
    std::shuffle(others.begin(), others.end(), rng);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, others.size())(rng);
    std::vector<Vertex> targets(others.begin(), others.begin() + static_cast<long>(k));
    Vertex x = 0;
    MultiGraph up = inverse_lift(g, targets, split, &x);
    c.expect(lift(up, x, split.u, split.v) == g, "lift round trip: " + to_edge_list(g));
  }

  // Closure-witness validity.
  long long found = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 14)(rng);
    MultiGraph g = random_graph(rng, n, std::uniform_real_distribution<double>(0.3, 0.9)(rng));
    bool exhausted = false;
    auto h = hamiltonian_cycle(g, 2'000'000, &exhausted);
    if (h) {
      ++found;
      c.expect(is_hamiltonian_cycle(g, *h), "cycle witness invalid on " + to_edge_list(g));
    }
    ClosureResult cl = bc_closure(g);
    if (cl.closure.edge_count() == static_cast<long long>(n) * (n - 1) / 2)
      c.expect(h.has_value(), "complete closure but no cycle on " + to_edge_list(g));
  }
  c.note(std::to_string(found) + " Hamiltonian witnesses");

  // Contraction degree bookkeeping.
  for (int i = 0; i < 1000; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    MultiGraph g = random_graph(rng, n, 0.5);
    for (auto [e, m] : g.edges())
      if (std::bernoulli_distribution(0.2)(rng)) g.add_edge(e.u, e.v);
    std::vector<Edge> chosen;
    for (const Edge& e : g.edge_instances())
      if (std::bernoulli_distribution(0.3)(rng)) chosen.push_back(e);
    ContractResult r = contract(g, chosen);
    long long loops = 0;
    for (const Edge& e : g.edge_instances())
      if (r.mapping.at(e.u) == r.mapping.at(e.v)) ++loops;
    long long degree_total = 0;
    bool loop_free = true;
    for (Vertex v : r.graph.vertices()) {
      degree_total += r.graph.degree(v);
      loop_free = loop_free && r.graph.multiplicity(v, v) == 0;
    }
    c.expect(loop_free && degree_total == 2 * g.edge_count() - 2 * loops,
             "contraction bookkeeping on " + to_edge_list(g));
  }

  // Certificate tamper rejection.
  std::vector<RealizationResult> pool;
  for (int n = 7; n <= 11; ++n)
    for (const auto& s : graphic_sequences(n, 4))
      if (s.sum() >= 6LL * n - 4 && std::bernoulli_distribution(0.05)(rng)) pool.push_back(*realize(s).result);
  int tampered = 0;
  for (int trial = 0; tampered < 1000; ++trial) {
    RealizationResult r = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    if (!testing::tamper(r.certificate, trial, rng)) continue;
    ++tampered;
    c.expect(!verify(r.graph, r.certificate).ok,
             "tampered certificate accepted for " + degree_sequence(r.graph).to_string());
  }
  c.note(std::to_string(pool.size()) + " realizations tampered");
  return c.outcome();
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"kernel oracle suite", kernel_oracles},
    {"Z3 oracle suite", z3_oracles},
    {"script replay and decompositions", replay},
    {"Erdos-Gallai vs brute force", erdos_gallai},
    {"Hakimi invariance", hakimi},
    {"sufficiency sweep 7 <= n <= 12", main_sweep},
    {"oracle cross-check n <= 8", oracle_cross_check},
    {"necessity", necessity},
    {"modulo-3 orientation witnesses", flow_witness},
    {"join family structure", join_family},
    {"property tests", properties},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all_ok = true;
  for (int i = 1; i <= 11; ++i) {
    if (only && i != only) continue;
    Outcome o;
    try {
      o = kCriteria[i - 1].run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i << ": " << kCriteria[i - 1].name << " ("
              << o.detail << ")" << std::endl;
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
