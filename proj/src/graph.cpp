#include "s3real/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace s3real {

namespace {

const std::map<Vertex, int> kNoNeighbors;

void require(bool ok, const std::string& msg) {
  if (!ok) throw precondition_error(msg);
}

void require_simple(const MultiGraph& g, const char* op) {
  require(is_simple(g), std::string(op) + " needs a simple graph");
}

void require_distinct_vertices(const MultiGraph& g, std::span<const Vertex> vs, const char* op) {
  std::set<Vertex> seen;
  for (Vertex v : vs) {
    require(g.has_vertex(v), std::string(op) + ": vertex " + std::to_string(v) + " not in graph");
    require(seen.insert(v).second, std::string(op) + ": duplicate vertex " + std::to_string(v));
  }
}

}  // namespace

// ---- MultiGraph ----

MultiGraph MultiGraph::from_edge_list(std::span<const std::pair<Vertex, Vertex>> pairs,
                                      std::span<const Vertex> extra_vertices) {
  MultiGraph g;
  for (Vertex v : extra_vertices) g.add_vertex(v);
  for (const auto& [a, b] : pairs) g.add_edge(a, b);
  return g;
}

void MultiGraph::add_vertex(Vertex v) { adj_.try_emplace(v); }

void MultiGraph::add_edge(Vertex a, Vertex b, int count) {
  require(a != b, "loop at vertex " + std::to_string(a));
  require(count >= 0, "negative edge count");
  if (count == 0) {
    add_vertex(a);
    add_vertex(b);
    return;
  }
  adj_[a][b] += count;
  adj_[b][a] += count;
  edge_count_ += count;
}

void MultiGraph::remove_edge(Vertex a, Vertex b, int count) {
  require(multiplicity(a, b) >= count,
          "edge " + std::to_string(a) + "-" + std::to_string(b) + " not present");
  auto drop = [&](Vertex x, Vertex y) {
    auto& row = adj_[x];
    if ((row[y] -= count) == 0) row.erase(y);
  };
  drop(a, b);
  drop(b, a);
  edge_count_ -= count;
}

void MultiGraph::remove_vertex(Vertex v) {
  auto it = adj_.find(v);
  require(it != adj_.end(), "vertex " + std::to_string(v) + " not in graph");
  for (const auto& [w, m] : it->second) {
    adj_[w].erase(v);
    edge_count_ -= m;
  }
  adj_.erase(it);
}

int MultiGraph::multiplicity(Vertex a, Vertex b) const {
  auto it = adj_.find(a);
  if (it == adj_.end()) return 0;
  auto jt = it->second.find(b);
  return jt == it->second.end() ? 0 : jt->second;
}

int MultiGraph::degree(Vertex v) const {
  int d = 0;
  for (const auto& [w, m] : incident(v)) d += m;
  return d;
}

std::vector<Vertex> MultiGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, row] : adj_) out.push_back(v);
  return out;
}

std::vector<Vertex> MultiGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (const auto& [w, m] : incident(v)) out.push_back(w);
  return out;
}

const std::map<Vertex, int>& MultiGraph::incident(Vertex v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? kNoNeighbors : it->second;
}

std::vector<std::pair<Edge, int>> MultiGraph::edges() const {
  std::vector<std::pair<Edge, int>> out;
  for (const auto& [u, row] : adj_) {
    for (auto it = row.upper_bound(u); it != row.end(); ++it) {
      out.emplace_back(Edge(u, it->first), it->second);
    }
  }
  return out;
}

std::vector<Edge> MultiGraph::edge_instances() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (const auto& [e, m] : edges()) out.insert(out.end(), static_cast<std::size_t>(m), e);
  return out;
}

Vertex MultiGraph::max_vertex() const {
  require(!adj_.empty(), "empty graph has no vertices");
  return adj_.rbegin()->first;
}

Vertex MultiGraph::fresh_vertex() const { return adj_.empty() ? 1 : max_vertex() + 1; }

// ---- constructors ----

MultiGraph complete_graph(int n, Vertex first) {
  MultiGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(first + i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(first + i, first + j);
  return g;
}

MultiGraph cycle_graph(int n, Vertex first) {
  require(n >= 3, "cycle needs at least 3 vertices");
  MultiGraph g;
  for (int i = 0; i < n; ++i) g.add_edge(first + i, first + (i + 1) % n);
  return g;
}

MultiGraph parallel_edges(int m) {
  MultiGraph g;
  g.add_edge(1, 2, m);
  return g;
}

MultiGraph wheel_graph(int rim) {
  MultiGraph g = cycle_graph(rim, 2);
  for (int i = 0; i < rim; ++i) g.add_edge(1, 2 + i);
  return g;
}

// ---- queries ----

DegreeSequence degree_sequence(const MultiGraph& g) {
  std::vector<int> d;
  d.reserve(g.vertex_count());
  for (Vertex v : g.vertices()) d.push_back(g.degree(v));
  return DegreeSequence(std::move(d));
}

bool is_simple(const MultiGraph& g) {
  for (const auto& [e, m] : g.edges())
    if (m > 1) return false;
  return true;
}

bool is_connected(const MultiGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto vs = g.vertices();
  std::set<Vertex> seen{vs.front()};
  std::vector<Vertex> stack{vs.front()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& [w, m] : g.incident(v))
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == g.vertex_count();
}

// ---- structural edits ----

MultiGraph delete_vertex(const MultiGraph& g, Vertex v) {
  MultiGraph out = g;
  out.remove_vertex(v);
  return out;
}

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const Vertex> vertices) {
  std::set<Vertex> keep(vertices.begin(), vertices.end());
  MultiGraph out;
  for (Vertex v : keep) {
    require(g.has_vertex(v), "induced subgraph: vertex " + std::to_string(v) + " not in graph");
    out.add_vertex(v);
  }
  for (const auto& [e, m] : g.edges())
    if (keep.count(e.u) && keep.count(e.v)) out.add_edge(e.u, e.v, m);
  return out;
}

MultiGraph remove_edges(const MultiGraph& g, std::span<const Edge> edges) {
  MultiGraph out = g;
  for (const Edge& e : edges) out.remove_edge(e.u, e.v);
  return out;
}

MultiGraph lift(const MultiGraph& g, Vertex u, Vertex v, Vertex w) {
  require(g.has_vertex(u), "lift: vertex " + std::to_string(u) + " not in graph");
  require(v != w, "lift: v and w must differ");
  require(u != v && u != w, "lift: v and w must differ from u");
  require(g.degree(u) >= 4, "lift: vertex " + std::to_string(u) + " has degree " +
                                std::to_string(g.degree(u)) + " < 4");
  require(g.multiplicity(u, v) > 0 && g.multiplicity(u, w) > 0,
          "lift: uv and uw must be edges");
  MultiGraph out = delete_vertex(g, u);
  out.add_edge(v, w);
  return out;
}

ContractResult contract(const MultiGraph& g, std::span<const Edge> edge_set) {
  std::map<Edge, int> used;
  for (const Edge& e : edge_set) {
    require(++used[e] <= g.multiplicity(e.u, e.v),
            "contract: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
  }

  // Union-find keyed by vertex id; the root is always the class minimum.
  std::map<Vertex, Vertex> parent;
  for (Vertex v : g.vertices()) parent[v] = v;
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [e, count] : used) {
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  ContractResult res;
  for (Vertex v : g.vertices()) {
    Vertex r = find(v);
    res.mapping[v] = r;
    res.graph.add_vertex(r);
  }
  for (const auto& [e, m] : g.edges()) {
    Vertex a = res.mapping[e.u], b = res.mapping[e.v];
    if (a != b) res.graph.add_edge(a, b, m);
  }
  return res;
}

ContractResult contract_vertices(const MultiGraph& g, std::span<const Vertex> vertices) {
  return contract(g, induced_subgraph(g, vertices).edge_instances());
}

MultiGraph join(const MultiGraph& g, const MultiGraph& h) {
  for (Vertex v : h.vertices())
    require(!g.has_vertex(v), "join: vertex id " + std::to_string(v) + " used by both graphs");
  MultiGraph out = g;
  for (Vertex v : h.vertices()) out.add_vertex(v);
  for (const auto& [e, m] : h.edges()) out.add_edge(e.u, e.v, m);
  for (Vertex a : g.vertices())
    for (Vertex b : h.vertices()) out.add_edge(a, b);
  return out;
}

MultiGraph complement(const MultiGraph& g) {
  require_simple(g, "complement");
  auto vs = g.vertices();
  MultiGraph out;
  for (Vertex v : vs) out.add_vertex(v);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.multiplicity(vs[i], vs[j]) == 0) out.add_edge(vs[i], vs[j]);
  return out;
}

// ---- closure and Hamiltonian cycles ----

ClosureResult bc_closure(const MultiGraph& g) {
  require_simple(g, "closure");
  ClosureResult res{g, {}};
  auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  std::map<Vertex, int> deg;
  for (Vertex v : vs) deg[v] = g.degree(v);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Vertex a = vs[i], b = vs[j];
        if (res.closure.multiplicity(a, b) == 0 && deg[a] + deg[b] >= n) {
          res.closure.add_edge(a, b);
          res.added.emplace_back(a, b);
          ++deg[a];
          ++deg[b];
          changed = true;
        }
      }
    }
  }
  return res;
}

bool is_hamiltonian_cycle(const MultiGraph& g, const HamCycleWitness& cycle) {
  const auto& c = cycle.order;
  if (c.size() != g.vertex_count() || c.size() < 3) return false;
  std::set<Vertex> distinct(c.begin(), c.end());
  if (distinct.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!g.has_vertex(c[i])) return false;
    if (g.multiplicity(c[i], c[(i + 1) % c.size()]) == 0) return false;
  }
  return true;
}

namespace {

// Removes edge xy from a Hamiltonian cycle of h + xy, using only edges of h.
// deg_h(x) + deg_h(y) >= n forces the crossing pair to exist.
std::vector<Vertex> reroute(const MultiGraph& h, std::vector<Vertex> c, Vertex x, Vertex y) {
  const std::size_t n = c.size();
  auto pos_x = static_cast<std::size_t>(std::find(c.begin(), c.end(), x) - c.begin());
  std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(pos_x), c.end());
  if (c[1] == y) std::reverse(c.begin() + 1, c.end());
  if (c[n - 1] != y) throw internal_error("reroute: xy is not a cycle edge");

  for (std::size_t i = 1; i + 2 < n; ++i) {
    if (h.multiplicity(c[0], c[i + 1]) > 0 && h.multiplicity(c[n - 1], c[i]) > 0) {
      std::vector<Vertex> out{c[0]};
      for (std::size_t k = i + 1; k < n; ++k) out.push_back(c[k]);
      for (std::size_t k = i; k >= 1; --k) out.push_back(c[k]);
      return out;
    }
  }
  throw internal_error("reroute: no crossing pair for closure edge");
}

bool uses_edge(const std::vector<Vertex>& c, Vertex x, Vertex y) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex a = c[i], b = c[(i + 1) % c.size()];
    if ((a == x && b == y) || (a == y && b == x)) return true;
  }
  return false;
}

struct HamSearch {
  const MultiGraph& g;
  long long cap;
  long long steps = 0;
  bool aborted = false;
  std::vector<Vertex> path;
  std::set<Vertex> used;

  bool extend() {
    if (++steps > cap) {
      aborted = true;
      return false;
    }
    if (path.size() == g.vertex_count()) return g.multiplicity(path.back(), path.front()) > 0;
    for (Vertex w : g.neighbors(path.back())) {
      if (used.count(w)) continue;
      path.push_back(w);
      used.insert(w);
      if (extend()) return true;
      used.erase(w);
      path.pop_back();
      if (aborted) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<HamCycleWitness> hamiltonian_cycle(const MultiGraph& g, long long search_cap,
                                                 bool* exhausted) {
  require(g.vertex_count() >= 3, "Hamiltonian cycle needs n >= 3");
  require_simple(g, "Hamiltonian cycle");
  if (exhausted) *exhausted = true;

  const auto n = static_cast<long long>(g.vertex_count());
  ClosureResult cl = bc_closure(g);
  if (cl.closure.edge_count() == n * (n - 1) / 2) {
    std::vector<Vertex> cycle = g.vertices();
    MultiGraph h = cl.closure;
    for (auto it = cl.added.rbegin(); it != cl.added.rend(); ++it) {
      h.remove_edge(it->u, it->v);
      if (uses_edge(cycle, it->u, it->v)) cycle = reroute(h, std::move(cycle), it->u, it->v);
    }
    HamCycleWitness w{std::move(cycle)};
    if (!is_hamiltonian_cycle(g, w)) throw internal_error("closure unwinding produced a bad cycle");
    return w;
  }

  for (Vertex v : g.vertices())
    if (g.degree(v) < 2) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;

  HamSearch search{g, search_cap, 0, false, {}, {}};
  Vertex start = g.vertices().front();
  search.path.push_back(start);
  search.used.insert(start);
  if (search.extend()) return HamCycleWitness{search.path};
  if (exhausted) *exhausted = !search.aborted;
  return std::nullopt;
}

// ---- inverse operations ----

MultiGraph inverse_layoff(const MultiGraph& g, std::span<const Vertex> targets, Vertex* added) {
  require(targets.size() >= 4, "inverse layoff needs at least 4 targets");
  require_simple(g, "inverse layoff");
  require_distinct_vertices(g, targets, "inverse layoff");
  MultiGraph out = g;
  Vertex x = g.fresh_vertex();
  out.add_vertex(x);
  for (Vertex t : targets) out.add_edge(x, t);
  if (added) *added = x;
  return out;
}

MultiGraph inverse_lift(const MultiGraph& g, std::span<const Vertex> targets, Edge split_edge,
                        Vertex* added) {
  require(targets.size() >= 2, "inverse lift needs at least 2 targets");
  require_simple(g, "inverse lift");
  require_distinct_vertices(g, targets, "inverse lift");
  require(g.multiplicity(split_edge.u, split_edge.v) > 0, "inverse lift: split edge absent");
  for (Vertex t : targets)
    require(t != split_edge.u && t != split_edge.v, "inverse lift: split edge touches a target");
  MultiGraph out = g;
  Vertex x = g.fresh_vertex();
  out.remove_edge(split_edge.u, split_edge.v);
  out.add_edge(x, split_edge.u);
  out.add_edge(x, split_edge.v);
  for (Vertex t : targets) out.add_edge(x, t);
  if (added) *added = x;
  return out;
}

K6Expansion expand_k6(const MultiGraph& g, Vertex u, std::span<const int> quotas) {
  require(g.has_vertex(u), "K6 expansion: vertex " + std::to_string(u) + " not in graph");
  require_simple(g, "K6 expansion");
  require(!quotas.empty() && quotas.size() <= 5, "K6 expansion needs 1..5 quotas");
  require(std::all_of(quotas.begin(), quotas.end(), [](int q) { return q >= 1; }),
          "K6 expansion quotas must be positive");
  require(std::accumulate(quotas.begin(), quotas.end(), 0) == g.degree(u),
          "K6 expansion quotas must sum to d(u)");

  auto nbrs = g.neighbors(u);
  K6Expansion res{delete_vertex(g, u), {u}};
  Vertex next = g.fresh_vertex();
  for (int i = 1; i < 6; ++i) res.k6.push_back(next++);
  for (Vertex v : res.k6) res.graph.add_vertex(v);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) res.graph.add_edge(res.k6[i], res.k6[j]);

  std::size_t pos = 0;
  for (std::size_t i = 0; i < quotas.size(); ++i)
    for (int q = 0; q < quotas[i]; ++q) res.graph.add_edge(res.k6[i], nbrs[pos++]);
  return res;
}

bool is_strongly_connected(const MultiGraph& g, const Orientation& orientation) {
  require(static_cast<long long>(orientation.size()) == g.edge_count(),
          "orientation must direct every edge instance");
  if (g.vertex_count() <= 1) return true;
  std::map<Vertex, std::vector<Vertex>> out, in;
  auto inst = g.edge_instances();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    Vertex a = inst[i].u, b = inst[i].v;
    if (orientation[i]) std::swap(a, b);
    out[a].push_back(b);
    in[b].push_back(a);
  }
  auto reaches_all = [&](std::map<Vertex, std::vector<Vertex>>& nb) {
    Vertex s = g.vertices().front();
    std::set<Vertex> seen{s};
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : nb[v])
        if (seen.insert(w).second) q.push(w);
    }
    return seen.size() == g.vertex_count();
  };
  return reaches_all(out) && reaches_all(in);
}

}  // namespace s3real
