#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "s3real/atlas.hpp"
#include "s3real/oracles.hpp"
#include "s3real/realize.hpp"

namespace s3real {

MultiGraph havel_hakimi(const DegreeSequence& seq) {
  if (!is_graphic(seq)) throw precondition_error("sequence " + seq.to_string() + " is not graphic");
  const int n = static_cast<int>(seq.size());
  std::vector<std::pair<int, Vertex>> need;  // (remaining degree, vertex)
  MultiGraph g;
  for (int i = 0; i < n; ++i) {
    need.emplace_back(seq.d(static_cast<std::size_t>(i + 1)), i + 1);
    g.add_vertex(i + 1);
  }
  while (true) {
    std::sort(need.begin(), need.end(), [](auto a, auto b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    if (need.empty() || need.front().first == 0) break;
    auto [d, v] = need.front();
    need.erase(need.begin());
    for (int k = 0; k < d; ++k) {
      if (need[static_cast<std::size_t>(k)].first <= 0) throw internal_error("Havel-Hakimi ran dry");
      --need[static_cast<std::size_t>(k)].first;
      g.add_edge(v, need[static_cast<std::size_t>(k)].second);
    }
  }
  return g;
}

namespace {

using Seq = std::vector<int>;  // non-increasing

enum class MoveKind { atlas, k1, oracle, w4, attach };

struct Move {
  MoveKind kind = MoveKind::k1;
  std::string atlas_name;
  MultiGraph oracle_graph;
  int hub = 0;
  std::array<int, 4> rims{};
  int merged = 0;
  std::vector<int> bumped;  // attach: values in the parent that lose one
  Seq child;
};

struct BudgetExhausted {};

Seq sorted(Seq s) {
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

// Distinct values (descending) with multiplicities.
std::vector<std::pair<int, int>> groups(const Seq& s) {
  std::vector<std::pair<int, int>> g;
  for (int x : s) {
    if (!g.empty() && g.back().first == x)
      ++g.back().second;
    else
      g.emplace_back(x, 1);
  }
  return g;
}

// Every way to pick `k` entries (as a multiset) from the groups, subject to a
// minimum value; larger values are tried first.
void choose_multisets(const std::vector<std::pair<int, int>>& gs, int k, int min_value,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> pick;
  std::function<bool(std::size_t, int)> rec = [&](std::size_t gi, int left) {
    if (left == 0) return visit(pick);
    if (gi == gs.size() || gs[gi].first < min_value) return false;
    const int take_max = std::min(left, gs[gi].second);
    for (int take = take_max; take >= 0; --take) {
      for (int i = 0; i < take; ++i) pick.push_back(gs[gi].first);
      bool done = rec(gi + 1, left - take);
      pick.resize(pick.size() - static_cast<std::size_t>(take));
      if (done) return true;
    }
    return false;
  };
  rec(0, k);
}

Seq remove_values(Seq s, const std::vector<int>& values) {
  for (int v : values) {
    auto it = std::find(s.begin(), s.end(), v);
    if (it == s.end()) throw internal_error("z3 planner lost track of an entry");
    s.erase(it);
  }
  return s;
}

// Backtracking enumeration of simple realizations on 1..n; visit returns true
// to stop.
void enumerate_realizations(const Seq& seq, long long limit,
                            const std::function<bool(const MultiGraph&)>& visit) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> need(seq);
  std::vector<std::pair<int, int>> chosen;
  long long seen = 0;
  std::function<bool(int, int)> rec = [&](int i, int j) -> bool {
    if (i == n) {
      MultiGraph g;
      for (int v = 1; v <= n; ++v) g.add_vertex(v);
      for (auto [a, b] : chosen) g.add_edge(a + 1, b + 1);
      ++seen;
      return visit(g) || seen >= limit;
    }
    auto ui = static_cast<std::size_t>(i);
    if (j >= n) return need[ui] == 0 && rec(i + 1, i + 2);
    if (need[ui] > n - j) return false;
    auto uj = static_cast<std::size_t>(j);
    if (need[ui] > 0 && need[uj] > 0) {
      --need[ui];
      --need[uj];
      chosen.emplace_back(i, j);
      bool stop = rec(i, j + 1);
      chosen.pop_back();
      ++need[ui];
      ++need[uj];
      if (stop) return true;
    }
    return rec(i, j + 1);
  };
  rec(0, 1);
}

class Planner {
 public:
  explicit Planner(const RealizeOptions& opts) : opts_(opts) {}

  bool solve(const Seq& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.has_value();
    if (++expanded_ > opts_.budget) throw BudgetExhausted{};
    std::optional<Move> move = plan(s);
    bool ok = move.has_value();
    memo_[s] = std::move(move);
    return ok;
  }

  const Move& move_for(const Seq& s) const { return *memo_.at(s); }

 private:
  static bool viable(const Seq& s) {
    const auto n = static_cast<long long>(s.size());
    if (n == 1) return s[0] == 0;
    if (n < 5 || s.back() < 2) return false;
    DegreeSequence d(s);
    if (d.sum() < 4 * n - 4 || !is_graphic(d)) return false;
    return !in_z3_exceptions(d);
  }

  std::optional<Move> plan(const Seq& s) {
    if (!viable(s)) return std::nullopt;
    Move m;
    if (s.size() == 1) {
      m.kind = MoveKind::k1;
      return m;
    }
    if (const AtlasEntry* e = z3_entry_for(DegreeSequence(s))) {
      m.kind = MoveKind::atlas;
      m.atlas_name = e->name;
      return m;
    }
    if (auto w = try_w4(s)) return w;
    if (auto a = try_attach(s)) return a;
    if (auto o = try_oracle(s)) return o;
    return std::nullopt;
  }

  std::optional<Move> try_w4(const Seq& s) {
    const int n = static_cast<int>(s.size());
    auto gs = groups(s);
    for (auto [h, hc] : gs) {
      if (h < 4) break;
      Seq rest = remove_values(s, {h});
      std::optional<Move> found;
      choose_multisets(groups(rest), 4, 3, [&](const std::vector<int>& rims) {
        const int merged = h + std::accumulate(rims.begin(), rims.end(), 0) - 16;
        if (merged < 2 && !(merged == 0 && n == 5)) return false;
        Seq child = remove_values(rest, rims);
        child.push_back(merged);
        child = sorted(std::move(child));
        if (!solve(child)) return false;
        Move m;
        m.kind = MoveKind::w4;
        m.hub = h;
        std::copy(rims.begin(), rims.end(), m.rims.begin());
        m.merged = merged;
        m.child = std::move(child);
        found = std::move(m);
        return true;
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<Move> try_attach(const Seq& s) {
    const auto n = static_cast<long long>(s.size());
    const long long sum = std::accumulate(s.begin(), s.end(), 0LL);
    const bool has_two = s.back() == 2;
    for (auto [t, tc] : groups(s)) {
      if (t < 2 || (has_two && t != 2)) continue;
      if (sum - 2 * t < 4 * (n - 1) - 4) continue;
      Seq rest = remove_values(s, {t});
      std::optional<Move> found;
      choose_multisets(groups(rest), t, 3, [&](const std::vector<int>& bumped) {
        Seq child = rest;
        for (int v : bumped) *std::find(child.begin(), child.end(), v) -= 1;
        child = sorted(std::move(child));
        if (!solve(child)) return false;
        Move m;
        m.kind = MoveKind::attach;
        m.bumped = bumped;
        m.child = std::move(child);
        found = std::move(m);
        return true;
      });
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<Move> try_oracle(const Seq& s) {
    const long long edges = std::accumulate(s.begin(), s.end(), 0LL) / 2;
    if (s.size() > 9 || edges > std::min(opts_.oracle_cap, 20)) return std::nullopt;
    std::optional<Move> found;
    enumerate_realizations(s, 2000, [&](const MultiGraph& g) {
      if (!is_z3_connected(g, OracleOptions{opts_.oracle_cap, 1})) return false;
      Move m;
      m.kind = MoveKind::oracle;
      m.oracle_graph = g;
      found = std::move(m);
      return true;
    });
    return found;
  }

  const RealizeOptions& opts_;
  std::map<Seq, std::optional<Move>> memo_;
  long long expanded_ = 0;
};

Vertex smallest_with_degree(const MultiGraph& g, int d, const std::set<Vertex>& taken) {
  for (Vertex v : g.vertices())
    if (!taken.count(v) && g.degree(v) == d) return v;
  throw internal_error("no vertex of degree " + std::to_string(d) + " left in the Z3 build");
}

Z3Build construct(const Planner& planner, const Seq& s) {
  const Move& m = planner.move_for(s);
  switch (m.kind) {
    case MoveKind::k1: {
      MultiGraph g;
      g.add_vertex(1);
      return {g, Z3Certificate::make_oracle()};
    }
    case MoveKind::atlas:
      return {get_entry(m.atlas_name).graph, Z3Certificate::make_kernel(m.atlas_name)};
    case MoveKind::oracle:
      return {m.oracle_graph, Z3Certificate::make_oracle()};
    case MoveKind::attach: {
      Z3Build sub = construct(planner, m.child);
      std::set<Vertex> targets;
      for (int value : m.bumped) targets.insert(smallest_with_degree(sub.graph, value - 1, targets));
      Vertex x = sub.graph.fresh_vertex();
      sub.graph.add_vertex(x);
      for (Vertex t : targets) sub.graph.add_edge(x, t);
      return {std::move(sub.graph), Z3Certificate::make_attach(x, std::move(sub.certificate))};
    }
    case MoveKind::w4: {
      Z3Build sub = construct(planner, m.child);
      MultiGraph& g = sub.graph;
      const Vertex z = smallest_with_degree(g, m.merged, {});
      const auto nbrs = g.neighbors(z);
      const Vertex first = g.fresh_vertex();
      const std::array<Vertex, 4> rim{first, first + 1, first + 2, first + 3};
      for (Vertex y : nbrs) g.remove_edge(z, y, g.multiplicity(z, y));
      for (int i = 0; i < 4; ++i) {
        g.add_edge(z, rim[static_cast<std::size_t>(i)]);
        g.add_edge(rim[static_cast<std::size_t>(i)], rim[static_cast<std::size_t>((i + 1) % 4)]);
      }
      std::size_t pos = 0;
      auto deal = [&](Vertex to, int count) {
        for (int k = 0; k < count; ++k) g.add_edge(to, nbrs.at(pos++));
      };
      deal(z, m.hub - 4);
      for (int i = 0; i < 4; ++i) deal(rim[static_cast<std::size_t>(i)], m.rims[static_cast<std::size_t>(i)] - 3);
      if (pos != nbrs.size()) throw internal_error("W4 expansion left neighbours unassigned");
      return {std::move(g), Z3Certificate::make_w4({z, rim[0], rim[1], rim[2], rim[3]},
                                                   std::move(sub.certificate))};
    }
  }
  throw internal_error("unknown Z3 build move");
}

std::optional<MultiGraph> swap_search(const DegreeSequence& seq, const RealizeOptions& opts) {
  MultiGraph g = havel_hakimi(seq);
  std::mt19937_64 rng(opts.seed);
  const OracleOptions oracle{opts.oracle_cap, 1};
  for (int attempt = 0; attempt < 200; ++attempt) {
    if (is_z3_connected(g, oracle)) return g;
    for (int swaps = 0; swaps < 10; ++swaps) {
      auto es = g.edge_instances();
      if (es.size() < 2) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
      Edge e1 = es[pick(rng)], e2 = es[pick(rng)];
      Vertex a = e1.u, b = e1.v, c = e2.u, d = e2.v;
      if (rng() & 1) std::swap(c, d);
      // ab, cd -> ac, bd
      if (a == c || b == d || a == d || b == c) continue;
      if (g.multiplicity(a, c) || g.multiplicity(b, d)) continue;
      g.remove_edge(a, b);
      g.remove_edge(c, d);
      g.add_edge(a, c);
      g.add_edge(b, d);
    }
  }
  return std::nullopt;
}

}  // namespace

Z3Build build_z3_realization(const DegreeSequence& seq, const RealizeOptions& opts) {
  if (!is_z3_realizable(seq))
    throw precondition_error("sequence " + seq.to_string() + " has no Z3-connected realization");

  Planner planner(opts);
  bool solved = false;
  try {
    solved = planner.solve(seq.values());
  } catch (const BudgetExhausted&) {
    solved = false;
  }
  if (solved) return construct(planner, seq.values());

  if (seq.sum() / 2 <= opts.oracle_cap) {
    if (auto g = swap_search(seq, opts)) return {*g, Z3Certificate::make_oracle()};
  }
  throw z3_build_failure("Z3 realization of " + seq.to_string() +
                         " not constructed within budget (existence is guaranteed)");
}

}  // namespace s3real
