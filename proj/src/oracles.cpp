#include "s3real/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <thread>

namespace s3real {

BoundaryFunction BoundaryFunction::zero(const MultiGraph& g) {
  BoundaryFunction b;
  for (Vertex v : g.vertices()) b.residues[v] = 0;
  return b;
}

bool BoundaryFunction::is_valid_for(const MultiGraph& g) const {
  if (residues.size() != g.vertex_count()) return false;
  int total = 0;
  for (const auto& [v, r] : residues) {
    if (!g.has_vertex(v) || r < 0 || r > 2) return false;
    total += r;
  }
  return total % 3 == 0;
}

BoundaryFunction boundary_of(const MultiGraph& g, const Orientation& orientation) {
  if (static_cast<long long>(orientation.size()) != g.edge_count())
    throw precondition_error("orientation must direct every edge instance");
  BoundaryFunction b = BoundaryFunction::zero(g);
  auto inst = g.edge_instances();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    Vertex tail = orientation[i] ? inst[i].v : inst[i].u;
    Vertex head = orientation[i] ? inst[i].u : inst[i].v;
    b.residues[tail] = (b.residues[tail] + 1) % 3;
    b.residues[head] = (b.residues[head] + 2) % 3;
  }
  return b;
}

std::size_t boundary_class(const MultiGraph& g, const BoundaryFunction& beta) {
  if (!beta.is_valid_for(g)) throw precondition_error("boundary function is not a zero-sum map on V(G)");
  auto vs = g.vertices();
  std::size_t idx = 0, p = 1;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i, p *= 3)
    idx += static_cast<std::size_t>(beta.residues.at(vs[i])) * p;
  return idx;
}

BoundaryFunction boundary_from_class(const MultiGraph& g, std::size_t cls) {
  auto vs = g.vertices();
  BoundaryFunction b;
  int total = 0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    int r = static_cast<int>(cls % 3);
    cls /= 3;
    b.residues[vs[i]] = r;
    total += r;
  }
  if (!vs.empty()) b.residues[vs.back()] = (3 - total % 3) % 3;
  return b;
}

std::vector<std::pair<Vertex, Vertex>> directed_edges(const MultiGraph& g,
                                                      const Orientation& orientation) {
  if (static_cast<long long>(orientation.size()) != g.edge_count())
    throw precondition_error("orientation must direct every edge instance");
  std::vector<std::pair<Vertex, Vertex>> out;
  auto inst = g.edge_instances();
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (orientation[i])
      out.emplace_back(inst[i].v, inst[i].u);
    else
      out.emplace_back(inst[i].u, inst[i].v);
  }
  return out;
}

std::uint64_t AchievabilityReport::total_orientations() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

bool AchievabilityReport::all_unrestricted() const {
  return std::all_of(unrestricted.begin(), unrestricted.end(), [](auto x) { return x != 0; });
}

bool AchievabilityReport::all_strong() const {
  return strong_requested &&
         std::all_of(strong.begin(), strong.end(), [](auto x) { return x != 0; });
}

namespace {

struct Setup {
  int n = 0;
  int m = 0;
  std::vector<int> ea, eb;  // endpoint indices per edge instance
  std::vector<std::size_t> p3;
  std::size_t classes = 1;
  int prefix_bits = 0;
};

Setup make_setup(const MultiGraph& g, const OracleOptions& opts) {
  if (g.edge_count() > opts.edge_cap)
    throw cap_exceeded("graph has " + std::to_string(g.edge_count()) + " edges, oracle cap is " +
                       std::to_string(opts.edge_cap));
  if (g.vertex_count() > static_cast<std::size_t>(kOracleMaxVertices))
    throw cap_exceeded("oracle handles at most " + std::to_string(kOracleMaxVertices) + " vertices");
  if (g.edge_count() > 62) throw cap_exceeded("oracle enumeration limited to 62 edges");

  Setup s;
  auto vs = g.vertices();
  s.n = static_cast<int>(vs.size());
  std::map<Vertex, int> index;
  for (int i = 0; i < s.n; ++i) index[vs[static_cast<std::size_t>(i)]] = i;
  for (const Edge& e : g.edge_instances()) {
    s.ea.push_back(index[e.u]);
    s.eb.push_back(index[e.v]);
  }
  s.m = static_cast<int>(s.ea.size());
  for (int i = 0; i + 1 < s.n; ++i) {
    s.p3.push_back(s.classes);
    s.classes *= 3;
  }
  s.p3.push_back(0);  // last vertex does not enter the index
  s.prefix_bits = std::min(4, s.m);
  return s;
}

struct Mode {
  bool strong = false;
  bool count = false;
  bool early_stop = false;
  std::set<std::size_t> witness_classes;
};

struct Accumulator {
  std::vector<std::uint8_t> unr, str;
  std::vector<std::uint64_t> counts;
  std::size_t unr_hits = 0, str_hits = 0;
  std::map<std::size_t, std::pair<int, Orientation>> witnesses;  // class -> (job, orientation)

  Accumulator(const Setup& s, const Mode& mode)
      : unr(s.classes, 0), str(mode.strong ? s.classes : 0, 0),
        counts(mode.count ? s.classes : 0, 0) {}

  [[nodiscard]] bool full(const Setup& s, const Mode& mode) const {
    return (mode.strong ? str_hits : unr_hits) == s.classes;
  }
};

// Orientations with the top prefix_bits edges fixed to `job`, the rest walked
// in Gray-code order. Residues, the class index and the directed adjacency
// masks are updated per flip.
void scan_job(const Setup& s, const Mode& mode, int job, Accumulator& acc) {
  const int n = s.n, m = s.m;
  const int low = m - s.prefix_bits;
  Orientation bits(static_cast<std::size_t>(m), false);
  std::vector<int> res(static_cast<std::size_t>(n), 0);
  std::vector<int> cnt(static_cast<std::size_t>(n * n), 0);
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0);

  auto add_arc = [&](int a, int b) {
    if (cnt[static_cast<std::size_t>(a * n + b)]++ == 0) {
      out[static_cast<std::size_t>(a)] |= 1u << b;
      in[static_cast<std::size_t>(b)] |= 1u << a;
    }
  };
  auto drop_arc = [&](int a, int b) {
    if (--cnt[static_cast<std::size_t>(a * n + b)] == 0) {
      out[static_cast<std::size_t>(a)] &= ~(1u << b);
      in[static_cast<std::size_t>(b)] &= ~(1u << a);
    }
  };
  std::size_t idx = 0;
  auto shift = [&](int v, int delta) {
    auto& r = res[static_cast<std::size_t>(v)];
    int nr = (r + delta) % 3;
    idx = idx + static_cast<std::size_t>(nr) * s.p3[static_cast<std::size_t>(v)] -
          static_cast<std::size_t>(r) * s.p3[static_cast<std::size_t>(v)];
    r = nr;
  };

  for (int e = 0; e < m; ++e) {
    bool rev = e >= low && ((job >> (e - low)) & 1);
    bits[static_cast<std::size_t>(e)] = rev;
    int a = s.ea[static_cast<std::size_t>(e)], b = s.eb[static_cast<std::size_t>(e)];
    if (rev) std::swap(a, b);
    shift(a, 1);
    shift(b, 2);
    add_arc(a, b);
  }

  const std::uint32_t all = n >= 32 ? ~0u : ((1u << n) - 1);
  auto reach = [&](const std::vector<std::uint32_t>& nb) {
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all;
  };
  auto strongly_connected = [&] { return n <= 1 || (reach(out) && reach(in)); };

  auto record_witness = [&](std::size_t cls) {
    if (!mode.witness_classes.count(cls)) return;
    acc.witnesses.try_emplace(cls, job, bits);
  };

  const std::uint64_t steps = std::uint64_t{1} << low;
  for (std::uint64_t k = 0;; ) {
    if (mode.count) ++acc.counts[idx];
    if (!acc.unr[idx]) {
      acc.unr[idx] = 1;
      ++acc.unr_hits;
      if (!mode.strong) record_witness(idx);
    }
    if (mode.strong && !acc.str[idx] && strongly_connected()) {
      acc.str[idx] = 1;
      ++acc.str_hits;
      record_witness(idx);
    }
    if (mode.early_stop && acc.full(s, mode)) return;

    if (++k == steps) break;
    const int e = std::countr_zero(k);
    int a = s.ea[static_cast<std::size_t>(e)], b = s.eb[static_cast<std::size_t>(e)];
    if (!bits[static_cast<std::size_t>(e)]) {
      // a->b becomes b->a
      shift(a, 1);
      shift(b, 2);
      drop_arc(a, b);
      add_arc(b, a);
    } else {
      shift(a, 2);
      shift(b, 1);
      drop_arc(b, a);
      add_arc(a, b);
    }
    bits[static_cast<std::size_t>(e)] = !bits[static_cast<std::size_t>(e)];
  }
}

Accumulator run_scan(const Setup& s, const Mode& mode, const OracleOptions& opts) {
  const int jobs = 1 << s.prefix_bits;
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs));

  std::vector<Accumulator> accs(threads, Accumulator(s, mode));
  auto worker = [&](unsigned w) {
    for (int job = static_cast<int>(w); job < jobs; job += static_cast<int>(threads)) {
      if (mode.early_stop && accs[w].full(s, mode)) return;
      scan_job(s, mode, job, accs[w]);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  Accumulator total = std::move(accs[0]);
  for (unsigned w = 1; w < threads; ++w) {
    const Accumulator& a = accs[w];
    for (std::size_t c = 0; c < s.classes; ++c) {
      total.unr[c] |= a.unr[c];
      if (mode.strong) total.str[c] |= a.str[c];
      if (mode.count) total.counts[c] += a.counts[c];
    }
    for (const auto& [cls, wit] : a.witnesses) {
      auto it = total.witnesses.find(cls);
      if (it == total.witnesses.end() || wit.first < it->second.first) total.witnesses[cls] = wit;
    }
  }
  total.unr_hits = static_cast<std::size_t>(std::count(total.unr.begin(), total.unr.end(), 1));
  total.str_hits = static_cast<std::size_t>(std::count(total.str.begin(), total.str.end(), 1));
  return total;
}

}  // namespace

AchievabilityReport achievable_boundaries(const MultiGraph& g, bool require_strong,
                                          const OracleOptions& opts,
                                          const std::vector<std::size_t>& witness_classes) {
  Setup s = make_setup(g, opts);
  if (s.n > 14) throw cap_exceeded("full boundary report handles at most 14 vertices");
  Mode mode;
  mode.strong = require_strong;
  mode.count = true;
  mode.witness_classes.insert(witness_classes.begin(), witness_classes.end());
  for (std::size_t c : witness_classes)
    if (c >= s.classes) throw precondition_error("boundary class out of range");

  AchievabilityReport rep;
  rep.class_count = s.classes;
  rep.strong_requested = require_strong;
  if (s.n == 0) {
    rep.unrestricted = {1};
    rep.strong = {static_cast<std::uint8_t>(require_strong)};
    rep.counts = {1};
    return rep;
  }
  Accumulator acc = run_scan(s, mode, opts);
  rep.unrestricted = std::move(acc.unr);
  rep.strong = require_strong ? std::move(acc.str) : std::vector<std::uint8_t>(s.classes, 0);
  rep.counts = std::move(acc.counts);
  for (auto& [cls, wit] : acc.witnesses) rep.witnesses[cls] = std::move(wit.second);
  return rep;
}

namespace {

bool decide(const MultiGraph& g, bool strong, const OracleOptions& opts) {
  Setup s = make_setup(g, opts);
  if (s.n <= 1) return true;
  Mode mode;
  mode.strong = strong;
  mode.early_stop = true;
  Accumulator acc = run_scan(s, mode, opts);
  return acc.full(s, mode);
}

}  // namespace

bool is_s3_connected(const MultiGraph& g, const OracleOptions& opts) { return decide(g, true, opts); }

bool is_z3_connected(const MultiGraph& g, const OracleOptions& opts) { return decide(g, false, opts); }

std::optional<Orientation> find_beta_orientation(const MultiGraph& g, const BoundaryFunction& beta,
                                                 bool require_strong, const OracleOptions& opts) {
  if (!beta.is_valid_for(g)) throw precondition_error("boundary function is not a zero-sum map on V(G)");
  if (g.edge_count() > opts.edge_cap)
    throw cap_exceeded("graph has " + std::to_string(g.edge_count()) + " edges, oracle cap is " +
                       std::to_string(opts.edge_cap));

  auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  std::map<Vertex, int> index;
  for (int i = 0; i < n; ++i) index[vs[static_cast<std::size_t>(i)]] = i;
  std::vector<int> ea, eb, target(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) target[static_cast<std::size_t>(i)] = beta.residues.at(vs[static_cast<std::size_t>(i)]);
  for (const Edge& e : g.edge_instances()) {
    ea.push_back(index[e.u]);
    eb.push_back(index[e.v]);
  }
  const int m = static_cast<int>(ea.size());
  std::vector<int> res(static_cast<std::size_t>(n), 0), undecided(static_cast<std::size_t>(n), 0);
  std::vector<int> outdeg(static_cast<std::size_t>(n), 0), indeg(static_cast<std::size_t>(n), 0);
  for (int e = 0; e < m; ++e) {
    ++undecided[static_cast<std::size_t>(ea[static_cast<std::size_t>(e)])];
    ++undecided[static_cast<std::size_t>(eb[static_cast<std::size_t>(e)])];
  }
  for (int i = 0; i < n; ++i)
    if (undecided[static_cast<std::size_t>(i)] == 0 && target[static_cast<std::size_t>(i)] != 0) return std::nullopt;

  Orientation bits(static_cast<std::size_t>(m), false);

  // A vertex with one undecided edge ends at res +- 1, so it is stuck iff
  // res == target; with none left it must already match.
  auto feasible = [&](int v) {
    auto i = static_cast<std::size_t>(v);
    if (undecided[i] >= 2) return true;
    if (undecided[i] == 1) return res[i] != target[i];
    if (res[i] != target[i]) return false;
    if (require_strong && n > 1 && (outdeg[i] == 0 || indeg[i] == 0)) return false;
    return true;
  };

  auto apply = [&](int e, bool rev, int sign) {
    int a = ea[static_cast<std::size_t>(e)], b = eb[static_cast<std::size_t>(e)];
    if (rev) std::swap(a, b);
    auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
    res[ia] = (res[ia] + (sign > 0 ? 1 : 2)) % 3;
    res[ib] = (res[ib] + (sign > 0 ? 2 : 1)) % 3;
    outdeg[ia] += sign;
    indeg[ib] += sign;
    undecided[ia] -= sign;
    undecided[ib] -= sign;
  };

  auto dfs = [&](auto&& self, int e) -> bool {
    if (e == m) return !require_strong || is_strongly_connected(g, bits);
    for (bool rev : {false, true}) {
      apply(e, rev, +1);
      bits[static_cast<std::size_t>(e)] = rev;
      if (feasible(ea[static_cast<std::size_t>(e)]) && feasible(eb[static_cast<std::size_t>(e)]) &&
          self(self, e + 1))
        return true;
      apply(e, rev, -1);
    }
    bits[static_cast<std::size_t>(e)] = false;
    return false;
  };

  if (n == 0) return Orientation{};
  if (require_strong && n > 1 && m == 0) return std::nullopt;
  if (!dfs(dfs, 0)) return std::nullopt;
  return bits;
}

std::optional<MultiGraph> brute_force_realization(const DegreeSequence& seq, bool simple_only) {
  const int n = static_cast<int>(seq.size());
  if (n > 8) throw cap_exceeded("brute-force realization handles n <= 8");
  if (n == 0) return MultiGraph{};
  if (seq.sum() % 2 != 0) return std::nullopt;

  std::vector<int> need(seq.values());
  std::vector<std::vector<int>> mult(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));

  // Pairs (i, j), i < j, in lexicographic order.
  auto dfs = [&](auto&& self, int i, int j) -> bool {
    if (i == n) return true;
    auto ui = static_cast<std::size_t>(i);
    if (j >= n) {
      if (need[ui] != 0) return false;
      return self(self, i + 1, i + 2);
    }
    auto uj = static_cast<std::size_t>(j);
    // Remaining capacity check for vertex i.
    const int remaining_pairs = n - j;
    if (simple_only && need[ui] > remaining_pairs) return false;
    int hi = std::min(need[ui], need[uj]);
    if (simple_only) hi = std::min(hi, 1);
    int lo = 0;
    if (j == n - 1) lo = need[ui];
    for (int k = hi; k >= lo; --k) {
      need[ui] -= k;
      need[uj] -= k;
      mult[ui][uj] = k;
      bool ok = self(self, i, j + 1);
      need[ui] += k;
      need[uj] += k;
      if (ok) return true;
    }
    mult[ui][uj] = 0;
    return false;
  };
  if (!dfs(dfs, 0, 1)) return std::nullopt;

  MultiGraph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (int k = mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; k > 0) g.add_edge(i + 1, j + 1, k);
  return g;
}

}  // namespace s3real
