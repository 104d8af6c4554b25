#include "s3real/realize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "s3real/atlas.hpp"

namespace s3real {

namespace {

using Seq = std::vector<int>;

DegreeSequence make_seq(Seq v) { return DegreeSequence(std::move(v)); }

// Distinct vertices whose degrees are the given values, smallest id first for
// each value in turn.
std::vector<Vertex> pick_by_degree(const MultiGraph& g, const std::vector<int>& degrees) {
  std::set<Vertex> taken;
  std::vector<Vertex> out;
  for (int d : degrees) {
    Vertex found = 0;
    bool ok = false;
    for (Vertex v : g.vertices()) {
      if (!taken.count(v) && g.degree(v) == d) {
        found = v;
        ok = true;
        break;
      }
    }
    if (!ok) throw internal_error("no free vertex of degree " + std::to_string(d));
    taken.insert(found);
    out.push_back(found);
  }
  return out;
}

RealizationResult from_atlas(const std::string& name, std::string label) {
  const AtlasEntry& e = get_entry(name);
  RealizationResult r{e.graph, {}, {std::move(label)}};
  if (e.decomposition) {
    r.certificate = Certificate::make_z3_plus_ham(
        e.decomposition->cycle, Z3Certificate::make_kernel(e.decomposition->solid_entry));
  } else if (e.script) {
    r.certificate = Certificate::make_script(*e.script);
  } else {
    r.certificate = Certificate::make_kernel(e.name);
  }
  return r;
}

RealizationResult recurse(const DegreeSequence& seq, const RealizeOptions& opts);

// Child realizes the laying sequence; a new vertex joins the d_n largest.
RealizationResult via_layoff(const DegreeSequence& seq, const RealizeOptions& opts,
                             std::string label) {
  const int dn = seq.min();
  RealizationResult child = recurse(laying_sequence(seq), opts);
  std::vector<int> want;
  for (int i = 1; i <= dn; ++i) want.push_back(seq.d(static_cast<std::size_t>(i)) - 1);
  auto targets = pick_by_degree(child.graph, want);
  Vertex x = 0;
  MultiGraph g = inverse_layoff(child.graph, targets, &x);
  child.trace.insert(child.trace.begin(), std::move(label));
  return {std::move(g), Certificate::make_layoff(x, std::move(child.certificate)),
          std::move(child.trace)};
}

// Child realizes the lifting sequence; a new vertex joins the d_n - 2 largest
// and splits an edge avoiding them.
RealizationResult via_inverse_lift(const DegreeSequence& seq, const RealizeOptions& opts,
                                   std::string label) {
  const int dn = seq.min();
  RealizationResult child = recurse(lifting_sequence(seq), opts);
  std::vector<int> want;
  for (int i = 1; i <= dn - 2; ++i) want.push_back(seq.d(static_cast<std::size_t>(i)) - 1);
  auto targets = pick_by_degree(child.graph, want);
  std::set<Vertex> tset(targets.begin(), targets.end());
  std::optional<Edge> split;
  for (auto [e, mult] : child.graph.edges()) {
    if (!tset.count(e.u) && !tset.count(e.v)) {
      split = e;
      break;
    }
  }
  if (!split) throw internal_error("inverse lift: every edge meets the targets");
  Vertex x = 0;
  MultiGraph g = inverse_lift(child.graph, targets, *split, &x);
  child.trace.insert(child.trace.begin(), std::move(label));
  return {std::move(g),
          Certificate::make_lift(x, split->u, split->v, std::move(child.certificate)),
          std::move(child.trace)};
}

// Child realizes `reduced` (length n-5); its vertex of degree `merged` becomes
// a K6 whose first members take quotas[i] of its edges.
RealizationResult via_k6(const DegreeSequence& reduced, int merged, const std::vector<int>& quotas,
                         const RealizeOptions& opts, std::string label) {
  if (!is_graphic(reduced))
    throw internal_error("reduced sequence " + reduced.to_string() + " is not graphic");
  RealizationResult child = recurse(reduced, opts);
  Vertex u = pick_by_degree(child.graph, {merged}).front();
  std::vector<int> positive;
  for (int q : quotas)
    if (q > 0) positive.push_back(q);
  K6Expansion ex = expand_k6(child.graph, u, positive);
  child.trace.insert(child.trace.begin(), std::move(label));
  return {std::move(ex.graph), Certificate::make_k6(ex.k6, std::move(child.certificate)),
          std::move(child.trace)};
}

bool is_seq(const DegreeSequence& seq, const char* text) { return seq == parse_sequence(text); }

[[noreturn]] void uncovered(const DegreeSequence& seq, const char* where) {
  throw internal_error(std::string(where) + ": no case covers " + seq.to_string());
}

// Graphic, d_n >= 4, sum >= 6n-4.
RealizationResult dispatch(const DegreeSequence& seq, const RealizeOptions& opts) {
  const long long n = static_cast<long long>(seq.size());
  const long long sum = seq.sum();
  const int dn = seq.min();
  if (n == 7 || seq.d(2) == n - 1) {
    auto r = realize_two_large(seq, opts);
    r.trace.insert(r.trace.begin(), "main:two-large");
    return r;
  }
  if (dn >= 7) return via_layoff(seq, opts, "main:min>=7:layoff");
  if (dn == 6) {
    if (sum >= 6 * n + 2) return via_layoff(seq, opts, "main:min=6:layoff");
    return via_inverse_lift(seq, opts, "main:regular6:inverse-lift");
  }
  if (dn == 5) {
    if (sum >= 6 * n) return via_layoff(seq, opts, "main:min=5:layoff");
    if (sum == 6 * n - 2) {
      if (seq.d(3) == 5) {
        auto r = build_z3_plus_ham(seq, opts);
        r.trace.insert(r.trace.begin(), "main:min=5:z3+ham");
        return r;
      }
      return via_inverse_lift(seq, opts, "main:min=5:inverse-lift");
    }
    auto r = realize_min5_tight(seq, opts);
    r.trace.insert(r.trace.begin(), "main:min=5:tight");
    return r;
  }
  if (sum >= 6 * n - 2) {
    if (seq.d(4) >= 5) return via_layoff(seq, opts, "main:min=4:layoff");
    return via_inverse_lift(seq, opts, "main:min=4:d4=4:inverse-lift");
  }
  return via_inverse_lift(seq, opts, "main:min=4:tight:inverse-lift");
}

std::string rejection_reason(const DegreeSequence& seq) {
  if (seq.empty()) return "empty sequence";
  if (!is_graphic(seq)) return "not graphic";
  const long long n = static_cast<long long>(seq.size());
  std::string why;
  if (seq.min() < 4) why = "d_n = " + std::to_string(seq.min()) + " < 4";
  if (seq.sum() < 6 * n - 4) {
    if (!why.empty()) why += "; ";
    why += "sum = " + std::to_string(seq.sum()) + " < 6n-4 = " + std::to_string(6 * n - 4);
  }
  return why;
}

RealizationResult recurse(const DegreeSequence& seq, const RealizeOptions& opts) {
  std::string why = rejection_reason(seq);
  if (!why.empty())
    throw internal_error("reduction reached " + seq.to_string() + " which fails: " + why);
  return dispatch(seq, opts);
}

Vertex remap(const std::map<Vertex, Vertex>& m, Vertex v) {
  auto it = m.find(v);
  if (it == m.end()) throw internal_error("relabel: vertex " + std::to_string(v) + " unknown");
  return it->second;
}

Z3Certificate relabel(Z3Certificate c, const std::map<Vertex, Vertex>& m) {
  for (Vertex& v : c.vertices) v = remap(m, v);
  if (c.kind == Z3Kind::attach) c.vertex = remap(m, c.vertex);
  for (auto& ch : c.children) ch = relabel(std::move(ch), m);
  return c;
}

Certificate relabel(Certificate c, const std::map<Vertex, Vertex>& m) {
  if (c.kind == S3Kind::lift_expansion) {
    c.u = remap(m, c.u);
    c.v = remap(m, c.v);
    c.w = remap(m, c.w);
  } else if (c.kind == S3Kind::layoff_expansion) {
    c.u = remap(m, c.u);
  }
  for (Vertex& v : c.vertices) v = remap(m, v);
  for (Vertex& v : c.cycle.order) v = remap(m, v);
  for (LiftStep& s : c.script.steps) s = {remap(m, s.u), remap(m, s.v), remap(m, s.w)};
  for (auto& ch : c.children) ch = relabel(std::move(ch), m);
  for (auto& z : c.z3) z = relabel(std::move(z), m);
  return c;
}

}  // namespace

RealizationResult normalize_ids(RealizationResult r) {
  std::map<Vertex, Vertex> m;
  Vertex next = 1;
  for (Vertex v : r.graph.vertices()) m[v] = next++;
  MultiGraph g;
  for (Vertex v : r.graph.vertices()) g.add_vertex(m[v]);
  for (auto [e, mult] : r.graph.edges()) g.add_edge(m[e.u], m[e.v], mult);
  r.graph = std::move(g);
  r.certificate = relabel(std::move(r.certificate), m);
  return r;
}

RealizationResult build_z3_plus_ham(const DegreeSequence& seq, const RealizeOptions& opts) {
  const DegreeSequence solid_seq = minus2_sequence(seq);
  if (!is_z3_realizable(solid_seq))
    throw precondition_error("Z3+Ham: " + solid_seq.to_string() + " is not Z3-realizable");
  Z3Build solid = build_z3_realization(solid_seq, opts);
  bool exhausted = false;
  auto cycle = hamiltonian_cycle(complement(solid.graph), 5'000'000, &exhausted);
  if (!cycle)
    throw internal_error(std::string("Z3+Ham: complement of the solid part has no Hamiltonian cycle") +
                         (exhausted ? "" : " within the search cap"));
  MultiGraph g = solid.graph;
  const auto& order = cycle->order;
  for (std::size_t i = 0; i < order.size(); ++i) g.add_edge(order[i], order[(i + 1) % order.size()]);
  return {std::move(g), Certificate::make_z3_plus_ham(*cycle, std::move(solid.certificate)),
          {"z3+ham:" + solid_seq.to_string()}};
}

RealizationResult realize_two_large(const DegreeSequence& seq, const RealizeOptions& opts) {
  const long long n = static_cast<long long>(seq.size());
  const long long sum = seq.sum();
  if (n < 7 || seq.d(1) != n - 1 || seq.d(2) != n - 1 || seq.min() < 4 || sum < 6 * n - 4 ||
      !is_graphic(seq))
    throw precondition_error("two-large realization needs a graphic sequence with n >= 7, "
                             "d_1 = d_2 = n-1, d_n >= 4, sum >= 6n-4; got " + seq.to_string());
  const int dn = seq.min();
  if (n == 7) {
    if (is_seq(seq, "6^7")) return {complete_graph(7), Certificate::make_kernel("Kn"), {"two-large:K7"}};
    if (is_seq(seq, "6^3,5^4")) return from_atlas("(6^3,5^4)", "two-large:atlas");
    MultiGraph g = complete_graph(7);
    std::string label;
    if (is_seq(seq, "6^5,5^2")) {
      g.remove_edge(6, 7);
      label = "two-large:K7-e";
    } else if (is_seq(seq, "6^4,5^2,4")) {
      g.remove_edge(5, 7);
      g.remove_edge(6, 7);
      label = "two-large:K7-2e";
    } else {
      uncovered(seq, "two-large n=7");
    }
    return {std::move(g), Certificate::make_k6({1, 2, 3, 4, 5, 6}, Certificate::make_kernel("mK2")),
            {std::move(label)}};
  }
  if (n == 8) {
    if (sum == 44) {
      for (const char* name : {"(7^4,4^4)", "(7^3,6,5,4^3)", "(7^3,5^3,4^2)", "(7^2,6^3,4^3)"})
        if (is_seq(seq, name)) return from_atlas(name, "two-large:n=8:script");
      if (is_seq(seq, "7^2,5^6")) return from_atlas("(7^2,5^6)", "two-large:n=8:atlas");
      if (is_seq(seq, "7^2,6^2,5^2,4^2") || is_seq(seq, "7^2,6,5^4,4"))
        return via_inverse_lift(seq, opts, "two-large:n=8:inverse-lift");
      uncovered(seq, "two-large n=8");
    }
    if (is_seq(seq, "7^3,5^5") || is_seq(seq, "7^2,6^2,5^4"))
      return via_inverse_lift(seq, opts, "two-large:n=8:inverse-lift");
    return via_layoff(seq, opts, "two-large:n=8:layoff");
  }
  if (dn == 4) {
    if (sum == 6 * n - 4) {
      if (seq.d(3) <= n - 2) return via_inverse_lift(seq, opts, "two-large:tight:inverse-lift");
      for (const char* name : {"(8^3,5^2,4^4)", "(8^3,6,4^5)", "(9^3,5,4^6)", "(10^3,4^8)"})
        if (is_seq(seq, name)) return from_atlas(name, "two-large:tight:script");
      uncovered(seq, "two-large d_3 = n-1");
    }
    if (seq.d(4) == 4) {
      JoinFamily jf = build_join_family(static_cast<int>(n), seq.d(3));
      if (degree_sequence(jf.graph) != seq) uncovered(seq, "two-large join family");
      return {std::move(jf.graph), Certificate::make_script(std::move(jf.script)),
              {"two-large:join-family"}};
    }
    return via_layoff(seq, opts, "two-large:min=4:layoff");
  }
  if (sum >= 6 * n) return via_layoff(seq, opts, "two-large:min>=5:layoff");
  if (is_seq(seq, "8^2,6,5^6") || is_seq(seq, "9^2,5^8"))
    return via_inverse_lift(seq, opts, "two-large:min>=5:inverse-lift");
  uncovered(seq, "two-large d_n >= 5");
}

RealizationResult realize_min5_tight(const DegreeSequence& seq, const RealizeOptions& opts) {
  const long long n = static_cast<long long>(seq.size());
  if (n < 7 || seq.min() < 5 || seq.sum() != 6 * n - 4 || !is_graphic(seq))
    throw precondition_error("tight realization needs a graphic sequence with n >= 7, d_n >= 5, "
                             "sum = 6n-4; got " + seq.to_string());
  if (n == 7 || seq.d(2) == n - 1) {
    auto r = realize_two_large(seq, opts);
    r.trace.insert(r.trace.begin(), "tight:two-large");
    return r;
  }
  auto z3ham = [&](const char* label) {
    auto r = build_z3_plus_ham(seq, opts);
    r.trace.insert(r.trace.begin(), label);
    return r;
  };
  const int d1 = seq.d(1);
  if (d1 == 6) {
    if (n == 8) return from_atlas("(6^4,5^4)", "tight:d1=6:atlas");
    if (n == 9) return from_atlas("(6^5,5^4)", "tight:d1=6:atlas");
    return z3ham("tight:d1=6:z3+ham");
  }
  if (n == 8) {
    if (!is_seq(seq, "7,6^2,5^5")) uncovered(seq, "tight n=8");
    return from_atlas("(7,6^2,5^5)", "tight:n=8:atlas");
  }
  if (n <= 11) return z3ham("tight:n<=11:z3+ham");
  const int d2 = seq.d(2);
  if (seq.d(3) >= n - 5) {
    bool listed = false;
    for (const char* t : {"9,7^2,5^9", "8^2,7,5^9", "8,7^2,6,5^8", "7^4,5^8", "7^3,6^2,5^7", "8^3,5^10"})
      listed = listed || is_seq(seq, t);
    if (!listed) uncovered(seq, "tight d_3 >= n-5");
    return z3ham("tight:d3>=n-5:z3+ham");
  }
  const int s = d1 + d2 - 10;
  const Seq& v = seq.values();
  if (s >= n - 5) return z3ham("tight:s>=n-5:z3+ham");
  if (s >= 5) {
    for (long long i = n - 3; i <= n; ++i)
      if (seq.d(static_cast<std::size_t>(i)) != 5) uncovered(seq, "tight k=2 tail");
    Seq reduced{s};
    reduced.insert(reduced.end(), v.begin() + 2, v.end() - 4);
    return via_k6(make_seq(reduced), s, {d1 - 5, d2 - 5}, opts, "tight:k6:k=2");
  }
  int k = 0;
  long long excess = 0;
  for (int i = 3; i <= 5 && k == 0; ++i) {
    long long tot = 0;
    for (int j = 1; j <= i; ++j) tot += seq.d(static_cast<std::size_t>(j));
    if (tot - 5LL * i >= 5) {
      k = i;
      excess = tot - 5LL * i;
    }
  }
  if (k == 0) uncovered(seq, "tight k >= 3");
  for (long long i = n - 5 + k; i <= n; ++i)
    if (seq.d(static_cast<std::size_t>(i)) != 5) uncovered(seq, "tight k >= 3 tail");
  Seq reduced{static_cast<int>(excess)};
  reduced.insert(reduced.end(), v.begin() + k, v.begin() + (n - 6 + k));
  std::vector<int> quotas;
  for (int i = 1; i <= k; ++i) quotas.push_back(seq.d(static_cast<std::size_t>(i)) - 5);
  return via_k6(make_seq(reduced), static_cast<int>(excess), quotas, opts,
                "tight:k6:k=" + std::to_string(k));
}

RealizeOutcome realize(const DegreeSequence& seq, const RealizeOptions& opts) {
  std::string why = rejection_reason(seq);
  if (!why.empty()) return {std::nullopt, why};
  return {normalize_ids(dispatch(seq, opts)), {}};
}

}  // namespace s3real
