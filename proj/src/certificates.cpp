#include "s3real/certificates.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace s3real {

using nlohmann::json;

// ---- builders ----

Z3Certificate Z3Certificate::make_kernel(std::string name) {
  Z3Certificate c;
  c.kind = Z3Kind::kernel;
  c.kernel = std::move(name);
  return c;
}

Z3Certificate Z3Certificate::make_w4(std::vector<Vertex> five, Z3Certificate quotient) {
  Z3Certificate c;
  c.kind = Z3Kind::w4_contract;
  c.vertices = std::move(five);
  c.children.push_back(std::move(quotient));
  return c;
}

Z3Certificate Z3Certificate::make_attach(Vertex v, Z3Certificate rest) {
  Z3Certificate c;
  c.kind = Z3Kind::attach;
  c.vertex = v;
  c.children.push_back(std::move(rest));
  return c;
}

Z3Certificate Z3Certificate::make_oracle() {
  Z3Certificate c;
  c.kind = Z3Kind::oracle;
  return c;
}

Certificate Certificate::make_kernel(std::string name) {
  Certificate c;
  c.kind = S3Kind::kernel;
  c.kernel = std::move(name);
  return c;
}

Certificate Certificate::make_lift(Vertex u, Vertex v, Vertex w, Certificate child) {
  Certificate c;
  c.kind = S3Kind::lift_expansion;
  c.u = u;
  c.v = v;
  c.w = w;
  c.children.push_back(std::move(child));
  return c;
}

Certificate Certificate::make_layoff(Vertex u, Certificate child) {
  Certificate c;
  c.kind = S3Kind::layoff_expansion;
  c.u = u;
  c.children.push_back(std::move(child));
  return c;
}

Certificate Certificate::make_contract(std::vector<Vertex> inner_vertices, Certificate inner,
                                       Certificate quotient) {
  Certificate c;
  c.kind = S3Kind::contract;
  c.vertices = std::move(inner_vertices);
  c.children.push_back(std::move(inner));
  c.children.push_back(std::move(quotient));
  return c;
}

Certificate Certificate::make_k6(std::vector<Vertex> six, Certificate quotient) {
  Certificate c;
  c.kind = S3Kind::k6_expansion;
  c.vertices = std::move(six);
  c.children.push_back(std::move(quotient));
  return c;
}

Certificate Certificate::make_z3_plus_ham(HamCycleWitness cycle, Z3Certificate solid) {
  Certificate c;
  c.kind = S3Kind::z3_plus_ham;
  c.cycle = std::move(cycle);
  c.z3.push_back(std::move(solid));
  return c;
}

Certificate Certificate::make_script(LiftScript script) {
  Certificate c;
  c.kind = S3Kind::script_reduction;
  c.script = std::move(script);
  return c;
}

// ---- kernel matching ----

bool spans_kernel(const MultiGraph& g, const MultiGraph& kernel) {
  if (g.vertex_count() != kernel.vertex_count()) return false;
  auto kv = kernel.vertices();
  auto gv = g.vertices();
  // Most constrained kernel vertices first.
  std::sort(kv.begin(), kv.end(),
            [&](Vertex a, Vertex b) { return kernel.degree(a) > kernel.degree(b); });
  std::map<Vertex, Vertex> phi;
  std::set<Vertex> used;

  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == kv.size()) return true;
    Vertex a = kv[i];
    for (Vertex x : gv) {
      if (used.count(x) || g.degree(x) < kernel.degree(a)) continue;
      bool ok = true;
      for (const auto& [b, m] : kernel.incident(a)) {
        auto it = phi.find(b);
        if (it != phi.end() && g.multiplicity(x, it->second) < m) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      phi[a] = x;
      used.insert(x);
      if (place(i + 1)) return true;
      phi.erase(a);
      used.erase(x);
    }
    return false;
  };
  return place(0);
}

bool matches_s3_kernel(const MultiGraph& g, const std::string& name) {
  if (name == "mK2") {
    auto vs = g.vertices();
    return vs.size() == 2 && g.multiplicity(vs[0], vs[1]) >= 4;
  }
  if (name == "Kn") {
    const auto n = static_cast<long long>(g.vertex_count());
    if (n < 7) return false;
    auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (g.multiplicity(vs[i], vs[j]) == 0) return false;
    return true;
  }
  if (name == "K(1,3,3)" || name == "K4*") return spans_kernel(g, get_entry(name).graph);
  return false;
}

// ---- verification ----

namespace {

Verdict fail(const std::string& locus, const std::string& reason) { return {false, locus, reason}; }

bool spans_w4(const MultiGraph& g, const std::vector<Vertex>& five) {
  if (five.size() != 5) return false;
  std::set<Vertex> distinct(five.begin(), five.end());
  if (distinct.size() != 5) return false;
  for (Vertex v : five)
    if (!g.has_vertex(v)) return false;
  return spans_kernel(induced_subgraph(g, five), wheel_graph(4));
}

// The K6 on `six` must have two of its vertices joined by a path in g - E(K6).
bool k6_is_proper(const MultiGraph& g, const std::vector<Vertex>& six) {
  std::vector<Edge> k6;
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j) k6.emplace_back(six[i], six[j]);
  MultiGraph rest = remove_edges(g, k6);
  std::set<Vertex> members(six.begin(), six.end());
  for (Vertex s : six) {
    std::set<Vertex> seen{s};
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : rest.neighbors(x)) {
        if (members.count(y) && y != s) return true;
        if (!members.count(y) && seen.insert(y).second) q.push(y);
      }
    }
  }
  return false;
}

Verdict verify_z3_at(const MultiGraph& g, const Z3Certificate& c, const VerifyOptions& opts,
                     const std::string& at) {
  try {
    switch (c.kind) {
      case Z3Kind::kernel: {
        const AtlasEntry* e = find_entry(c.kernel);
        if (!e || e->claim != Claim::z3_connected) return fail(at, "unknown Z3 kernel '" + c.kernel + "'");
        if (!spans_kernel(g, e->graph)) return fail(at, "graph does not span Z3 kernel " + c.kernel);
        return {};
      }
      case Z3Kind::w4_contract: {
        if (c.children.size() != 1) return fail(at, "W4 contraction needs one quotient certificate");
        if (!spans_w4(g, c.vertices)) return fail(at, "named vertices do not span a W4");
        return verify_z3_at(contract_vertices(g, c.vertices).graph, c.children[0], opts, at + "/quotient");
      }
      case Z3Kind::attach: {
        if (c.children.size() != 1) return fail(at, "attach needs one child certificate");
        if (!g.has_vertex(c.vertex)) return fail(at, "attached vertex not in graph");
        if (g.vertex_count() < 2) return fail(at, "attach needs at least two vertices");
        if (g.degree(c.vertex) < 2)
          return fail(at, "attached vertex has " + std::to_string(g.degree(c.vertex)) + " < 2 edges");
        return verify_z3_at(delete_vertex(g, c.vertex), c.children[0], opts, at + "/child");
      }
      case Z3Kind::oracle: {
        if (g.edge_count() > opts.oracle.edge_cap) return fail(at, "oracle leaf exceeds the edge cap");
        if (!is_z3_connected(g, opts.oracle)) return fail(at, "oracle: graph is not Z3-connected");
        return {};
      }
    }
    return fail(at, "unknown Z3 step kind");
  } catch (const std::exception& ex) {
    return fail(at, ex.what());
  }
}

Verdict verify_at(const MultiGraph& g, const Certificate& c, const VerifyOptions& opts,
                  const std::string& at) {
  try {
    auto one_child = [&]() -> const Certificate* {
      return c.children.size() == 1 ? &c.children[0] : nullptr;
    };
    switch (c.kind) {
      case S3Kind::kernel:
        if (!matches_s3_kernel(g, c.kernel)) return fail(at, "graph does not match kernel '" + c.kernel + "'");
        return {};
      case S3Kind::lift_expansion: {
        const Certificate* child = one_child();
        if (!child) return fail(at, "lift expansion needs one child certificate");
        if (!g.has_vertex(c.u) || g.degree(c.u) < 4) return fail(at, "lifted vertex needs degree >= 4");
        return verify_at(lift(g, c.u, c.v, c.w), *child, opts, at + "/child");
      }
      case S3Kind::layoff_expansion: {
        const Certificate* child = one_child();
        if (!child) return fail(at, "layoff expansion needs one child certificate");
        if (!g.has_vertex(c.u) || g.degree(c.u) < 4) return fail(at, "removed vertex needs degree >= 4");
        return verify_at(delete_vertex(g, c.u), *child, opts, at + "/child");
      }
      case S3Kind::contract: {
        if (c.children.size() != 2) return fail(at, "contraction needs inner and quotient certificates");
        if (c.vertices.empty()) return fail(at, "contraction needs a vertex set");
        MultiGraph inner = induced_subgraph(g, c.vertices);
        if (!is_connected(inner)) return fail(at, "contracted subgraph is disconnected");
        if (Verdict v = verify_at(inner, c.children[0], opts, at + "/inner"); !v) return v;
        return verify_at(contract_vertices(g, c.vertices).graph, c.children[1], opts, at + "/quotient");
      }
      case S3Kind::k6_expansion: {
        const Certificate* child = one_child();
        if (!child) return fail(at, "K6 expansion needs one quotient certificate");
        std::set<Vertex> distinct(c.vertices.begin(), c.vertices.end());
        if (c.vertices.size() != 6 || distinct.size() != 6) return fail(at, "K6 step needs six distinct vertices");
        for (Vertex v : c.vertices)
          if (!g.has_vertex(v)) return fail(at, "K6 vertex " + std::to_string(v) + " not in graph");
        for (std::size_t i = 0; i < 6; ++i)
          for (std::size_t j = i + 1; j < 6; ++j)
            if (g.multiplicity(c.vertices[i], c.vertices[j]) == 0) return fail(at, "named vertices do not span a K6");
        if (!k6_is_proper(g, c.vertices)) return fail(at, "K6 is not a proper subgraph");
        return verify_at(contract_vertices(g, c.vertices).graph, *child, opts, at + "/quotient");
      }
      case S3Kind::z3_plus_ham: {
        if (c.z3.size() != 1) return fail(at, "Z3 plus Hamiltonian cycle needs one Z3 certificate");
        if (!is_hamiltonian_cycle(g, c.cycle)) return fail(at, "cycle witness is not a Hamiltonian cycle");
        return verify_z3_at(solid_part(g, c.cycle), c.z3[0], opts, at + "/z3");
      }
      case S3Kind::script_reduction: {
        MultiGraph end = replay_script(g, c.script);
        if (!matches_s3_kernel(end, c.script.kernel))
          return fail(at, "script terminal does not match kernel '" + c.script.kernel + "'");
        return {};
      }
    }
    return fail(at, "unknown step kind");
  } catch (const std::exception& ex) {
    return fail(at, ex.what());
  }
}

}  // namespace

Verdict verify(const MultiGraph& g, const Certificate& cert, const VerifyOptions& opts) {
  return verify_at(g, cert, opts, "$");
}

Verdict verify_z3(const MultiGraph& g, const Z3Certificate& cert, const VerifyOptions& opts) {
  return verify_z3_at(g, cert, opts, "$");
}

std::size_t certificate_size(const Certificate& cert) {
  std::size_t n = 1;
  for (const auto& ch : cert.children) n += certificate_size(ch);
  std::function<std::size_t(const Z3Certificate&)> z3size = [&](const Z3Certificate& z) {
    std::size_t k = 1;
    for (const auto& ch : z.children) k += z3size(ch);
    return k;
  };
  for (const auto& z : cert.z3) n += z3size(z);
  return n;
}

// ---- serialization ----

std::string to_string(S3Kind k) {
  switch (k) {
    case S3Kind::kernel: return "KERNEL";
    case S3Kind::lift_expansion: return "LIFT_EXPANSION";
    case S3Kind::layoff_expansion: return "LAYOFF_EXPANSION";
    case S3Kind::contract: return "CONTRACT";
    case S3Kind::k6_expansion: return "K6_EXPANSION";
    case S3Kind::z3_plus_ham: return "Z3_PLUS_HAM";
    case S3Kind::script_reduction: return "SCRIPT_REDUCTION";
  }
  return "?";
}

std::string to_string(Z3Kind k) {
  switch (k) {
    case Z3Kind::kernel: return "Z3_KERNEL";
    case Z3Kind::w4_contract: return "W4_CONTRACT";
    case Z3Kind::attach: return "ATTACH";
    case Z3Kind::oracle: return "Z3_ORACLE";
  }
  return "?";
}

json to_json(const Z3Certificate& c) {
  json j{{"kind", to_string(c.kind)}};
  switch (c.kind) {
    case Z3Kind::kernel: j["name"] = c.kernel; break;
    case Z3Kind::w4_contract:
      j["vertices"] = c.vertices;
      if (!c.children.empty()) j["quotient"] = to_json(c.children[0]);
      break;
    case Z3Kind::attach:
      j["vertex"] = c.vertex;
      if (!c.children.empty()) j["child"] = to_json(c.children[0]);
      break;
    case Z3Kind::oracle: break;
  }
  return j;
}

json to_json(const Certificate& c) {
  json j{{"kind", to_string(c.kind)}};
  switch (c.kind) {
    case S3Kind::kernel: j["name"] = c.kernel; break;
    case S3Kind::lift_expansion:
      j["u"] = c.u;
      j["v"] = c.v;
      j["w"] = c.w;
      if (!c.children.empty()) j["child"] = to_json(c.children[0]);
      break;
    case S3Kind::layoff_expansion:
      j["u"] = c.u;
      if (!c.children.empty()) j["child"] = to_json(c.children[0]);
      break;
    case S3Kind::contract:
      j["vertices"] = c.vertices;
      if (c.children.size() == 2) {
        j["inner"] = to_json(c.children[0]);
        j["quotient"] = to_json(c.children[1]);
      }
      break;
    case S3Kind::k6_expansion:
      j["vertices"] = c.vertices;
      if (!c.children.empty()) j["quotient"] = to_json(c.children[0]);
      break;
    case S3Kind::z3_plus_ham:
      j["cycle"] = c.cycle.order;
      if (!c.z3.empty()) j["z3"] = to_json(c.z3[0]);
      break;
    case S3Kind::script_reduction: {
      json steps = json::array();
      for (const LiftStep& s : c.script.steps) steps.push_back({s.u, s.v, s.w});
      j["script"] = steps;
      j["kernel"] = c.script.kernel;
      break;
    }
  }
  return j;
}

json certificate_document(const Certificate& cert) {
  return json{{"format", "s3real-certificate"},
              {"schema_version", kCertificateSchema},
              {"certificate", to_json(cert)}};
}

namespace {

template <typename T>
T field(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key))
    throw precondition_error(std::string("certificate node lacks '") + key + "'");
  try {
    return node.at(key).get<T>();
  } catch (const json::exception& ex) {
    throw precondition_error(std::string("certificate field '") + key + "': " + ex.what());
  }
}

const json& child(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key))
    throw precondition_error(std::string("certificate node lacks '") + key + "'");
  return node.at(key);
}

Certificate from_node(const json& node) {
  const auto kind = field<std::string>(node, "kind");
  if (kind == "KERNEL") return Certificate::make_kernel(field<std::string>(node, "name"));
  if (kind == "LIFT_EXPANSION")
    return Certificate::make_lift(field<Vertex>(node, "u"), field<Vertex>(node, "v"),
                                  field<Vertex>(node, "w"), from_node(child(node, "child")));
  if (kind == "LAYOFF_EXPANSION")
    return Certificate::make_layoff(field<Vertex>(node, "u"), from_node(child(node, "child")));
  if (kind == "CONTRACT")
    return Certificate::make_contract(field<std::vector<Vertex>>(node, "vertices"),
                                      from_node(child(node, "inner")),
                                      from_node(child(node, "quotient")));
  if (kind == "K6_EXPANSION")
    return Certificate::make_k6(field<std::vector<Vertex>>(node, "vertices"),
                                from_node(child(node, "quotient")));
  if (kind == "Z3_PLUS_HAM")
    return Certificate::make_z3_plus_ham(HamCycleWitness{field<std::vector<Vertex>>(node, "cycle")},
                                         z3_certificate_from_json(child(node, "z3")));
  if (kind == "SCRIPT_REDUCTION") {
    LiftScript s;
    s.kernel = field<std::string>(node, "kernel");
    for (const auto& t : field<std::vector<std::vector<Vertex>>>(node, "script")) {
      if (t.size() != 3) throw precondition_error("script steps are (u, v, w) triples");
      s.steps.push_back({t[0], t[1], t[2]});
    }
    return Certificate::make_script(std::move(s));
  }
  throw precondition_error("unknown certificate step kind '" + kind + "'");
}

}  // namespace

Z3Certificate z3_certificate_from_json(const json& node) {
  const auto kind = field<std::string>(node, "kind");
  if (kind == "Z3_KERNEL") return Z3Certificate::make_kernel(field<std::string>(node, "name"));
  if (kind == "W4_CONTRACT")
    return Z3Certificate::make_w4(field<std::vector<Vertex>>(node, "vertices"),
                                  z3_certificate_from_json(child(node, "quotient")));
  if (kind == "ATTACH")
    return Z3Certificate::make_attach(field<Vertex>(node, "vertex"),
                                      z3_certificate_from_json(child(node, "child")));
  if (kind == "Z3_ORACLE") return Z3Certificate::make_oracle();
  throw precondition_error("unknown Z3 certificate step kind '" + kind + "'");
}

Certificate certificate_from_json(const json& doc) {
  if (doc.is_object() && doc.contains("certificate")) {
    if (doc.contains("schema_version") && doc["schema_version"] != kCertificateSchema)
      throw precondition_error("unsupported certificate schema version");
    return from_node(doc["certificate"]);
  }
  return from_node(doc);
}

}  // namespace s3real
