#include "s3real/atlas.hpp"

#include <algorithm>
#include <map>

namespace s3real {

std::string to_string(Claim c) {
  return c == Claim::s3_connected ? "S3-connected" : "Z3-connected";
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

struct RawEntry {
  const char* name;
  Claim claim;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::optional<Decomposition> decomposition;
  std::optional<LiftScript> script;
  std::uint64_t checksum;
};

// Scripts, cycles and solid parts refer to these vertex ids.
const std::vector<RawEntry>& raw_entries() {
  static const std::vector<RawEntry> raw = {
    {"K(1,3,3)", Claim::s3_connected,
     {{1, 3}, {1, 4}, {1, 4}, {1, 4}, {3, 4}, {3, 4}, {3, 4}},
     std::nullopt,
     std::nullopt,
     0x184a2a117c81f0bbULL},
    {"K4*", Claim::s3_connected,
     {{1, 2}, {1, 2}, {1, 3}, {1, 4}, {1, 4}, {2, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 4}},
     std::nullopt,
     std::nullopt,
     0x01a2ffeda2c26771ULL},
    {"W4", Claim::z3_connected,
     {{5, 6}, {5, 8}, {5, 9}, {6, 7}, {6, 9}, {7, 8}, {7, 9}, {8, 9}},
     std::nullopt,
     std::nullopt,
     0x18fdb947e7ead951ULL},
    {"(4^5,3^4)", Claim::z3_connected,
     {{1, 2}, {1, 4}, {1, 8}, {2, 3}, {2, 7}, {3, 4}, {3, 6}, {4, 5}, {5, 6}, {5, 8}, {5, 9}, {6, 7}, {6, 9}, {7, 8}, {7, 9}, {8, 9}},
     std::nullopt,
     std::nullopt,
     0x903ec3418b6abcb1ULL},
    {"(4^3,3^4)", Claim::z3_connected,
     {{1, 2}, {1, 4}, {1, 7}, {2, 3}, {2, 7}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 7}, {6, 7}},
     std::nullopt,
     std::nullopt,
     0xbf744aa6ef8143c9ULL},
    {"(4^4,3^4)", Claim::z3_connected,
     {{1, 2}, {1, 4}, {1, 5}, {1, 8}, {2, 3}, {2, 4}, {2, 8}, {3, 4}, {3, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}, {7, 8}},
     std::nullopt,
     std::nullopt,
     0xa5ecf4859073b99dULL},
    {"(5,4^2,3^5)", Claim::z3_connected,
     {{1, 2}, {1, 4}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 5}, {4, 5}, {5, 8}, {6, 7}, {7, 8}},
     std::nullopt,
     std::nullopt,
     0xa186ce5fb31c1003ULL},
    {"(5^2,3^6)", Claim::z3_connected,
     {{1, 2}, {1, 4}, {1, 7}, {2, 3}, {2, 7}, {3, 4}, {3, 7}, {4, 5}, {4, 6}, {4, 8}, {5, 6}, {5, 8}, {6, 7}, {7, 8}},
     std::nullopt,
     std::nullopt,
     0x8baa9cc150a1079dULL},
    {"(6^5,5^4)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 8}, {2, 3}, {2, 6}, {2, 7}, {2, 9}, {3, 4}, {3, 6}, {3, 8}, {4, 5}, {4, 7}, {4, 9}, {5, 6}, {5, 7}, {5, 8}, {5, 9}, {6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}},
     Decomposition{"(4^5,3^4)", {{1, 3, 8, 6, 2, 9, 4, 7, 5}}},
     std::nullopt,
     0x9081187e075872f7ULL},
    {"(6^3,5^4)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}},
     Decomposition{"(4^3,3^4)", {{1, 3, 7, 4, 2, 5, 6}}},
     std::nullopt,
     0x8d2cdf821e6778e3ULL},
    {"(6^4,5^4)", Claim::s3_connected,
     {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {4, 8}, {5, 6}, {6, 7}, {7, 8}},
     Decomposition{"(4^4,3^4)", {{1, 6, 4, 8, 3, 5, 2, 7}}},
     std::nullopt,
     0xa2b9319c36beab35ULL},
    {"(7,6^2,5^5)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 8}, {4, 5}, {4, 6}, {4, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}},
     Decomposition{"(5,4^2,3^5)", {{1, 3, 8, 6, 4, 7, 2, 5}}},
     std::nullopt,
     0x27c8d5d258f9e3dfULL},
    {"(7^2,5^6)", Claim::s3_connected,
     {{1, 2}, {1, 4}, {1, 5}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 6}, {2, 7}, {3, 4}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {4, 7}, {4, 8}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {7, 8}},
     Decomposition{"(5^2,3^6)", {{1, 5, 7, 4, 2, 6, 3, 8}}},
     std::nullopt,
     0x45f127672fec3cf5ULL},
    {"(7^4,4^4)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {4, 7}, {4, 8}},
     std::nullopt,
     LiftScript{{{5, 3, 4}, {6, 2, 3}, {7, 1, 2}, {8, 1, 4}}, "K4*"},
     0xbfc0b65fb7fc42d1ULL},
    {"(7^3,6,5,4^3)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {4, 8}, {7, 8}},
     std::nullopt,
     LiftScript{{{5, 1, 4}, {6, 3, 4}, {7, 2, 3}, {8, 1, 2}}, "K4*"},
     0x176cb298eed91de1ULL},
    {"(7^3,5^3,4^2)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {5, 8}, {6, 7}},
     std::nullopt,
     LiftScript{{{7, 1, 2}, {8, 2, 3}, {5, 3, 4}, {6, 1, 4}}, "K4*"},
     0xda092f9127b1010eULL},
    {"(7^2,6^3,4^3)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 8}, {6, 7}, {6, 8}},
     std::nullopt,
     LiftScript{{{5, 1, 4}, {7, 2, 3}, {8, 1, 2}, {6, 3, 4}}, "K4*"},
     0x0012eda3a01e6a5eULL},
    {"(8^3,5^2,4^4)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {4, 5}, {4, 8}, {6, 7}, {6, 9}},
     std::nullopt,
     LiftScript{{{9, 3, 6}, {5, 3, 4}, {8, 1, 4}, {7, 1, 2}, {6, 2, 3}}, "K4*"},
     0x49dd9a88044e9589ULL},
    {"(8^3,6,4^5)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {4, 5}, {4, 8}, {4, 9}, {6, 7}},
     std::nullopt,
     LiftScript{{{6, 3, 7}, {9, 3, 4}, {5, 1, 4}, {8, 1, 2}, {7, 2, 3}}, "K4*"},
     0x6ae4016214b7c5d3ULL},
    {"(9^3,5,4^6)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {1, 10}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {3, 10}, {4, 6}, {4, 9}, {5, 8}, {7, 10}},
     std::nullopt,
     LiftScript{{{10, 2, 7}, {8, 1, 5}, {9, 3, 4}, {6, 1, 4}, {5, 1, 2}, {7, 2, 3}}, "K4*"},
     0x9086f54b75699903ULL},
    {"(10^3,4^8)", Claim::s3_connected,
     {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {1, 10}, {1, 11}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10}, {2, 11}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {3, 10}, {3, 11}, {4, 5}, {6, 7}, {8, 9}, {10, 11}},
     std::nullopt,
     LiftScript{{{4, 1, 5}, {5, 2, 3}, {6, 1, 7}, {7, 2, 3}, {8, 2, 9}, {9, 1, 2}, {10, 2, 11}, {11, 1, 2}}, "K(1,3,3)"},
     0x68a1254f15a20557ULL},
  };
  return raw;
}

struct Atlas {
  std::vector<AtlasEntry> entries;
  std::map<std::string, std::size_t> by_name;
};

const Atlas& atlas() {
  static const Atlas a = [] {
    Atlas out;
    for (const RawEntry& r : raw_entries()) {
      AtlasEntry e;
      e.name = r.name;
      e.graph = MultiGraph::from_edge_list(r.edges);
      e.claim = r.claim;
      e.decomposition = r.decomposition;
      e.script = r.script;
      e.checksum = fnv1a64(to_edge_list(e.graph));
      if (e.checksum != r.checksum) throw internal_error("atlas entry " + e.name + " fails its checksum");
      out.by_name[e.name] = out.entries.size();
      out.entries.push_back(std::move(e));
    }
    return out;
  }();
  return a;
}

}  // namespace

const AtlasEntry* find_entry(const std::string& name) {
  const Atlas& a = atlas();
  auto it = a.by_name.find(name);
  return it == a.by_name.end() ? nullptr : &a.entries[it->second];
}

const AtlasEntry& get_entry(const std::string& name) {
  if (const AtlasEntry* e = find_entry(name)) return *e;
  throw precondition_error("unknown atlas entry '" + name + "'");
}

std::vector<std::string> list_entries() {
  std::vector<std::string> out;
  for (const AtlasEntry& e : atlas().entries) out.push_back(e.name);
  return out;
}

const AtlasEntry* z3_entry_for(const DegreeSequence& seq) {
  for (const AtlasEntry& e : atlas().entries)
    if (e.claim == Claim::z3_connected && degree_sequence(e.graph) == seq) return &e;
  return nullptr;
}

MultiGraph replay_script(const MultiGraph& g, const LiftScript& script) {
  MultiGraph cur = g;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const LiftStep& s = script.steps[i];
    try {
      cur = lift(cur, s.u, s.v, s.w);
    } catch (const precondition_error& err) {
      throw precondition_error("script step " + std::to_string(i + 1) + " (" + std::to_string(s.u) +
                               ", " + std::to_string(s.v) + ", " + std::to_string(s.w) +
                               "): " + err.what());
    }
  }
  return cur;
}

MultiGraph solid_part(const MultiGraph& g, const HamCycleWitness& cycle) {
  if (!is_hamiltonian_cycle(g, cycle)) throw precondition_error("not a Hamiltonian cycle of the graph");
  std::vector<Edge> cut;
  const auto& c = cycle.order;
  for (std::size_t i = 0; i < c.size(); ++i) cut.emplace_back(c[i], c[(i + 1) % c.size()]);
  return remove_edges(g, cut);
}

JoinFamily build_join_family(int n, int d3) {
  if (d3 % 2 != 0 || d3 < 10 || d3 > n - 1)
    throw precondition_error("join family needs even d3 with 10 <= d3 <= n-1");
  if (n - 3 < d3 - 2) throw precondition_error("join family needs n-3 >= d3-2");
  std::vector<int> seq{n - 1, n - 1, d3};
  seq.insert(seq.end(), static_cast<std::size_t>(n - 3), 4);
  if (!is_graphic(DegreeSequence(seq))) throw precondition_error("join family sequence is not graphic");

  const int d = (d3 - 2) / 2;
  const int p = (d3 - 2) / 4;
  JoinFamily jf;
  jf.cycle_lengths.assign(static_cast<std::size_t>(d), 2);
  jf.cycle_lengths.back() = n - 3 - 2 * (d - 1);

  MultiGraph k2;
  k2.add_edge(jf.u1, jf.u2);
  MultiGraph star;  // C*: cycles through the hub
  star.add_vertex(jf.u);
  Vertex next = 4;
  std::vector<std::vector<Vertex>> cycles;
  for (int len : jf.cycle_lengths) {
    std::vector<Vertex> cyc;
    for (int j = 0; j < len; ++j) cyc.push_back(next++);
    star.add_edge(jf.u, cyc.front());
    for (std::size_t j = 0; j + 1 < cyc.size(); ++j) star.add_edge(cyc[j], cyc[j + 1]);
    star.add_edge(cyc.back(), jf.u);
    cycles.push_back(std::move(cyc));
  }
  jf.graph = join(k2, star);

  jf.script.kernel = "K(1,3,3)";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& cyc = cycles[i];
    for (std::size_t j = 0; j + 1 < cyc.size(); ++j) jf.script.steps.push_back({cyc[j], jf.u, cyc[j + 1]});
    jf.script.steps.push_back({cyc.back(), jf.u, static_cast<int>(i) < p ? jf.u1 : jf.u2});
  }
  return jf;
}

}  // namespace s3real
