#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "s3real/atlas.hpp"
#include "s3real/certificates.hpp"
#include "s3real/oracles.hpp"
#include "s3real/realize.hpp"
#include "s3real/sequences.hpp"
#include "s3real/version.hpp"

using namespace s3real;
using nlohmann::json;

namespace {

enum class Format { text, json, dot };

struct RunConfig {
  int cap = kDefaultEdgeCap;
  long long budget = RealizeOptions{}.budget;
  std::uint64_t seed = RealizeOptions{}.seed;
  unsigned threads = 0;
  Format format = Format::text;

  [[nodiscard]] RealizeOptions realize_options() const { return {budget, cap, seed}; }
  [[nodiscard]] OracleOptions oracle_options() const { return {cap, threads}; }
  [[nodiscard]] json to_json() const {
    return {{"cap", cap}, {"budget", budget}, {"seed", seed}};
  }
};

// Exit statuses.
constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

json envelope(const RunConfig& cfg, const std::string& command) {
  return {{"tool", "s3real"}, {"version", kVersion}, {"command", command}, {"config", cfg.to_json()}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw precondition_error("cannot write " + path);
  out << text;
}

// A file path, K<n>, C<n>, <m>K2, or an atlas name.
MultiGraph resolve_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_edge_list(read_file(arg));
  std::smatch m;
  if (std::regex_match(arg, m, std::regex(R"(K(\d+))"))) return complete_graph(std::stoi(m[1]));
  if (std::regex_match(arg, m, std::regex(R"(C(\d+))"))) return cycle_graph(std::stoi(m[1]));
  if (std::regex_match(arg, m, std::regex(R"((\d+)K2)"))) return parallel_edges(std::stoi(m[1]));
  if (const AtlasEntry* e = find_entry(arg)) return e->graph;
  throw precondition_error("'" + arg + "' is neither a file, a named graph nor an atlas key");
}

json graph_json(const MultiGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edge_instances()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const RunConfig& cfg, const std::string& text) {
  DegreeSequence seq = parse_sequence(text);
  const long long n = static_cast<long long>(seq.size());
  const bool graphic = is_graphic(seq);
  const bool sum_ok = seq.sum() >= 6 * n - 4;
  const bool min_ok = !seq.empty() && seq.min() >= 4;
  const bool realizable = graphic && sum_ok && min_ok;
  if (cfg.format == Format::json) {
    json j = envelope(cfg, "check");
    j["sequence"] = seq.to_string();
    j["graphic"] = graphic;
    j["sum"] = seq.sum();
    j["sum_bound"] = 6 * n - 4;
    j["min_degree"] = seq.empty() ? 0 : seq.min();
    j["s3_realizable"] = realizable;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "graphic: " << yes_no(graphic) << "; Σ=" << seq.sum()
              << (sum_ok ? " ≥ " : " < ") << 6 * n - 4 << ": " << yes_no(sum_ok)
              << "; d_n=" << (seq.empty() ? 0 : seq.min()) << (min_ok ? " ≥ " : " < ")
              << "4: " << yes_no(min_ok) << "; S3-realizable: " << yes_no(realizable) << "\n";
  }
  return realizable ? kOk : kFalse;
}

int cmd_realize(const RunConfig& cfg, const std::string& text, const std::string& graph_out,
                const std::string& cert_out) {
  DegreeSequence seq = parse_sequence(text);
  RealizeOutcome out = realize(seq, cfg.realize_options());
  if (!out.accepted()) {
    if (cfg.format == Format::json) {
      json j = envelope(cfg, "realize");
      j["sequence"] = seq.to_string();
      j["rejection"] = out.rejection;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "rejected " << seq.to_string() << ": " << out.rejection << "\n";
    }
    return kFalse;
  }
  const RealizationResult& r = *out.result;
  if (!graph_out.empty()) write_file(graph_out, to_edge_list(r.graph));
  if (!cert_out.empty()) write_file(cert_out, certificate_document(r.certificate).dump(2) + "\n");
  switch (cfg.format) {
    case Format::dot:
      std::cout << to_dot(r.graph, seq.to_string());
      break;
    case Format::json: {
      json j = envelope(cfg, "realize");
      j["sequence"] = seq.to_string();
      j["graph"] = graph_json(r.graph);
      j["certificate"] = certificate_document(r.certificate);
      j["trace"] = r.trace;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::text:
      std::cout << "# realization of " << seq.to_string() << "\n";
      for (const auto& l : r.trace) std::cout << "# trace: " << l << "\n";
      std::cout << "# certificate steps: " << certificate_size(r.certificate) << "\n";
      std::cout << to_edge_list(r.graph);
      break;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& graph_arg, const std::string& cert_path) {
  MultiGraph g = resolve_graph(graph_arg);
  json doc;
  try {
    doc = json::parse(read_file(cert_path));
  } catch (const json::exception& e) {
    throw precondition_error(std::string("certificate is not JSON: ") + e.what());
  }
  Certificate cert = certificate_from_json(doc);
  VerifyOptions vo;
  vo.oracle = cfg.oracle_options();
  Verdict v = verify(g, cert, vo);
  if (cfg.format == Format::json) {
    json j = envelope(cfg, "verify");
    j["ok"] = v.ok;
    if (!v.ok) j["locus"] = v.locus, j["reason"] = v.reason;
    std::cout << j.dump(2) << "\n";
  } else if (v.ok) {
    std::cout << "certificate verified\n";
  } else {
    std::cout << "certificate rejected at " << v.locus << ": " << v.reason << "\n";
  }
  return v.ok ? kOk : kFalse;
}

int cmd_oracle(const RunConfig& cfg, const std::string& mode, const std::string& graph_arg) {
  MultiGraph g = resolve_graph(graph_arg);
  const OracleOptions oo = cfg.oracle_options();
  if (g.edge_count() > cfg.cap)
    throw cap_exceeded("graph has " + std::to_string(g.edge_count()) + " edges, cap is " +
                       std::to_string(cfg.cap));
  json j = envelope(cfg, "oracle " + mode);
  bool verdict = false;
  if (mode == "flow") {
    auto o = find_beta_orientation(g, BoundaryFunction::zero(g), true, oo);
    verdict = o.has_value();
    if (cfg.format == Format::json) {
      j["found"] = verdict;
      if (o) j["arcs"] = directed_edges(g, *o);
    } else if (o) {
      std::cout << "strongly connected modulo-3 orientation:\n";
      for (auto [a, b] : directed_edges(g, *o)) std::cout << a << " -> " << b << "\n";
    } else {
      std::cout << "no strongly connected modulo-3 orientation\n";
    }
  } else {
    verdict = mode == "s3" ? is_s3_connected(g, oo) : is_z3_connected(g, oo);
    const std::string label = mode == "s3" ? "S3-connected" : "Z3-connected";
    if (cfg.format == Format::json)
      j[mode == "s3" ? "s3_connected" : "z3_connected"] = verdict;
    else
      std::cout << label << ": " << yes_no(verdict) << "\n";
  }
  if (cfg.format == Format::json) std::cout << j.dump(2) << "\n";
  return verdict ? kOk : kFalse;
}

int cmd_atlas_list(const RunConfig& cfg) {
  json arr = json::array();
  for (const auto& name : list_entries()) {
    const AtlasEntry& e = get_entry(name);
    if (cfg.format == Format::json) {
      arr.push_back({{"name", name}, {"claim", to_string(e.claim)},
                     {"degrees", degree_sequence(e.graph).to_string()}});
    } else {
      std::cout << name << "\t" << to_string(e.claim) << "\t" << e.graph.vertex_count() << " vertices, "
                << e.graph.edge_count() << " edges"
                << (e.script ? "\tscript" : "") << (e.decomposition ? "\tdecomposition" : "") << "\n";
    }
  }
  if (cfg.format == Format::json) {
    json j = envelope(cfg, "atlas list");
    j["entries"] = arr;
    std::cout << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_atlas_dump(const RunConfig& cfg, const std::string& name) {
  const AtlasEntry& e = get_entry(name);
  if (cfg.format == Format::dot) {
    std::cout << to_dot(e.graph, name);
    return kOk;
  }
  if (cfg.format == Format::json) {
    json j = envelope(cfg, "atlas dump");
    j["name"] = e.name;
    j["claim"] = to_string(e.claim);
    j["graph"] = graph_json(e.graph);
    j["checksum"] = e.checksum;
    if (e.script) {
      json steps = json::array();
      for (const auto& s : e.script->steps) steps.push_back({s.u, s.v, s.w});
      j["script"] = {{"steps", steps}, {"kernel", e.script->kernel}};
    }
    if (e.decomposition)
      j["decomposition"] = {{"solid", e.decomposition->solid_entry},
                            {"cycle", e.decomposition->cycle.order}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "# " << e.name << " (" << to_string(e.claim) << ")\n";
  std::cout << to_edge_list(e.graph);
  if (e.script) {
    std::cout << "# script (lift u v w), kernel " << e.script->kernel << "\n";
    for (const auto& s : e.script->steps) std::cout << "# lift " << s.u << " " << s.v << " " << s.w << "\n";
  }
  if (e.decomposition) {
    std::cout << "# solid part " << e.decomposition->solid_entry << ", Hamiltonian cycle";
    for (Vertex v : e.decomposition->cycle.order) std::cout << " " << v;
    std::cout << "\n";
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, int n) {
  if (n < 1) throw precondition_error("sweep needs n >= 1");
  SweepReport rep = sweep(n, cfg.realize_options(), cfg.threads);
  if (cfg.format == Format::json) {
    json j = envelope(cfg, "sweep");
    j["n"] = n;
    j["graphic"] = rep.graphic;
    j["qualifying"] = rep.qualifying;
    j["realized"] = rep.realized;
    j["rejected"] = rep.rejected;
    j["failures"] = rep.failures;
    j["labels"] = rep.labels;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n=" << n << ": " << rep.graphic << " graphic, " << rep.qualifying << " qualifying, "
              << rep.realized << " realized and verified, " << rep.rejected << " rejected, "
              << rep.failures.size() << " failures\n";
    for (const auto& [label, count] : rep.labels) std::cout << "  " << label << ": " << count << "\n";
    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
  }
  return rep.ok() ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S3-connected realizations of degree sequences"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--cap", cfg.cap, "oracle edge cap")->envname("S3REAL_CAP")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", cfg.budget, "Z3 builder search budget")
      ->envname("S3REAL_BUDGET")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "random seed for the swap fallback")->envname("S3REAL_SEED");
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));

  std::string seq_arg, graph_arg, cert_arg, mode, name, graph_out, cert_out;
  int sweep_n = 0;
  auto* check = app.add_subcommand("check", "graphicality and S3-realizability verdict");
  check->add_option("sequence", seq_arg)->required();
  auto* real = app.add_subcommand("realize", "S3-connected realization with certificate");
  real->add_option("sequence", seq_arg)->required();
  real->add_option("--graph-out", graph_out, "write the edge list here");
  real->add_option("--cert-out", cert_out, "write the certificate document here");
  auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
  ver->add_option("graph", graph_arg)->required();
  ver->add_option("certificate", cert_arg)->required();
  auto* orc = app.add_subcommand("oracle", "exhaustive orientation oracle");
  orc->add_option("mode", mode)->required()->check(CLI::IsMember({"s3", "z3", "flow"}));
  orc->add_option("graph", graph_arg)->required();
  auto* atl = app.add_subcommand("atlas", "built-in graphs");
  atl->require_subcommand(1);
  auto* atl_list = atl->add_subcommand("list", "list entries");
  auto* atl_dump = atl->add_subcommand("dump", "print one entry");
  atl_dump->add_option("name", name)->required();
  auto* swp = app.add_subcommand("sweep", "realize and verify every qualifying sequence of length n");
  swp->add_option("n", sweep_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  cfg.format = format == "json" ? Format::json : format == "dot" ? Format::dot : Format::text;

  try {
    if (*check) return cmd_check(cfg, seq_arg);
    if (*real) return cmd_realize(cfg, seq_arg, graph_out, cert_out);
    if (*ver) return cmd_verify(cfg, graph_arg, cert_arg);
    if (*orc) return cmd_oracle(cfg, mode, graph_arg);
    if (*atl_list) return cmd_atlas_list(cfg);
    if (*atl_dump) return cmd_atlas_dump(cfg, name);
    if (*swp) return cmd_sweep(cfg, sweep_n);
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const z3_build_failure& e) {
    std::cerr << "unconstructed: " << e.what() << "\n";
    return kFalse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
