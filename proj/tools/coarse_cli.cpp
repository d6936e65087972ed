#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coarse/corpus.hpp"
#include "coarse/decompose.hpp"
#include "coarse/json_io.hpp"
#include "coarse/metrics_ops.hpp"
#include "coarse/structures.hpp"
#include "coarse/verify.hpp"

namespace {

using namespace coarse;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitVerification = 3;

struct SourceOpts {
  std::string grid;  // "DxN"
  int scale = 1;
  std::string graph_file;
  int random_tree = 0;
  std::string random_graph;  // "N:E"
  std::uint64_t seed = 0;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src) {
  cmd->add_option("--grid", src.grid, "grid window DxN: dimension x half-width");
  cmd->add_option("--scale", src.scale, "cube scale for grid windows (power of two)");
  cmd->add_option("--graph", src.graph_file, "edge-list file: 'u v' per line, # comments");
  cmd->add_option("--random-tree", src.random_tree, "seeded random tree on N vertices");
  cmd->add_option("--random-graph", src.random_graph,
                  "seeded random connected graph N:EXTRA_EDGES");
  cmd->add_option("--seed", src.seed, "seed for random sources, recorded in outputs");
}

std::pair<int, int> parse_grid(const std::string& s) {
  auto x = s.find('x');
  if (x == std::string::npos) {
    throw std::invalid_argument("--grid expects DxN, e.g. 2x8");
  }
  return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
}

Graph build_graph_source(const SourceOpts& src) {
  int given = (!src.grid.empty()) + (!src.graph_file.empty()) + (src.random_tree > 0) +
              (!src.random_graph.empty());
  if (given != 1) {
    throw std::invalid_argument(
        "exactly one of --grid / --graph / --random-tree / --random-graph is required");
  }
  if (!src.grid.empty()) {
    auto [dim, halfwidth] = parse_grid(src.grid);
    return grid_graph(dim, halfwidth);
  }
  if (!src.graph_file.empty()) return read_graph_file(src.graph_file);
  Rng rng(src.seed);
  if (src.random_tree > 0) return random_tree(src.random_tree, rng);
  auto colon = src.random_graph.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("--random-graph expects N:EXTRA_EDGES, e.g. 50:10");
  }
  return random_connected_graph(std::stoi(src.random_graph.substr(0, colon)),
                                std::stoi(src.random_graph.substr(colon + 1)), rng);
}

struct DecomposeOpts {
  SourceOpts src;
  std::string method;
  std::string partition;  // file path or "singletons"
  int v0 = 0;
  int k = -1;
  int r = 1;
  int min_radius = 0;
  std::string out;
};

int run_decompose(const DecomposeOpts& opt) {
  DecompositionCertificate cert;
  Graph graph;
  std::optional<HypothesisReport> failed;

  if (opt.method == "example1") {
    if (opt.src.grid.empty()) throw std::invalid_argument("example1 needs --grid");
    auto [dim, halfwidth] = parse_grid(opt.src.grid);
    GridDecomposition gd = grid_decomposition(dim, halfwidth, opt.src.scale);
    graph = std::move(gd.graph);
    cert = std::move(gd.certificate);
  } else {
    graph = build_graph_source(opt.src);
    DecompositionOutcome outcome;
    if (opt.method == "prop9") {
      outcome = sphere_decomposition(graph, opt.v0, opt.k);
    } else if (opt.method == "prop10") {
      Partition p = opt.partition.empty() || opt.partition == "singletons"
                        ? Partition::singletons(graph.points())
                        : read_partition_file(opt.partition);
      outcome = linking_pair_decomposition(graph, p, opt.r);
    } else if (opt.method == "prop11") {
      outcome = net_decomposition(graph, opt.r);
    } else if (opt.method == "subdivide+prop10") {
      Subdivision sub = subdivide(graph);
      graph = std::move(sub.graph);
      outcome = linking_pair_decomposition(graph, sub.cells, 1);
      if (outcome.certificate) outcome.certificate->method = "subdivide+prop10";
    } else {
      throw std::invalid_argument("unknown method '" + opt.method + "'");
    }
    if (!outcome.certificate) {
      failed = std::move(outcome.report);
    } else {
      cert = std::move(*outcome.certificate);
    }
  }

  if (failed) {
    ojson j = hypothesis_to_json(*failed);
    j["seed"] = opt.src.seed;
    write_json_file(opt.out, j);
    std::cout << "hypothesis " << failed->proposition << " FAIL: " << failed->failing_object
              << "\nreport written to " << opt.out << "\n";
    return kExitHypothesis;
  }

  cert.seed = opt.src.seed;
  int radius = std::max(cert.budget_radius, opt.min_radius);
  CoarseChain chain = from_graph(graph, radius);
  VerificationReport rep = verify_certificate(chain, cert);
  if (!rep.pass) {
    std::cerr << "internal error: fresh certificate failed self-verification: "
              << rep.first_failure << "\n";
    return kExitVerification;
  }
  write_json_file(opt.out, certificate_to_json(cert));
  std::cout << "method " << cert.method << ": certificate on " << cert.window_size
            << " points, " << cert.p0.class_count() << "+" << cert.p1.class_count()
            << " classes, " << cert.edge_witnesses.size() << " edge witnesses, budget R="
            << cert.budget_radius << " m=" << cert.budget_maxlen
            << "\nself-verification PASS (pattern length " << rep.max_pattern_len
            << ", diameter index " << rep.max_diameter_index << ")\nwritten to " << opt.out
            << "\n";
  return kExitOk;
}

struct VerifyOpts {
  SourceOpts src;
  std::string certificate;
  int radius = -1;
  bool oracle = false;
  int maxlen = -1;
  int oracle_cap = 60;
  std::string out;
};

int run_verify(const VerifyOpts& opt) {
  DecompositionCertificate cert = certificate_from_json(read_json_file(opt.certificate));
  Graph graph = build_graph_source(opt.src);
  int radius = opt.radius > 0 ? opt.radius : std::max(1, cert.budget_radius);
  CoarseChain chain = from_graph(graph, radius);
  VerificationReport rep = verify_certificate(chain, cert);

  ojson j = verification_to_json(rep);
  j["seed"] = cert.seed;
  if (opt.oracle) {
    int maxlen = opt.maxlen > 0 ? opt.maxlen : std::max(1, cert.budget_maxlen);
    Partition p0 = Partition::from_classes(cert.window_size, cert.p0.classes);
    Partition p1 = Partition::from_classes(cert.window_size, cert.p1.classes);
    OracleResult oracle = oracle_join_covers(chain, p0, p1, maxlen, opt.oracle_cap);
    j["oracle"] = ojson{{"pass", oracle.pass},
                        {"maxlen", maxlen},
                        {"agrees", oracle.pass == rep.pass}};
    std::cout << "oracle " << (oracle.pass ? "PASS" : "FAIL") << " at maxlen " << maxlen
              << (oracle.pass == rep.pass ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  if (!opt.out.empty()) write_json_file(opt.out, j);

  if (rep.pass) {
    std::cout << "verification PASS: " << rep.checked_classes << " classes, "
              << rep.checked_edges << " generator pairs, " << rep.checked_witnesses
              << " witnesses\n";
    return kExitOk;
  }
  std::cout << "verification FAIL: " << rep.first_failure << "\n";
  return kExitVerification;
}

struct LatticeOpts {
  std::string a, b;
  int radius = 8;
  std::string join_member_pair;
  int maxlen = 5;
  bool complement = false;
  std::string out;
};

CoarseChain build_chain_spec(const std::string& spec, int radius) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("structure spec needs a type prefix, e.g. graph:FILE");
  }
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "graph") return from_graph(read_graph_file(rest), radius);
  if (kind == "grid") {
    auto [dim, halfwidth] = parse_grid(rest);
    return from_graph(grid_graph(dim, halfwidth), radius);
  }
  if (kind == "metric") return from_metric(read_metric_file(rest), radius);
  if (kind == "partition") {
    Partition p = read_partition_file(rest);
    return generated_by(equivalence_from_partition(p), radius);
  }
  if (kind == "ideal") {
    auto second = rest.find(':');
    if (second == std::string::npos) {
      throw std::invalid_argument("ideal spec is ideal:WINDOW_SIZE:id,id,...");
    }
    Window w;
    w.size = std::stoi(rest.substr(0, second));
    IdealSpec ideal;
    std::string ids = rest.substr(second + 1);
    std::size_t pos = 0;
    while (pos < ids.size()) {
      auto comma = ids.find(',', pos);
      if (comma == std::string::npos) comma = ids.size();
      if (comma > pos) ideal.a.push_back(std::stoi(ids.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return from_ideal(w, ideal, radius);
  }
  throw std::invalid_argument("unknown structure spec type '" + kind + "'");
}

ojson modulus_json(const ContainsResult& r) {
  if (r.contained) return ojson{{"contained", true}, {"modulus", r.modulus}};
  return ojson{{"contained", false},
               {"fail_index", r.fail_index},
               {"fail_pair", {r.fail_pair.first, r.fail_pair.second}}};
}

int run_lattice(const LatticeOpts& opt) {
  CoarseChain a = build_chain_spec(opt.a, opt.radius);
  CoarseChain b = build_chain_spec(opt.b, opt.radius);
  require_same_window(a.window, b.window, "lattice");

  ojson j;
  j["schema"] = 1;
  j["kind"] = "lattice_report";
  CoarseChain m = meet(a, b);
  j["meet"] = ojson{{"radius", m.radius()},
                    {"top_pairs", static_cast<long long>(m.top().pair_count())}};
  j["a_contains_b"] = modulus_json(contains(a, b));
  j["b_contains_a"] = modulus_json(contains(b, a));
  std::cout << "meet radius " << m.radius() << ", top has " << m.top().pair_count()
            << " pairs\n";

  if (!opt.join_member_pair.empty()) {
    auto comma = opt.join_member_pair.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("--join-member expects U,V");
    }
    int u = std::stoi(opt.join_member_pair.substr(0, comma));
    int v = std::stoi(opt.join_member_pair.substr(comma + 1));
    auto witness = join_member({u, v}, a, b, opt.maxlen);
    if (witness) {
      ojson letters = ojson::array();
      for (auto [structure, index] : witness->word.letters) {
        letters.push_back(ojson{{"structure", structure}, {"index", index}});
      }
      j["join_member"] = ojson{{"pair", {u, v}},
                               {"word", std::move(letters)},
                               {"points", witness->points}};
      std::cout << "join member (" << u << "," << v << "): word of length "
                << witness->word.letters.size() << "\n";
    } else {
      j["join_member"] = ojson{{"pair", {u, v}}, {"verdict", "NotWithinBudget"}};
      std::cout << "join member (" << u << "," << v << "): NotWithinBudget at maxlen "
                << opt.maxlen << "\n";
    }
  }

  if (opt.complement) {
    TransversalComplement tc = transversal_complement(a);
    std::pair<int, int> bad;
    bool covers = transversal_covers(a.at(1), tc, &bad);
    ojson cj;
    cj["transversal"] = tc.ideal.a;
    cj["degenerate"] = tc.degenerate;
    cj["word"] = {"eps", "eps_A", "eps"};
    cj["covers_window"] = covers;
    if (!covers) cj["failing_pair"] = {bad.first, bad.second};
    j["complement"] = std::move(cj);
    std::cout << "complement transversal of " << tc.ideal.a.size()
              << " points, word-3 cover " << (covers ? "PASS" : "FAIL")
              << (tc.degenerate ? " (degenerate)" : "") << "\n";
  }

  if (!opt.out.empty()) {
    write_json_file(opt.out, j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite truncations of coarse structures: constructions, lattice "
               "operations, and checkable decomposition certificates"};
  app.require_subcommand(1);

  DecomposeOpts dec;
  CLI::App* cmd_dec = app.add_subcommand("decompose", "run a decomposition construction");
  add_source_flags(cmd_dec, dec.src);
  cmd_dec->add_option("--method", dec.method,
                      "example1 | prop9 | prop10 | prop11 | subdivide+prop10")
      ->required();
  cmd_dec->add_option("--partition", dec.partition, "partition file or 'singletons'");
  cmd_dec->add_option("--v0", dec.v0, "base point for prop9");
  cmd_dec->add_option("--k", dec.k, "claimed radius for prop9 (-1 accepts measured)");
  cmd_dec->add_option("--r", dec.r, "radius for prop10/prop11");
  cmd_dec->add_option("--radius", dec.min_radius, "minimum chain radius for self-check");
  cmd_dec->add_option("--out", dec.out, "output JSON path")->required();

  VerifyOpts ver;
  CLI::App* cmd_ver = app.add_subcommand("verify", "replay a certificate");
  add_source_flags(cmd_ver, ver.src);
  cmd_ver->add_option("--certificate", ver.certificate, "certificate JSON")->required();
  cmd_ver->add_option("--radius", ver.radius, "chain radius (default: certificate budget)");
  cmd_ver->add_flag("--oracle", ver.oracle, "also run the brute-force closure oracle");
  cmd_ver->add_option("--maxlen", ver.maxlen, "oracle word budget (default: certificate)");
  cmd_ver->add_option("--oracle-cap", ver.oracle_cap, "oracle window size cap");
  cmd_ver->add_option("--out", ver.out, "report JSON path");

  LatticeOpts lat;
  CLI::App* cmd_lat = app.add_subcommand("lattice", "meet, containment, join membership");
  cmd_lat->add_option("--a", lat.a, "structure spec: graph:F | grid:DxN | metric:F | "
                                    "partition:F | ideal:N:ids")
      ->required();
  cmd_lat->add_option("--b", lat.b, "structure spec")->required();
  cmd_lat->add_option("--radius", lat.radius, "truncation radius for both chains");
  cmd_lat->add_option("--join-member", lat.join_member_pair, "pair U,V to test");
  cmd_lat->add_option("--maxlen", lat.maxlen, "word budget for join membership");
  cmd_lat->add_flag("--complement", lat.complement,
                    "emit a transversal complement certificate for --a");
  cmd_lat->add_option("--out", lat.out, "report JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cmd_dec->parsed()) return run_decompose(dec);
    if (cmd_ver->parsed()) return run_verify(ver);
    if (cmd_lat->parsed()) return run_lattice(lat);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotAnEquivalence& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
