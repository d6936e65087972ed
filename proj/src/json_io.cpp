#include "coarse/json_io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace coarse {

namespace {

ojson classes_to_json(const Partition& p) {
  ojson arr = ojson::array();
  for (const auto& cls : p.classes) arr.push_back(cls);
  return arr;
}

std::vector<std::vector<int>> classes_from_json(const ojson& j, const char* name) {
  if (!j.is_array()) throw SchemaError(std::string(name) + ": expected array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& cls : j) {
    if (!cls.is_array()) throw SchemaError(std::string(name) + ": expected array of arrays");
    out.push_back(cls.get<std::vector<int>>());
  }
  return out;
}

}  // namespace

ojson certificate_to_json(const DecompositionCertificate& cert) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "decomposition_certificate";
  j["method"] = cert.method;
  j["seed"] = cert.seed;
  j["window"] = ojson{{"size", cert.window_size}};
  j["budget"] = ojson{{"radius", cert.budget_radius}, {"maxlen", cert.budget_maxlen}};
  ojson meta = ojson::object();
  for (const auto& [k, v] : cert.meta) meta[k] = v;
  j["meta"] = std::move(meta);
  j["pattern"] = cert.pattern;
  j["p0"] = classes_to_json(cert.p0);
  j["p1"] = classes_to_json(cert.p1);
  ojson dws = ojson::array();
  for (const auto& w : cert.diameter_witnesses) {
    dws.push_back(ojson{{"partition", w.partition},
                        {"class", w.cls},
                        {"center", w.center},
                        {"index", w.index}});
  }
  j["diameter_witnesses"] = std::move(dws);
  ojson ews = ojson::array();
  for (const auto& w : cert.edge_witnesses) {
    ews.push_back(ojson{{"pair", {w.pair.first, w.pair.second}},
                        {"pattern", w.pattern},
                        {"chain", w.chain}});
  }
  j["edge_witnesses"] = std::move(ews);
  return j;
}

DecompositionCertificate certificate_from_json(const ojson& j) {
  try {
    if (!j.is_object() || j.value("schema", -1) != 1) {
      throw SchemaError("certificate: missing or unsupported schema tag");
    }
    if (j.value("kind", "") != "decomposition_certificate") {
      throw SchemaError("certificate: wrong kind");
    }
    DecompositionCertificate cert;
    cert.method = j.value("method", "");
    cert.seed = j.value("seed", std::uint64_t{0});
    cert.window_size = j.at("window").at("size").get<int>();
    cert.budget_radius = j.at("budget").at("radius").get<int>();
    cert.budget_maxlen = j.at("budget").at("maxlen").get<int>();
    if (j.contains("meta")) {
      for (auto it = j["meta"].begin(); it != j["meta"].end(); ++it) {
        cert.meta.emplace_back(it.key(), it.value().get<long long>());
      }
    }
    cert.pattern = j.at("pattern").get<std::vector<int>>();
    cert.p0 = Partition::unchecked(cert.window_size, classes_from_json(j.at("p0"), "p0"));
    cert.p1 = Partition::unchecked(cert.window_size, classes_from_json(j.at("p1"), "p1"));
    for (const auto& w : j.at("diameter_witnesses")) {
      cert.diameter_witnesses.push_back({w.at("partition").get<int>(),
                                         w.at("class").get<int>(),
                                         w.at("center").get<int>(),
                                         w.at("index").get<int>()});
    }
    for (const auto& w : j.at("edge_witnesses")) {
      EdgeWitness ew;
      auto pair = w.at("pair").get<std::vector<int>>();
      if (pair.size() != 2) throw SchemaError("edge witness: pair must have two points");
      ew.pair = {pair[0], pair[1]};
      ew.pattern = w.at("pattern").get<std::vector<int>>();
      ew.chain = w.at("chain").get<std::vector<int>>();
      cert.edge_witnesses.push_back(std::move(ew));
    }
    return cert;
  } catch (const ojson::exception& ex) {
    throw SchemaError(std::string("certificate: ") + ex.what());
  }
}

ojson hypothesis_to_json(const HypothesisReport& rep) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "hypothesis_report";
  j["proposition"] = rep.proposition;
  j["pass"] = rep.pass;
  if (!rep.pass) {
    j["failing_object"] = rep.failing_object;
    if (rep.failing_class >= 0) j["failing_class"] = rep.failing_class;
    if (rep.failing_vertex >= 0) j["failing_vertex"] = rep.failing_vertex;
  }
  ojson constants = ojson::object();
  for (const auto& [k, v] : rep.constants) constants[k] = v;
  j["constants"] = std::move(constants);
  return j;
}

ojson verification_to_json(const VerificationReport& rep) {
  ojson j;
  j["schema"] = 1;
  j["kind"] = "verification_report";
  j["pass"] = rep.pass;
  j["checked"] = ojson{{"classes", rep.checked_classes},
                       {"edges", rep.checked_edges},
                       {"witnesses", rep.checked_witnesses}};
  if (!rep.pass) j["first_failure"] = rep.first_failure;
  j["max_pattern_len"] = rep.max_pattern_len;
  j["max_diameter_index"] = rep.max_diameter_index;
  return j;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path, 0);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0, max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u)) continue;  // blank or comment-only line
    std::string trailing;
    if (!(ss >> v) || (ss >> trailing)) {
      throw ParseError("graph file " + path + ": expected 'u v' on line " +
                           std::to_string(lineno),
                       lineno);
    }
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) {
      throw ParseError("graph file " + path + ": vertex id out of range on line " +
                           std::to_string(lineno),
                       lineno);
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max<long long>({max_id, u, v});
  }
  if (edges.empty()) throw ParseError("graph file " + path + ": no edges", lineno);
  return make_graph(static_cast<int>(max_id) + 1, std::move(edges));
}

MetricWindow read_metric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open metric file " + path, 0);
  struct Entry {
    int u, v;
    long long num, den;
  };
  std::vector<Entry> entries;
  std::string line;
  int lineno = 0, max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    long long u, v, num, den;
    if (!(ss >> u)) continue;
    std::string trailing;
    if (!(ss >> v >> num >> den) || (ss >> trailing)) {
      throw ParseError("metric file " + path + ": expected 'u v num den' on line " +
                           std::to_string(lineno),
                       lineno);
    }
    if (den <= 0) {
      throw ParseError("metric file " + path + ": non-positive denominator on line " +
                           std::to_string(lineno),
                       lineno);
    }
    Rational r = make_rational(num, den);
    entries.push_back({static_cast<int>(u), static_cast<int>(v), r.num, r.den});
    max_id = std::max<long long>({max_id, u, v});
  }
  const int n = static_cast<int>(max_id) + 1;
  if (n <= 0) throw ParseError("metric file " + path + ": no distances", lineno);
  long long den = 1;
  for (const auto& e : entries) den = std::lcm(den, e.den);
  std::vector<long long> num(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) num[static_cast<std::size_t>(x) * n + x] = 0;
  for (const auto& e : entries) {
    long long v = e.num * (den / e.den);
    num[static_cast<std::size_t>(e.u) * n + e.v] = v;
    num[static_cast<std::size_t>(e.v) * n + e.u] = v;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (num[static_cast<std::size_t>(x) * n + y] < 0) {
        throw ParseError("metric file " + path + ": missing distance for pair (" +
                             std::to_string(x) + "," + std::to_string(y) + ")",
                         lineno);
      }
    }
  }
  return metric_from_ints(n, std::move(num), den);
}

Partition read_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open partition file " + path, 0);
  std::vector<std::vector<int>> classes;
  std::string line;
  int lineno = 0, max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::vector<int> cls;
    long long x;
    while (ss >> x) {
      cls.push_back(static_cast<int>(x));
      max_id = std::max<long long>(max_id, x);
    }
    if (!cls.empty()) classes.push_back(std::move(cls));
  }
  if (classes.empty()) throw ParseError("partition file " + path + ": no classes", lineno);
  return Partition::from_classes(static_cast<int>(max_id) + 1, std::move(classes));
}

void write_json_file(const std::string& path, const ojson& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

ojson read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return ojson::parse(in);
  } catch (const ojson::exception& ex) {
    throw SchemaError(path + ": " + ex.what());
  }
}

}  // namespace coarse
