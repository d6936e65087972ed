#ifndef COARSE_JSON_IO_HPP
#define COARSE_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "coarse/certificate.hpp"
#include "coarse/graph.hpp"
#include "coarse/metric.hpp"
#include "coarse/verify.hpp"

namespace coarse {

using ojson = nlohmann::ordered_json;

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& what, int line) : std::runtime_error(what), line(line) {}
};

ojson certificate_to_json(const DecompositionCertificate& cert);
DecompositionCertificate certificate_from_json(const ojson& j);  // throws SchemaError
ojson hypothesis_to_json(const HypothesisReport& report);
ojson verification_to_json(const VerificationReport& report);

// One `u v` edge per line, 0-based ids, '#' comments.
Graph read_graph_file(const std::string& path);
// One `u v num den` distance per line; all off-diagonal pairs required.
MetricWindow read_metric_file(const std::string& path);
// One class per line: space-separated ids.
Partition read_partition_file(const std::string& path);

void write_json_file(const std::string& path, const ojson& j);
ojson read_json_file(const std::string& path);

}  // namespace coarse

#endif
