#ifndef COARSE_DECOMPOSE_HPP
#define COARSE_DECOMPOSE_HPP

#include <optional>
#include <vector>

#include "coarse/certificate.hpp"
#include "coarse/chain.hpp"
#include "coarse/graph.hpp"
#include "coarse/metric.hpp"
#include "coarse/structures.hpp"

namespace coarse {

struct GridDecomposition {
  Graph graph;
  DecompositionCertificate certificate;
};

// Shifted-cube decomposition of the l1 grid [-N, N)^dim: p0 tiles by cubes
// of side 2*scale, p1 is p0 shifted by (scale,..,scale). Every unit step
// stays inside a single cell of p0 or p1. scale must be a power of two and
// N a multiple of 2*scale.
GridDecomposition grid_decomposition(int dim, int halfwidth, int scale);

struct DecompositionOutcome {
  HypothesisReport report;
  std::optional<DecompositionCertificate> certificate;  // only when report.pass
};

// Sphere-layer decomposition around v0; hypothesis: every component of the
// layer-pair graphs fits in a ball of radius claimed_k (minimal k measured).
DecompositionOutcome sphere_decomposition(const Graph& g, int v0, int claimed_k);

// Linking-pair decomposition from a partition satisfying (i) radius r and
// (ii) neighbor-count <= class size; gamma links adjacent classes through
// two-element cells.
DecompositionOutcome linking_pair_decomposition(const Graph& g, const Partition& p,
                                                int r);

// Greedy r-net, nearest-point cells, then the linking-pair construction at
// radius 2r.
DecompositionOutcome net_decomposition(const Graph& g, int r);

struct Subdivision {
  Graph graph;       // each edge replaced by a 3-edge path
  Partition cells;   // cell of original v = {v} + nearer subdivision vertices
};
Subdivision subdivide(const Graph& g);

struct PullbackResult {
  int largeness_index = -1;       // entourage index witnessing X = B(Y, eps)
  std::vector<int> retraction;    // f: window -> y, identity on y
  DecompositionCertificate certificate;
};

// Pull a certificate on a large subset y back through the retraction.
// `y` holds parent ids, ascending; cert_on_y is indexed over 0..|y|-1.
PullbackResult pullback_decomposition(const CoarseChain& e, const std::vector<int>& y,
                                      const DecompositionCertificate& cert_on_y);

struct UnitGraphResult {
  Graph graph;
  ContainsResult metric_in_graph;  // metric chain within graph chain
  ContainsResult graph_in_metric;  // graph chain within metric chain
};

// Unit-distance graph {x,y : 0 < d(x,y) <= 1}; reports bi-containment
// moduli between its path chain and the metric chain at the given radius.
UnitGraphResult unit_graph(const MetricWindow& m, int radius);

}  // namespace coarse

#endif
