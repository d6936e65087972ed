#ifndef COARSE_VERIFY_HPP
#define COARSE_VERIFY_HPP

#include <string>
#include <utility>

#include "coarse/certificate.hpp"
#include "coarse/chain.hpp"
#include "coarse/graph.hpp"
#include "coarse/structures.hpp"

namespace coarse {

struct VerificationReport {
  bool pass = false;
  int checked_classes = 0;
  int checked_edges = 0;
  int checked_witnesses = 0;
  std::string first_failure;  // empty on pass
  int max_pattern_len = 0;
  int max_diameter_index = 0;
};

// Replays a certificate against raw definitions only: partition validity,
// diameter witnesses, and one witness chain per generator pair. Never
// consults construction internals.
VerificationReport verify_certificate(const CoarseChain& e,
                                      const DecompositionCertificate& cert);

struct OracleResult {
  bool pass = false;
  std::pair<int, int> counterexample{-1, -1};
};

// Brute-force ground truth: closes the two partition equivalences under
// composition up to maxlen and checks the generator is covered. Refuses
// windows above size_cap.
OracleResult oracle_join_covers(const CoarseChain& e, const Partition& p0,
                                const Partition& p1, int maxlen, int size_cap = 60);

// Word [eps, eps_A, eps] relates every pair of the window; returns false
// and the first failing pair otherwise.
bool transversal_covers(const Entourage& eps, const TransversalComplement& tc,
                        std::pair<int, int>* failing = nullptr);

HypothesisReport check_prop9(const Graph& g, int v0, int claimed_k);
HypothesisReport check_prop10(const Graph& g, const Partition& p, int r);
HypothesisReport check_prop11_net(const Graph& g, int r, const std::vector<int>& net);
HypothesisReport check_uniform_local_finiteness(const Graph& g);

}  // namespace coarse

#endif
