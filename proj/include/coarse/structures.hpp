#ifndef COARSE_STRUCTURES_HPP
#define COARSE_STRUCTURES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "coarse/chain.hpp"
#include "coarse/graph.hpp"
#include "coarse/metric.hpp"
#include "coarse/partition.hpp"

namespace coarse {

struct IdealSpec {
  std::vector<int> a;  // the distinguished set A
};

struct PermutationSet {
  std::vector<std::vector<int>> perms;  // each a bijection 0..n-1 -> 0..n-1
};

CoarseChain from_graph(const Graph& g, int radius);
CoarseChain from_metric(const MetricWindow& m, int radius);
// level 1 merges A; level i >= 2 additionally merges the first i-1 non-A
// points in id order (A union F with F finite, canonicalized)
CoarseChain from_ideal(const Window& w, const IdealSpec& spec, int radius);
// level 1 = symmetrized one-step moves, level i = i-fold composition
CoarseChain from_permutations(const Window& w, const PermutationSet& ps, int radius);

struct TranspositionRealization {
  PermutationSet set;                 // one transposition per off-diagonal pair
  int uniform_ball_bound = 0;         // max |B(x, e u e^-1)|, finite surrogate report
};
TranspositionRealization entourage_to_permutations(const Entourage& e);

// Greatest lower bound at truncation: level-wise intersection.
CoarseChain meet(const CoarseChain& a, const CoarseChain& b);

struct JoinWitness {
  CompositionWord word;
  std::vector<int> points;  // z_0 .. z_n, one hop per letter
};

// Shortest witness that (pair) lies in the join, moving by either chain's
// top entourage; nullopt = not within the word budget at this truncation.
std::optional<JoinWitness> join_member(std::pair<int, int> pair, const CoarseChain& e1,
                                       const CoarseChain& e2, int maxlen);

struct ContainsResult {
  bool contained = false;
  std::vector<int> modulus;  // per inner index, smallest covering outer index
  int fail_index = -1;
  std::pair<int, int> fail_pair{-1, -1};
};

// Does `outer` contain `inner` at truncation: inner.at(i) within
// outer.at(modulus[i]) for every i.
ContainsResult contains(const CoarseChain& outer, const CoarseChain& inner);

// Chain of the structure generated by one equivalence: diagonal, the
// equivalence, then merges of its first 2, 3, ... classes in class-id order.
CoarseChain generated_by(const Entourage& equivalence, int max_radius = -1);

struct TransversalComplement {
  IdealSpec ideal;                 // A = minimum-id point of each class
  std::vector<int> representative; // x -> the A-point of its class
  Entourage eps_a;                 // equivalence merging A, singletons elsewhere
  bool degenerate = false;         // fewer than 2 classes
};

// Complement of a cellular chain through a transversal: pick one point per
// class of the designated equivalence; the word [eps, eps_A, eps] then
// relates every pair of the window.
TransversalComplement transversal_complement(const CoarseChain& cellular,
                                             int eps_index = 1);

}  // namespace coarse

#endif
