#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "relcyl/terms.hpp"

namespace relcyl {

enum class NetworkMode { PTA, TEA };

std::string to_string(NetworkMode m);
NetworkMode parse_network_mode(const std::string& s);

// Nodes are plain integers; edges are n-tuples of nodes with an element label.
struct Network {
  std::set<int> nodes;
  std::map<Tuple, Element> labels;

  bool operator==(const Network&) const = default;
};

// Domain closure, (a), (b) over pairs of edges (x = y included) and, in TEA
// mode, (c). Each entry names the condition and the edges involved.
std::vector<std::string> check_network(const FiniteBAO& a, const Network& net, NetworkMode mode);

// True when x_i = x_j exactly for the (i,j) with atom <= d_ij.
bool matches_diagonals(const FiniteBAO& a, Element atom, const Tuple& x);

// Tuples over Range(x) with fewer than n distinct values.
std::vector<Tuple> non_surjective_tuples(const Tuple& x);
// All n-tuples over Range(x).
std::vector<Tuple> all_tuples_over(const Tuple& x);

// The map k -> least m with x_m = y_k, so that t|x = y.
Transformation reaching_map(const Tuple& x, const Tuple& y);

// Partial transposition network: every non-surjective tuple over Range(x)
// labelled by the t-word of its substitution word applied to the atom.
// Throws PreconditionError unless matches_diagonals(a, atom, x), and
// InvariantError if a t-word result is not an atom.
Network build_PT(const FiniteBAO& a, Element atom, const Tuple& x);

// Transposition network on all tuples over Range(x). Each permutation class
// (same multiset of nodes) has one representative: x itself for its own
// class, otherwise the sorted tuple. Representatives get t-word labels; the
// rest follow label([i,j]|w) = s_ij label(w). Throws InvariantError when two
// routes disagree.
Network build_T(const FiniteBAO& a, Element atom, const Tuple& x);

}  // namespace relcyl
