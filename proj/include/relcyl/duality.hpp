#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcyl/axioms.hpp"
#include "relcyl/setalg.hpp"

namespace relcyl {

using Relation = std::vector<std::pair<int, int>>;  // sorted pairs of worlds

// A frame of type TA: worlds 0..worlds-1 and explicit relations.
struct Frame {
  int dim = 2;
  int worlds = 1;
  std::vector<Relation> C;                    // [i]
  bool has_sub = true;
  bool has_swap = true;
  std::vector<std::vector<Relation>> S_sub;   // [i][j], (x,y) when [i|j]|x = y
  std::vector<std::vector<Relation>> S_swap;  // [i][j]

  bool operator==(const Frame&) const = default;
};

void validate_frame(const Frame& f);  // FormatError on shape or range problems

struct ComplexAlgebra {
  FiniteBAO algebra;
  std::vector<std::string> report;  // non-functional S relations, then validate_bao
};

// Powerset algebra of the frame, with c_i X = {s : (s,t) in C_i for some t in X}
// and likewise for the S relations. A functional S relation becomes a dual
// map; otherwise the entry is -1 and the report says so.
ComplexAlgebra complex_algebra(const Frame& f);

// Worlds are the tuples of V in lexicographic order; (x,y) in C_i iff x and y
// agree off i. Throws PreconditionError naming a tuple that leaves V.
Frame tuple_frame(const Unit& u);

// The frame whose complex algebra is a (the atom structure).
Frame atom_frame(const FiniteBAO& a);

// Substructure of the product on the given carrier (one world index per
// factor); relations hold componentwise. Throws PreconditionError when a
// projection misses a world.
Frame zigzag_product(const std::vector<Frame>& frames, const std::vector<std::vector<int>>& carrier);

// Embeddings are given by surjective dual maps on atoms: i(x) = {p : dual[p] in x}.
struct AmalgamProblem {
  FiniteBAO A0, A1, A2;
  std::vector<int> i1;  // At(A1) -> At(A0)
  std::vector<int> i2;  // At(A2) -> At(A0)
};

// Empty iff dual is a surjective map At(target) -> At(source) whose preimage
// map commutes with every operator of the source signature.
std::vector<std::string> check_embedding(const FiniteBAO& source, const FiniteBAO& target,
                                         const std::vector<int>& dual);

struct Superamalgam {
  FiniteBAO D;
  std::vector<std::pair<int, int>> carrier;  // atoms of D as (atom of A1, atom of A2)
  std::vector<std::string> certificate;      // facts verified for the returned D
};

struct AmalgamSearch {
  bool found = false;
  std::optional<Superamalgam> result;
  std::uint64_t candidates_tried = 0;
};

// Tries carriers S of At(A1) x At(A2) by size (1..bound), then by bitmask.
// D is the complex algebra of the zigzag product of the atom frames on S,
// m1 and m2 the projection embeddings. Accepts the first D that passes TA and
// where m1, m2 are embeddings, m1 i1 = m2 i2, and the interpolation property
// holds both ways. Throws BudgetError past max_candidates.
AmalgamSearch search_superamalgam(const AmalgamProblem& p, int bound, std::uint64_t max_candidates = 1u << 20);

}  // namespace relcyl
