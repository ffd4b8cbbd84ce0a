#pragma once

#include <optional>
#include <set>
#include <vector>

#include "relcyl/bao.hpp"
#include "relcyl/transform.hpp"

namespace relcyl {

using TupleSet = std::set<Tuple>;

// A set of n-tuples over {0..base-1}.
struct Unit {
  int dim = 2;
  int base = 1;
  TupleSet tuples;

  bool operator==(const Unit&) const = default;
};

// Throws FormatError / IndexError on wrong tuple lengths, values or caps.
void validate_unit(const Unit& u);

// ^n{0..base-1}.
Unit full_unit(int dim, int base);

// All non-empty units over the given base, ordered by the bitmask of the
// lexicographically listed full space.
std::vector<Unit> all_units(int dim, int base);

// Tuple-level operations relative to the unit. X is assumed to be a subset of it.
TupleSet set_cyl(const Unit& u, int i, const TupleSet& x);
TupleSet set_diag(const Unit& u, int i, int j);
// C_i(D_ij . X); the identity when i = j.
TupleSet set_sub(const Unit& u, int i, int j, const TupleSet& x);
// {y in V : t|y in X}. This is the substitution operator of the toolkit.
TupleSet set_transform(const Unit& u, const Transformation& t, const TupleSet& x);
// {t|y : y in X} cut down to V, the image reading; kept for comparison.
TupleSet set_transform_image(const Unit& u, const Transformation& t, const TupleSet& x);

struct UnitFlags {
  bool is_D = false;
  bool is_Dp = false;
  bool is_Dpe = false;
  bool is_Ds = false;
  bool closed_under_finite_transformations = false;
};

UnitFlags classify_unit(const Unit& u);

// A tuple y in V with t|y outside V, if any.
std::optional<Tuple> escaping_tuple(const Unit& u, const Transformation& t);

// Full powerset algebra over the unit, one atom per tuple in lexicographic
// order. Substitutions need closure under every [i|j], transpositions under
// every [i,j]; a failure throws PreconditionError naming the escaping tuple.
FiniteBAO abstract(const Unit& u, const Signature& sig);

// Element <-> tuple set under the atom order of abstract().
Element to_element(const Unit& u, const TupleSet& x);
TupleSet to_tuples(const Unit& u, Element e);

}  // namespace relcyl
