#pragma once

#include <string>
#include <vector>

#include "relcyl/element.hpp"

namespace relcyl {

// Which operators an algebra carries. Cylindrifications are always present.
// With has_sub false but has_d true, s^i_j is the derived term c_i(d_ij . x).
struct Signature {
  bool has_c = true;
  bool has_sub = false;
  bool has_swap = false;
  bool has_d = false;

  static constexpr Signature pta() { return {true, false, false, true}; }
  static constexpr Signature ta() { return {true, true, true, false}; }
  static constexpr Signature sa() { return {true, true, false, false}; }
  static constexpr Signature tea() { return {true, true, true, true}; }
  // Partial transposition reduct of a TEA algebra: c, s^i_j and d.
  static constexpr Signature pt() { return {true, true, false, true}; }
  // Diagonal-free reduct keeping only cylindrifications.
  static constexpr Signature df() { return {true, false, false, false}; }

  bool can_sub() const { return has_sub || has_d; }
  bool subset_of(const Signature& o) const {
    return (!has_sub || o.has_sub) && (!has_swap || o.has_swap) && (!has_d || o.has_d);
  }
  bool operator==(const Signature&) const = default;
};

std::string to_string(const Signature& s);

// A finite atomic Boolean algebra with operators of dimension n, stored by its
// atom structure: cylindrifications as atom -> element images, substitutions
// and transpositions as Stone-dual atom -> atom maps (s x = {a : dual(a) in x}).
// Absent operators leave their tables empty.
struct FiniteBAO {
  int dim = 2;
  int num_atoms = 1;
  Signature sig;
  std::vector<std::vector<Element>> c;                // [i][atom]
  std::vector<std::vector<std::vector<int>>> sub_dual;   // [i][j][atom]
  std::vector<std::vector<std::vector<int>>> swap_dual;  // [i][j][atom], symmetric in i,j
  std::vector<std::vector<Element>> d;                // [i][j]

  Element top() const { return Element::full(num_atoms); }
  Element neg(Element x) const { return x.complement(num_atoms); }

  bool operator==(const FiniteBAO&) const = default;
};

// Throws IndexError / FormatError if n or the atom count break the configured caps.
void check_shape(int dim, int num_atoms);

// Atom-level operators. Each throws IndexError on bad indices and
// SignatureError when the operator is absent and not derivable.
Element cyl(const FiniteBAO& a, int i, Element x);
Element sub(const FiniteBAO& a, int i, int j, Element x);
Element swap(const FiniteBAO& a, int i, int j, Element x);
Element diag(const FiniteBAO& a, int i, int j);

enum class OpKind { Cyl, Sub, Swap, Diag, Join, Meet, Neg, Zero, One };

// Generic dispatcher over the operator tags; unused indices / arguments are ignored.
Element eval_op(const FiniteBAO& a, OpKind op, int i, int j, Element x, Element y = {});

// Structural invariants of the tables (not the axiom systems).
// Empty result iff every invariant holds.
std::vector<std::string> validate_bao(const FiniteBAO& a);

// Drops the operators outside `target`; throws SignatureError if target asks
// for something the algebra lacks.
FiniteBAO reduct(const FiniteBAO& a, const Signature& target);

// Installs d_ij as the meet of all y with s^i_j y = 1, by enumerating every element.
FiniteBAO define_diagonals(const FiniteBAO& a);

// For a finite algebra the canonical extension is the algebra itself.
FiniteBAO canonical_extension(const FiniteBAO& a);

// The one-atom algebra: every operator is the identity, every diagonal is 1.
FiniteBAO trivial_algebra(int dim, const Signature& sig);

}  // namespace relcyl
