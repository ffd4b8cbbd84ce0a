#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "relcyl/bao.hpp"
#include "relcyl/transform.hpp"

namespace relcyl {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Term syntax tree. Sub is s^i_j, Swap is s_ij.
struct Term {
  enum class Kind { Var, Zero, One, Diag, Neg, Cyl, Sub, Swap, Join, Meet };
  Kind kind = Kind::Zero;
  int i = 0;  // variable index for Var
  int j = 0;
  TermPtr a;
  TermPtr b;
};

namespace term {
TermPtr var(int k);
TermPtr zero();
TermPtr one();
TermPtr d(int i, int j);
TermPtr neg(TermPtr t);
TermPtr c(int i, TermPtr t);
TermPtr s(int i, int j, TermPtr t);
TermPtr swap(int i, int j, TermPtr t);
TermPtr join(TermPtr l, TermPtr r);
TermPtr meet(TermPtr l, TermPtr r);
}  // namespace term

bool equal(const Term& l, const Term& r);

// Grammar: 0 1 x<k> d<i><j> -T c<i> T s<i>/<j> T s<i>,<j> T (T+T) (T*T).
// Unary operators bind tighter than *, which binds tighter than +.
// Throws FormatError with a position, or IndexError "index i ≥ dimension n".
TermPtr parse_term(const std::string& text, int n);

// Canonical form: binaries fully parenthesised, one space after unary operators.
std::string to_string(const Term& t);

std::set<int> variables(const Term& t);
bool mentions(const Term& t, int var);

using Assignment = std::map<int, Element>;

// Throws FormatError on a missing binding, SignatureError on absent operators.
Element eval_term(const FiniteBAO& a, const Term& t, const Assignment& env);

struct Equation {
  enum class Kind { Eq, Leq };
  TermPtr lhs;
  TermPtr rhs;
  Kind kind = Kind::Eq;
};

// "T = T" or "T <= T".
Equation parse_equation(const std::string& text, int n);
std::string to_string(const Equation& e);

enum class CheckMode {
  AllElements,  // every element for every variable
  Atoms,        // 0 and the atoms only; needs the additivity side condition
  Auto,         // Atoms when sound, else AllElements
};

struct CheckResult {
  bool holds = true;
  Assignment counterexample;
  Element lhs;
  Element rhs;
  std::uint64_t assignments = 0;  // how many were evaluated
};

// True when restricting every variable to {0} ∪ atoms decides e.
bool atoms_mode_sound(const Equation& e);

// Exhaustive check. Variables are enumerated with the lowest-numbered one
// most significant and values in ascending bitmask order; the first failure
// is returned. Throws BudgetError when the enumeration exceeds the cap and
// PreconditionError when Atoms mode is requested but unsound.
CheckResult check_equation(const FiniteBAO& a, const Equation& e,
                           CheckMode mode = CheckMode::AllElements);

// The generator word of decompose(t), innermost generator first:
// s_t x = {y : t|y in x} in set algebras. Throws SignatureError when t needs a
// transposition the algebra lacks.
Element s_tau(const FiniteBAO& a, const Transformation& t, Element x);

// Applies the generators of w to x, w[0] innermost.
Element apply_word(const FiniteBAO& a, const SubstWord& w, Element x);

}  // namespace relcyl

namespace relcyl {

// t^i_j x = d_ij . c_i x, and t^i_i x = x. Needs c and d.
Element t_op(const FiniteBAO& a, int i, int j, Element x);

// Evaluates the t-word of w on x: w[0] outermost, so the result for an atom
// of a set algebra is the atom of hat(w)|y. Only Sub generators are allowed.
Element apply_t_word(const FiniteBAO& a, const SubstWord& w, Element x);

}  // namespace relcyl
