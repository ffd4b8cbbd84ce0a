#pragma once

#include <string>
#include <vector>

namespace relcyl {

// An n-tuple of base values (set algebras) or nodes (networks).
using Tuple = std::vector<int>;

// A total map on {0..n-1}. Composition and the tuple action follow one
// convention throughout: (t|l)(k) = l(t(k)) and (t|y)(k) = y(t(k)).
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<int> map);

  static Transformation identity(int n);
  static Transformation elementary(int n, int i, int j);    // [i|j]: i -> j
  static Transformation transposition(int n, int i, int j);  // [i,j]

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int k) const { return map_[k]; }
  const std::vector<int>& map() const { return map_; }

  bool is_permutation() const;
  bool is_identity() const;
  Transformation inverse() const;  // permutations only

  // t.then(l) is t|l: apply t first, then l.
  Transformation then(const Transformation& l) const;

  bool operator==(const Transformation&) const = default;
  auto operator<=>(const Transformation&) const = default;

 private:
  std::vector<int> map_;
};

// t|y: the tuple k -> y(t(k)).
Tuple act(const Transformation& t, const Tuple& y);

std::string to_string(const Tuple& y);

// One generator of a substitution word: [i|j] or [i,j].
struct Generator {
  enum class Kind { Sub, Swap };
  Kind kind = Kind::Sub;
  int i = 0;
  int j = 0;

  Transformation as_transformation(int n) const;
  bool operator==(const Generator&) const = default;
  auto operator<=>(const Generator&) const = default;
};

using SubstWord = std::vector<Generator>;

std::string to_string(const SubstWord& w);

// w0|w1|...|wm; the empty word gives the identity.
Transformation hat(const SubstWord& w, int n);

// A word whose hat is t. Permutations give transpositions only (cycle by
// cycle, smallest moved index first); other maps give elementary
// substitutions only. hat(decompose(t)) == t always.
SubstWord decompose(const Transformation& t);

// A word of elementary substitutions with hat equal to t. Defined for every
// non-injective t and for the identity; throws PreconditionError otherwise.
SubstWord substitution_word(const Transformation& t);

}  // namespace relcyl
