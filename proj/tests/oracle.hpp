#pragma once

// Brute-force tuple semantics written directly from the set definitions,
// sharing nothing with the library beyond the Element and Tuple types.

#include <algorithm>
#include <set>
#include <vector>

#include "relcyl/element.hpp"
#include "relcyl/transform.hpp"

namespace oracle {

using relcyl::Element;
using relcyl::Tuple;
using Tuples = std::vector<Tuple>;  // sorted, distinct

inline Tuples power(int n, int base) {
  Tuples out;
  Tuple y(n, 0);
  while (true) {
    out.push_back(y);
    int k = n - 1;
    while (k >= 0 && ++y[k] == base) y[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

// Every non-empty subset of base^n, as sorted tuple lists.
inline std::vector<Tuples> units(int n, int base) {
  const Tuples all = power(n, base);
  std::vector<Tuples> out;
  for (unsigned long m = 1; m < (1UL << all.size()); ++m) {
    Tuples v;
    for (std::size_t k = 0; k < all.size(); ++k)
      if ((m >> k) & 1UL) v.push_back(all[k]);
    out.push_back(v);
  }
  return out;
}

inline int index_of(const Tuples& v, const Tuple& y) {
  auto it = std::find(v.begin(), v.end(), y);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

inline Element elem(const Tuples& v, const Tuples& xs) {
  Element e;
  for (const auto& y : xs) e |= Element::atom(index_of(v, y));
  return e;
}

inline Tuples tuples(const Tuples& v, Element e) {
  Tuples out;
  for (int a : e.atoms()) out.push_back(v[a]);
  return out;
}

// y with coordinate i replaced by u.
inline Tuple variant(Tuple y, int i, int u) {
  y[i] = u;
  return y;
}

// [i|j]|y: coordinate i takes the value at j.
inline Tuple subst(const Tuple& y, int i, int j) { return variant(y, i, y[j]); }

// [i,j]|y: coordinates i and j exchanged.
inline Tuple transpose(Tuple y, int i, int j) {
  std::swap(y[i], y[j]);
  return y;
}

// tau|y: k -> y(tau(k)).
inline Tuple act(const std::vector<int>& tau, const Tuple& y) {
  Tuple out(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) out[k] = y[tau[k]];
  return out;
}

// C_i X: tuples of V with an i-variant in X.
inline Element cyl(const Tuples& v, int base, int i, Element x) {
  const Tuples xs = tuples(v, x);
  Element out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    for (int u = 0; u < base; ++u) {
      if (std::find(xs.begin(), xs.end(), variant(v[k], i, u)) != xs.end()) out |= Element::atom(static_cast<int>(k));
    }
  }
  return out;
}

inline Element diag(const Tuples& v, int i, int j) {
  Element out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k][i] == v[k][j]) out |= Element::atom(static_cast<int>(k));
  return out;
}

// {y in V : f(y) in X}.
template <class F>
Element preimage(const Tuples& v, Element x, F f) {
  const Tuples xs = tuples(v, x);
  Element out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (std::find(xs.begin(), xs.end(), f(v[k])) != xs.end()) out |= Element::atom(static_cast<int>(k));
  }
  return out;
}

inline bool closed(const Tuples& v, int n, bool swaps) {
  for (const auto& y : v) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (index_of(v, subst(y, i, j)) < 0) return false;
        if (swaps && index_of(v, transpose(y, i, j)) < 0) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
