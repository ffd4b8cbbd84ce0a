#include "relcyl/setalg.hpp"

#include <algorithm>

#include "relcyl/error.hpp"

namespace relcyl {

void validate_unit(const Unit& u) {
  if (u.dim < 2 || u.dim > limits().max_dim) {
    throw FormatError("unit dimension " + std::to_string(u.dim) + " outside 2.." +
                      std::to_string(limits().max_dim));
  }
  if (u.base < 1) throw FormatError("unit base must be positive");
  for (const auto& y : u.tuples) {
    if (static_cast<int>(y.size()) != u.dim) {
      throw FormatError("tuple " + to_string(y) + " has length " + std::to_string(y.size()) +
                        ", expected " + std::to_string(u.dim));
    }
    for (int v : y) {
      if (v < 0 || v >= u.base) {
        throw IndexError("tuple " + to_string(y) + " has a value outside the base " +
                         std::to_string(u.base));
      }
    }
  }
}

Unit full_unit(int dim, int base) {
  Unit u{dim, base, {}};
  Tuple y(dim, 0);
  while (true) {
    u.tuples.insert(y);
    int k = dim - 1;
    while (k >= 0 && ++y[k] == base) y[k--] = 0;
    if (k < 0) break;
  }
  return u;
}

std::vector<Unit> all_units(int dim, int base) {
  const Unit full = full_unit(dim, base);
  const std::vector<Tuple> all(full.tuples.begin(), full.tuples.end());
  if (all.size() > 20) throw BudgetError("too many candidate units to enumerate");
  std::vector<Unit> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask) {
    Unit u{dim, base, {}};
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((mask >> k) & 1U) u.tuples.insert(all[k]);
    }
    out.push_back(std::move(u));
  }
  return out;
}

namespace {

void check_index(const Unit& u, int i) {
  if (i < 0 || i >= u.dim) {
    throw IndexError("index " + std::to_string(i) + " ≥ dimension " + std::to_string(u.dim));
  }
}

}  // namespace

TupleSet set_cyl(const Unit& u, int i, const TupleSet& x) {
  check_index(u, i);
  TupleSet out;
  for (const auto& y : u.tuples) {
    Tuple v = y;
    for (int val = 0; val < u.base; ++val) {
      v[i] = val;
      if (x.count(v)) {
        out.insert(y);
        break;
      }
    }
  }
  return out;
}

TupleSet set_diag(const Unit& u, int i, int j) {
  check_index(u, i);
  check_index(u, j);
  TupleSet out;
  for (const auto& y : u.tuples) {
    if (y[i] == y[j]) out.insert(y);
  }
  return out;
}

TupleSet set_sub(const Unit& u, int i, int j, const TupleSet& x) {
  check_index(u, i);
  check_index(u, j);
  if (i == j) return x;
  TupleSet meet;
  for (const auto& y : x) {
    if (y[i] == y[j]) meet.insert(y);
  }
  return set_cyl(u, i, meet);
}

TupleSet set_transform(const Unit& u, const Transformation& t, const TupleSet& x) {
  TupleSet out;
  for (const auto& y : u.tuples) {
    if (x.count(act(t, y))) out.insert(y);
  }
  return out;
}

TupleSet set_transform_image(const Unit& u, const Transformation& t, const TupleSet& x) {
  TupleSet out;
  for (const auto& y : x) {
    Tuple z = act(t, y);
    if (u.tuples.count(z)) out.insert(std::move(z));
  }
  return out;
}

std::optional<Tuple> escaping_tuple(const Unit& u, const Transformation& t) {
  for (const auto& y : u.tuples) {
    if (!u.tuples.count(act(t, y))) return y;
  }
  return std::nullopt;
}

UnitFlags classify_unit(const Unit& u) {
  validate_unit(u);
  const int n = u.dim;
  UnitFlags f;
  f.is_D = true;
  for (int i = 0; i < n && f.is_D; ++i) {
    for (int j = 0; j < n && f.is_D; ++j) {
      if (set_sub(u, i, j, u.tuples) != u.tuples) f.is_D = false;
    }
  }
  bool sub_closed = true;
  bool swap_closed = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (set_transform(u, Transformation::elementary(n, i, j), u.tuples) != u.tuples) sub_closed = false;
      if (escaping_tuple(u, Transformation::transposition(n, i, j))) swap_closed = false;
    }
  }
  f.is_Dp = f.is_Dpe = f.is_Ds = sub_closed;
  f.closed_under_finite_transformations = sub_closed && swap_closed;
  return f;
}

namespace {

int atom_index(const std::vector<Tuple>& atoms, const Tuple& y) {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), y);
  if (it == atoms.end() || *it != y) return -1;
  return static_cast<int>(it - atoms.begin());
}

}  // namespace

Element to_element(const Unit& u, const TupleSet& x) {
  const std::vector<Tuple> atoms(u.tuples.begin(), u.tuples.end());
  Element e;
  for (const auto& y : x) {
    const int at = atom_index(atoms, y);
    if (at < 0) throw PreconditionError("tuple " + to_string(y) + " is not in the unit");
    e |= Element::atom(at);
  }
  return e;
}

TupleSet to_tuples(const Unit& u, Element e) {
  TupleSet out;
  int k = 0;
  for (const auto& y : u.tuples) {
    if (e.contains(k++)) out.insert(y);
  }
  return out;
}

FiniteBAO abstract(const Unit& u, const Signature& sig) {
  validate_unit(u);
  if (u.tuples.empty()) throw PreconditionError("cannot abstract an empty unit");
  const int n = u.dim;
  const int k = static_cast<int>(u.tuples.size());
  check_shape(n, k);
  const std::vector<Tuple> atoms(u.tuples.begin(), u.tuples.end());

  FiniteBAO a;
  a.dim = n;
  a.num_atoms = k;
  a.sig = sig;
  a.c.assign(n, std::vector<Element>(k));
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < k; ++p) {
      for (int q = 0; q < k; ++q) {
        bool agree = true;
        for (int m = 0; m < n && agree; ++m) agree = m == i || atoms[p][m] == atoms[q][m];
        if (agree) a.c[i][p] |= Element::atom(q);
      }
    }
  }

  auto dual_table = [&](bool transposition) {
    std::vector<std::vector<std::vector<int>>> t(n, std::vector<std::vector<int>>(n, std::vector<int>(k)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Transformation tau = transposition ? Transformation::transposition(n, i, j)
                                                 : Transformation::elementary(n, i, j);
        for (int p = 0; p < k; ++p) {
          const Tuple z = act(tau, atoms[p]);
          const int q = atom_index(atoms, z);
          if (q < 0) {
            throw PreconditionError("unit not closed under [" + std::to_string(i) +
                                    (transposition ? "," : "|") + std::to_string(j) + "]: tuple " +
                                    to_string(atoms[p]) + " maps to " + to_string(z));
          }
          t[i][j][p] = q;
        }
      }
    }
    return t;
  };
  if (sig.has_sub) a.sub_dual = dual_table(false);
  if (sig.has_swap) a.swap_dual = dual_table(true);
  if (sig.has_d) {
    a.d.assign(n, std::vector<Element>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int p = 0; p < k; ++p) {
          if (atoms[p][i] == atoms[p][j]) a.d[i][j] |= Element::atom(p);
        }
      }
    }
  }
  return a;
}

}  // namespace relcyl
