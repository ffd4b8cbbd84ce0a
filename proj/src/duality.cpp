#include "relcyl/duality.hpp"

#include <algorithm>
#include <map>

#include "relcyl/error.hpp"

namespace relcyl {

void validate_frame(const Frame& f) {
  if (f.dim < 2 || f.dim > limits().max_dim) throw FormatError("frame dimension out of range");
  if (f.worlds < 1) throw FormatError("frame needs at least one world");
  auto check_rel = [&](const Relation& r, const std::string& what) {
    for (const auto& [s, t] : r) {
      if (s < 0 || t < 0 || s >= f.worlds || t >= f.worlds) {
        throw FormatError(what + " relates a world outside 0.." + std::to_string(f.worlds - 1));
      }
    }
  };
  if (static_cast<int>(f.C.size()) != f.dim) throw FormatError("frame needs one C relation per index");
  for (int i = 0; i < f.dim; ++i) check_rel(f.C[i], "C_" + std::to_string(i));
  auto check_grid = [&](const std::vector<std::vector<Relation>>& g, const std::string& what) {
    if (static_cast<int>(g.size()) != f.dim) throw FormatError(what + " needs n x n relations");
    for (int i = 0; i < f.dim; ++i) {
      if (static_cast<int>(g[i].size()) != f.dim) throw FormatError(what + " needs n x n relations");
      for (int j = 0; j < f.dim; ++j) check_rel(g[i][j], what);
    }
  };
  if (f.has_sub) check_grid(f.S_sub, "S_sub");
  if (f.has_swap) check_grid(f.S_swap, "S_swap");
}

namespace {

std::vector<int> functional_dual(const Relation& r, int worlds, const std::string& name,
                                 std::vector<std::string>& report) {
  std::vector<int> dual(worlds, -1);
  std::vector<int> count(worlds, 0);
  for (const auto& [s, t] : r) {
    ++count[s];
    dual[s] = t;
  }
  for (int s = 0; s < worlds; ++s) {
    if (count[s] != 1) {
      report.push_back("sub_dual total: " + name + " relates world " + std::to_string(s) + " to " +
                       std::to_string(count[s]) + " worlds");
      dual[s] = -1;
    }
  }
  return dual;
}

}  // namespace

ComplexAlgebra complex_algebra(const Frame& f) {
  validate_frame(f);
  check_shape(f.dim, f.worlds);
  ComplexAlgebra out;
  FiniteBAO& a = out.algebra;
  a.dim = f.dim;
  a.num_atoms = f.worlds;
  a.sig = Signature{true, f.has_sub, f.has_swap, false};
  a.c.assign(f.dim, std::vector<Element>(f.worlds));
  for (int i = 0; i < f.dim; ++i) {
    for (const auto& [s, t] : f.C[i]) a.c[i][t] |= Element::atom(s);
  }
  auto grid = [&](const std::vector<std::vector<Relation>>& g, const char* name) {
    std::vector<std::vector<std::vector<int>>> t(f.dim, std::vector<std::vector<int>>(f.dim));
    for (int i = 0; i < f.dim; ++i) {
      for (int j = 0; j < f.dim; ++j) {
        t[i][j] = functional_dual(g[i][j], f.worlds,
                                  std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                  out.report);
      }
    }
    return t;
  };
  if (f.has_sub) a.sub_dual = grid(f.S_sub, "S_sub");
  if (f.has_swap) a.swap_dual = grid(f.S_swap, "S_swap");
  for (auto& v : validate_bao(a)) out.report.push_back(std::move(v));
  return out;
}

Frame tuple_frame(const Unit& u) {
  validate_unit(u);
  if (u.tuples.empty()) throw PreconditionError("tuple frame of an empty unit");
  const int n = u.dim;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& t : {Transformation::elementary(n, i, j), Transformation::transposition(n, i, j)}) {
        if (auto y = escaping_tuple(u, t)) {
          throw PreconditionError("unit not closed under finite transformations: " + to_string(*y) + " maps to " +
                                  to_string(act(t, *y)));
        }
      }
    }
  }
  const std::vector<Tuple> w(u.tuples.begin(), u.tuples.end());
  auto index = [&](const Tuple& y) {
    return static_cast<int>(std::lower_bound(w.begin(), w.end(), y) - w.begin());
  };
  Frame f;
  f.dim = n;
  f.worlds = static_cast<int>(w.size());
  f.C.assign(n, {});
  f.S_sub.assign(n, std::vector<Relation>(n));
  f.S_swap.assign(n, std::vector<Relation>(n));
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < f.worlds; ++x) {
      for (int y = 0; y < f.worlds; ++y) {
        bool agree = true;
        for (int m = 0; m < n && agree; ++m) agree = m == i || w[x][m] == w[y][m];
        if (agree) f.C[i].emplace_back(x, y);
      }
    }
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < f.worlds; ++x) {
        f.S_sub[i][j].emplace_back(x, index(act(Transformation::elementary(n, i, j), w[x])));
        f.S_swap[i][j].emplace_back(x, index(act(Transformation::transposition(n, i, j), w[x])));
      }
    }
  }
  return f;
}

Frame atom_frame(const FiniteBAO& a) {
  Frame f;
  f.dim = a.dim;
  f.worlds = a.num_atoms;
  f.has_sub = a.sig.has_sub;
  f.has_swap = a.sig.has_swap;
  f.C.assign(a.dim, {});
  for (int i = 0; i < a.dim; ++i) {
    for (int s = 0; s < a.num_atoms; ++s) {
      for (int t = 0; t < a.num_atoms; ++t) {
        if (a.c[i][t].contains(s)) f.C[i].emplace_back(s, t);
      }
    }
  }
  auto grid = [&](const std::vector<std::vector<std::vector<int>>>& dual) {
    std::vector<std::vector<Relation>> g(a.dim, std::vector<Relation>(a.dim));
    for (int i = 0; i < a.dim; ++i) {
      for (int j = 0; j < a.dim; ++j) {
        for (int s = 0; s < a.num_atoms; ++s) {
          if (dual[i][j][s] >= 0) g[i][j].emplace_back(s, dual[i][j][s]);
        }
      }
    }
    return g;
  };
  if (f.has_sub) f.S_sub = grid(a.sub_dual);
  if (f.has_swap) f.S_swap = grid(a.swap_dual);
  return f;
}

Frame zigzag_product(const std::vector<Frame>& frames, const std::vector<std::vector<int>>& carrier) {
  if (frames.empty()) throw PreconditionError("zigzag product of no frames");
  const Frame& first = frames.front();
  for (std::size_t k = 0; k < frames.size(); ++k) {
    validate_frame(frames[k]);
    if (frames[k].dim != first.dim || frames[k].has_sub != first.has_sub || frames[k].has_swap != first.has_swap) {
      throw PreconditionError("factor " + std::to_string(k) + " has a different type");
    }
  }
  for (const auto& s : carrier) {
    if (s.size() != frames.size()) throw PreconditionError("carrier element with the wrong number of components");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] >= frames[k].worlds) throw PreconditionError("carrier component outside its frame");
    }
  }
  for (std::size_t k = 0; k < frames.size(); ++k) {
    std::vector<bool> hit(frames[k].worlds, false);
    for (const auto& s : carrier) hit[s[k]] = true;
    for (int w = 0; w < frames[k].worlds; ++w) {
      if (!hit[w]) {
        throw PreconditionError("zigzag condition fails: projection onto factor " + std::to_string(k) +
                                " misses world " + std::to_string(w));
      }
    }
  }
  // Membership tables for each factor relation.
  auto product_rel = [&](auto get) {
    std::vector<std::vector<std::vector<bool>>> mem(frames.size());
    for (std::size_t k = 0; k < frames.size(); ++k) {
      mem[k].assign(frames[k].worlds, std::vector<bool>(frames[k].worlds, false));
      for (const auto& [s, t] : get(frames[k])) mem[k][s][t] = true;
    }
    Relation r;
    for (std::size_t s = 0; s < carrier.size(); ++s) {
      for (std::size_t t = 0; t < carrier.size(); ++t) {
        bool all = true;
        for (std::size_t k = 0; k < frames.size() && all; ++k) all = mem[k][carrier[s][k]][carrier[t][k]];
        if (all) r.emplace_back(static_cast<int>(s), static_cast<int>(t));
      }
    }
    return r;
  };
  Frame out;
  out.dim = first.dim;
  out.worlds = static_cast<int>(carrier.size());
  out.has_sub = first.has_sub;
  out.has_swap = first.has_swap;
  for (int i = 0; i < out.dim; ++i) {
    out.C.push_back(product_rel([i](const Frame& f) -> const Relation& { return f.C[i]; }));
  }
  if (out.has_sub) {
    out.S_sub.assign(out.dim, std::vector<Relation>(out.dim));
    for (int i = 0; i < out.dim; ++i)
      for (int j = 0; j < out.dim; ++j)
        out.S_sub[i][j] = product_rel([i, j](const Frame& f) -> const Relation& { return f.S_sub[i][j]; });
  }
  if (out.has_swap) {
    out.S_swap.assign(out.dim, std::vector<Relation>(out.dim));
    for (int i = 0; i < out.dim; ++i)
      for (int j = 0; j < out.dim; ++j)
        out.S_swap[i][j] = product_rel([i, j](const Frame& f) -> const Relation& { return f.S_swap[i][j]; });
  }
  return out;
}

namespace {

Element pull(const std::vector<int>& dual, Element x) {
  Element out;
  for (std::size_t p = 0; p < dual.size(); ++p) {
    if (dual[p] >= 0 && x.contains(dual[p])) out |= Element::atom(static_cast<int>(p));
  }
  return out;
}

// Smallest z with x <= pull(dual, z): the forward image of x.
Element push(const std::vector<int>& dual, Element x) {
  Element out;
  for (int p : x.atoms()) out |= Element::atom(dual[p]);
  return out;
}

}  // namespace

std::vector<std::string> check_embedding(const FiniteBAO& source, const FiniteBAO& target,
                                         const std::vector<int>& dual) {
  std::vector<std::string> out;
  if (static_cast<int>(dual.size()) != target.num_atoms) {
    out.push_back("embedding: dual map needs one entry per target atom");
    return out;
  }
  if (source.dim != target.dim) {
    out.push_back("embedding: dimensions differ");
    return out;
  }
  std::vector<bool> hit(source.num_atoms, false);
  for (int v : dual) {
    if (v < 0 || v >= source.num_atoms) {
      out.push_back("embedding: dual map value outside the source atoms");
      return out;
    }
    hit[v] = true;
  }
  for (int r = 0; r < source.num_atoms; ++r) {
    if (!hit[r]) out.push_back("embedding: not injective, source atom " + std::to_string(r) + " has empty image");
  }
  const int n = source.dim;
  for (int r = 0; r < source.num_atoms; ++r) {
    const Element x = Element::atom(r);
    const Element px = pull(dual, x);
    for (int i = 0; i < n; ++i) {
      if (pull(dual, cyl(source, i, x)) != cyl(target, i, px)) {
        out.push_back("embedding: c_" + std::to_string(i) + " not preserved at atom " + std::to_string(r));
      }
      for (int j = 0; j < n; ++j) {
        if (source.sig.has_sub && pull(dual, sub(source, i, j, x)) != sub(target, i, j, px)) {
          out.push_back("embedding: s^" + std::to_string(i) + "_" + std::to_string(j) + " not preserved at atom " +
                        std::to_string(r));
        }
        if (source.sig.has_swap && pull(dual, swap(source, i, j, x)) != swap(target, i, j, px)) {
          out.push_back("embedding: s_" + std::to_string(i) + std::to_string(j) + " not preserved at atom " +
                        std::to_string(r));
        }
      }
    }
  }
  if (source.sig.has_d) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (pull(dual, source.d[i][j]) != diag(target, i, j)) {
          out.push_back("embedding: d_" + std::to_string(i) + std::to_string(j) + " not preserved");
        }
      }
    }
  }
  return out;
}

AmalgamSearch search_superamalgam(const AmalgamProblem& p, int bound, std::uint64_t max_candidates) {
  for (const auto* a : {&p.A0, &p.A1, &p.A2}) {
    if (!check_class(*a, AxiomSystem::TA).empty()) throw PreconditionError("amalgam inputs must satisfy TA");
  }
  for (auto [dual, tgt, name] : {std::tuple{&p.i1, &p.A1, "i1"}, std::tuple{&p.i2, &p.A2, "i2"}}) {
    auto rep = check_embedding(p.A0, *tgt, *dual);
    if (!rep.empty()) throw PreconditionError(std::string(name) + ": " + rep.front());
  }
  const int k1 = p.A1.num_atoms;
  const int k2 = p.A2.num_atoms;
  const int cells = k1 * k2;
  if (cells > 30) throw BudgetError("product of atom sets too large for carrier enumeration");
  if (k1 + k2 > 24) throw BudgetError("interpolation check would enumerate too many element pairs");
  const std::vector<Frame> factors{atom_frame(p.A1), atom_frame(p.A2)};

  AmalgamSearch out;
  const int max_size = std::min(bound, cells);
  for (int size = 1; size <= max_size; ++size) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      if (std::popcount(mask) != size) continue;
      if (++out.candidates_tried > max_candidates) {
        throw BudgetError("superamalgam search exceeded " + std::to_string(max_candidates) + " candidates");
      }
      std::vector<std::vector<int>> carrier;
      for (int c = 0; c < cells; ++c) {
        if ((mask >> c) & 1U) carrier.push_back({c / k2, c % k2});
      }
      Frame z;
      try {
        z = zigzag_product(factors, carrier);
      } catch (const PreconditionError&) {
        continue;  // a projection is not onto
      }
      ComplexAlgebra ca = complex_algebra(z);
      if (!ca.report.empty()) continue;
      const FiniteBAO& D = ca.algebra;
      if (!check_class(D, AxiomSystem::TA).empty()) continue;
      std::vector<int> m1(carrier.size()), m2(carrier.size());
      for (std::size_t s = 0; s < carrier.size(); ++s) {
        m1[s] = carrier[s][0];
        m2[s] = carrier[s][1];
      }
      if (!check_embedding(p.A1, D, m1).empty() || !check_embedding(p.A2, D, m2).empty()) continue;
      bool commute = true;
      for (int r = 0; r < p.A0.num_atoms && commute; ++r) {
        const Element x = Element::atom(r);
        commute = pull(m1, pull(p.i1, x)) == pull(m2, pull(p.i2, x));
      }
      if (!commute) continue;
      // m1(x) <= m2(y) must factor as x <= i1(z), i2(z) <= y; the least
      // candidate z is the forward image of x. Same with the roles swapped.
      bool interpolates = true;
      for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << k1) && interpolates; ++xb) {
        const Element x(xb);
        const Element mx = pull(m1, x);
        const Element zx = push(p.i1, x);
        for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << k2) && interpolates; ++yb) {
          const Element y(yb);
          const Element my = pull(m2, y);
          if (mx.leq(my) && !pull(p.i2, zx).leq(y)) interpolates = false;
          if (my.leq(mx) && !pull(p.i1, push(p.i2, y)).leq(x)) interpolates = false;
        }
      }
      if (!interpolates) continue;
      Superamalgam sa;
      sa.D = D;
      for (const auto& c : carrier) sa.carrier.emplace_back(c[0], c[1]);
      sa.certificate = {"D satisfies TA", "m1 and m2 are embeddings", "m1 i1 = m2 i2",
                        "interpolation holds in both directions"};
      out.found = true;
      out.result = std::move(sa);
      return out;
    }
  }
  return out;
}

}  // namespace relcyl
