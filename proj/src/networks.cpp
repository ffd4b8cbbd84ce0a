#include "relcyl/networks.hpp"

#include <algorithm>
#include <deque>

#include "relcyl/error.hpp"

namespace relcyl {

std::string to_string(NetworkMode m) { return m == NetworkMode::PTA ? "PTA" : "TEA"; }

NetworkMode parse_network_mode(const std::string& s) {
  if (s == "PTA") return NetworkMode::PTA;
  if (s == "TEA") return NetworkMode::TEA;
  throw FormatError("unknown mode '" + s + "' (expected PTA or TEA)");
}

namespace {

std::string labelled(const Tuple& x) { return "edge " + to_string(x); }

}  // namespace

std::vector<std::string> check_network(const FiniteBAO& a, const Network& net, NetworkMode mode) {
  std::vector<std::string> out;
  const int n = a.dim;
  const Element top = a.top();
  if (!a.sig.has_d) {
    out.push_back("signature: networks need diagonal elements");
    return out;
  }
  if (mode == NetworkMode::TEA && !a.sig.has_swap) {
    out.push_back("signature: TEA networks need transpositions");
    return out;
  }
  for (const auto& [x, l] : net.labels) {
    if (static_cast<int>(x.size()) != n) {
      out.push_back("shape: " + labelled(x) + " has the wrong length");
      return out;
    }
    for (int v : x) {
      if (!net.nodes.count(v)) out.push_back("nodes: " + labelled(x) + " uses unknown node " + std::to_string(v));
    }
    if (!l.leq(top)) out.push_back("label range: " + labelled(x) + " names atoms outside the algebra");
  }
  if (!out.empty()) return out;

  for (const auto& [x, l] : net.labels) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Tuple s = act(Transformation::elementary(n, i, j), x);
        if (!net.labels.count(s)) {
          out.push_back("domain closure: [" + std::to_string(i) + "|" + std::to_string(j) + "]|" +
                        to_string(x) + " = " + to_string(s) + " is not an edge");
        }
        if (mode == NetworkMode::TEA && i < j) {
          const Tuple w = act(Transformation::transposition(n, i, j), x);
          if (!net.labels.count(w)) {
            out.push_back("domain closure: [" + std::to_string(i) + "," + std::to_string(j) + "]|" +
                          to_string(x) + " = " + to_string(w) + " is not an edge");
          }
        }
      }
    }
  }

  for (const auto& [x, l] : net.labels) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const bool below = l.leq(a.d[i][j]);
        const bool equal = x[i] == x[j];
        if (below != equal) {
          out.push_back("(a): " + labelled(x) + (below ? " has label <= d_" : " has label not <= d_") +
                        std::to_string(i) + std::to_string(j) + (equal ? " with" : " without") +
                        " x_" + std::to_string(i) + " = x_" + std::to_string(j));
        }
      }
    }
  }

  // (b): group edges that agree off i.
  for (int i = 0; i < n; ++i) {
    std::map<Tuple, std::vector<std::map<Tuple, Element>::const_iterator>> groups;
    for (auto it = net.labels.begin(); it != net.labels.end(); ++it) {
      Tuple key = it->first;
      key[i] = -1;
      groups[key].push_back(it);
    }
    for (const auto& [key, members] : groups) {
      for (const auto& p : members) {
        for (const auto& q : members) {
          if ((p->second & cyl(a, i, q->second)).empty()) {
            out.push_back("(b): " + labelled(p->first) + " and " + labelled(q->first) + " at index " +
                          std::to_string(i) + ": N(x) . c_" + std::to_string(i) + " N(y) = 0");
          }
        }
      }
    }
  }

  if (mode == NetworkMode::TEA) {
    for (const auto& [x, l] : net.labels) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          auto it = net.labels.find(act(Transformation::transposition(n, i, j), x));
          if (it == net.labels.end()) continue;  // reported as a closure failure
          if (it->second != swap(a, i, j, l)) {
            out.push_back("(c): N([" + std::to_string(i) + "," + std::to_string(j) + "]|" + to_string(x) +
                          ") != s_" + std::to_string(i) + std::to_string(j) + " N(" + to_string(x) + ")");
          }
        }
      }
    }
  }
  return out;
}

bool matches_diagonals(const FiniteBAO& a, Element atom, const Tuple& x) {
  if (!a.sig.has_d) throw SignatureError("networks need diagonal elements");
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      if ((x[i] == x[j]) != atom.leq(a.d[i][j])) return false;
    }
  }
  return true;
}

namespace {

std::vector<int> range_of(const Tuple& x) {
  std::vector<int> r(x.begin(), x.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

int distinct(const Tuple& y) { return static_cast<int>(range_of(y).size()); }

void require_atom_and_pattern(const FiniteBAO& a, Element atom, const Tuple& x) {
  if (static_cast<int>(x.size()) != a.dim) throw PreconditionError("tuple length differs from the dimension");
  if (!atom.is_atom() || !atom.leq(a.top())) throw PreconditionError("network constructors need an atom");
  if (!matches_diagonals(a, atom, x)) {
    throw PreconditionError("x_i = x_j must hold exactly when the atom is below d_ij, fails for " + to_string(x));
  }
}

Element t_label(const FiniteBAO& a, Element atom, const Tuple& x, const Tuple& y) {
  const SubstWord w = substitution_word(reaching_map(x, y));
  const Element l = apply_t_word(a, w, atom);
  if (!l.is_atom()) {
    throw InvariantError("t-word " + to_string(w) + " does not send the atom to an atom (tuple " +
                         to_string(y) + ")");
  }
  return l;
}

}  // namespace

std::vector<Tuple> all_tuples_over(const Tuple& x) {
  const std::vector<int> r = range_of(x);
  const int n = static_cast<int>(x.size());
  std::vector<Tuple> out;
  std::vector<int> digit(n, 0);
  while (true) {
    Tuple y(n);
    for (int k = 0; k < n; ++k) y[k] = r[digit[k]];
    out.push_back(std::move(y));
    int k = n - 1;
    while (k >= 0 && ++digit[k] == static_cast<int>(r.size())) digit[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

std::vector<Tuple> non_surjective_tuples(const Tuple& x) {
  std::vector<Tuple> out;
  for (auto& y : all_tuples_over(x)) {
    if (distinct(y) < static_cast<int>(x.size())) out.push_back(std::move(y));
  }
  return out;
}

Transformation reaching_map(const Tuple& x, const Tuple& y) {
  std::vector<int> m(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) {
    auto it = std::find(x.begin(), x.end(), y[k]);
    if (it == x.end()) throw PreconditionError("tuple " + to_string(y) + " leaves the range of " + to_string(x));
    m[k] = static_cast<int>(it - x.begin());
  }
  return Transformation(std::move(m));
}

Network build_PT(const FiniteBAO& a, Element atom, const Tuple& x) {
  require_atom_and_pattern(a, atom, x);
  Network net;
  for (int v : x) net.nodes.insert(v);
  for (const auto& y : non_surjective_tuples(x)) net.labels[y] = t_label(a, atom, x, y);
  return net;
}

Network build_T(const FiniteBAO& a, Element atom, const Tuple& x) {
  require_atom_and_pattern(a, atom, x);
  if (!a.sig.has_swap) throw SignatureError("transposition networks need transpositions");
  const int n = a.dim;
  Network net;
  for (int v : x) net.nodes.insert(v);

  Tuple own = x;
  std::sort(own.begin(), own.end());
  std::set<Tuple> seen_classes;
  for (const auto& y : all_tuples_over(x)) {
    Tuple key = y;
    std::sort(key.begin(), key.end());
    if (!seen_classes.insert(key).second) continue;
    const Tuple rep = key == own ? x : key;
    const Element l = key == own ? atom : t_label(a, atom, x, rep);
    // Spread over the class through transpositions.
    std::deque<Tuple> todo{rep};
    net.labels[rep] = l;
    while (!todo.empty()) {
      const Tuple w = todo.front();
      todo.pop_front();
      const Element lw = net.labels.at(w);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const Tuple z = act(Transformation::transposition(n, i, j), w);
          const Element lz = swap(a, i, j, lw);
          auto [it, fresh] = net.labels.emplace(z, lz);
          if (fresh) {
            todo.push_back(z);
          } else if (it->second != lz) {
            throw InvariantError("transposition network labels disagree at " + to_string(z));
          }
        }
      }
    }
  }
  return net;
}

}  // namespace relcyl
