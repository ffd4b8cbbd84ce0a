#include "relcyl/bao.hpp"

#include <sstream>

#include "relcyl/error.hpp"

namespace relcyl {
namespace {

void check_index(const FiniteBAO& a, int i) {
  if (i < 0 || i >= a.dim) {
    throw IndexError("index " + std::to_string(i) + " ≥ dimension " + std::to_string(a.dim));
  }
}

Element preimage(const std::vector<int>& dual, Element x) {
  Element out;
  for (std::size_t at = 0; at < dual.size(); ++at) {
    if (dual[at] >= 0 && x.contains(dual[at])) out |= Element::atom(static_cast<int>(at));
  }
  return out;
}

std::string entry(const char* table, int i, int j) {
  std::ostringstream os;
  os << table << '[' << i << "][" << j << ']';
  return os.str();
}

}  // namespace

std::string to_string(const Signature& s) {
  if (s == Signature::tea()) return "TEA";
  if (s == Signature::ta()) return "TA";
  if (s == Signature::sa()) return "SA";
  if (s == Signature::pta()) return "PTA";
  if (s == Signature::pt()) return "PT";
  if (s == Signature::df()) return "DF";
  std::ostringstream os;
  os << "{c" << (s.has_sub ? ",sub" : "") << (s.has_swap ? ",swap" : "") << (s.has_d ? ",d" : "")
     << '}';
  return os.str();
}

void check_shape(int dim, int num_atoms) {
  if (dim < 2) throw FormatError("dimension must be at least 2, got " + std::to_string(dim));
  if (dim > limits().max_dim) {
    throw FormatError("dimension " + std::to_string(dim) + " exceeds the configured maximum " +
                      std::to_string(limits().max_dim));
  }
  if (num_atoms < 1) throw FormatError("atom count must be at least 1");
  if (num_atoms > limits().max_atoms || num_atoms > kAtomCeiling) {
    throw FormatError("atom count " + std::to_string(num_atoms) +
                      " exceeds the configured maximum " + std::to_string(limits().max_atoms));
  }
}

Element cyl(const FiniteBAO& a, int i, Element x) {
  check_index(a, i);
  Element out;
  for (int at : x.atoms()) out |= a.c[i][at];
  return out;
}

Element diag(const FiniteBAO& a, int i, int j) {
  check_index(a, i);
  check_index(a, j);
  if (!a.sig.has_d) throw SignatureError("algebra has no diagonal elements");
  return a.d[i][j];
}

Element sub(const FiniteBAO& a, int i, int j, Element x) {
  check_index(a, i);
  check_index(a, j);
  if (a.sig.has_sub) return preimage(a.sub_dual[i][j], x);
  if (!a.sig.has_d) throw SignatureError("algebra has neither substitutions nor diagonals");
  if (i == j) return x;
  return cyl(a, i, a.d[i][j] & x);
}

Element swap(const FiniteBAO& a, int i, int j, Element x) {
  check_index(a, i);
  check_index(a, j);
  if (!a.sig.has_swap) throw SignatureError("algebra has no transpositions");
  return preimage(a.swap_dual[i][j], x);
}

Element eval_op(const FiniteBAO& a, OpKind op, int i, int j, Element x, Element y) {
  switch (op) {
    case OpKind::Cyl: return cyl(a, i, x);
    case OpKind::Sub: return sub(a, i, j, x);
    case OpKind::Swap: return swap(a, i, j, x);
    case OpKind::Diag: return diag(a, i, j);
    case OpKind::Join: return x | y;
    case OpKind::Meet: return x & y;
    case OpKind::Neg: return a.neg(x);
    case OpKind::Zero: return Element{};
    case OpKind::One: return a.top();
  }
  return {};
}

std::vector<std::string> validate_bao(const FiniteBAO& a) {
  std::vector<std::string> report;
  const int n = a.dim;
  const int k = a.num_atoms;
  if (n < 2) report.push_back("dimension: must be at least 2");
  if (k < 1 || k > kAtomCeiling) report.push_back("atoms: count out of range");
  if (!report.empty()) return report;
  const Element top = a.top();

  if (static_cast<int>(a.c.size()) != n) {
    report.push_back("c: expected one table per index");
    return report;
  }
  for (int i = 0; i < n; ++i) {
    const std::string ci = "c_" + std::to_string(i);
    if (static_cast<int>(a.c[i].size()) != k) {
      report.push_back(ci + " table: expected one entry per atom");
      continue;
    }
    for (int at = 0; at < k; ++at) {
      if (!a.c[i][at].leq(top)) {
        report.push_back(ci + " range: c_table[" + std::to_string(i) + "][" + std::to_string(at) +
                         "] names atoms outside the algebra");
      }
      if (!a.c[i][at].contains(at)) {
        report.push_back(ci + " increasing: atom " + std::to_string(at) + " not in c_table[" +
                         std::to_string(i) + "][" + std::to_string(at) + "]");
      }
    }
    for (int x = 0; x < k; ++x) {
      for (int y : (a.c[i][x] & top).atoms()) {
        if (!a.c[i][y].contains(x)) {
          report.push_back(ci + " symmetric: atom " + std::to_string(y) + " in c_table[" +
                           std::to_string(i) + "][" + std::to_string(x) + "] but not conversely");
        }
        if (!(a.c[i][y] & top).leq(a.c[i][x])) {
          report.push_back(ci + " transitive: c_table[" + std::to_string(i) + "][" +
                           std::to_string(y) + "] not contained in c_table[" + std::to_string(i) +
                           "][" + std::to_string(x) + "]");
        }
      }
    }
  }

  auto check_map_shape = [&](const char* name, const auto& table) {
    if (static_cast<int>(table.size()) != n) return false;
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != n) return false;
      for (const auto& m : row) {
        if (static_cast<int>(m.size()) != k) return false;
      }
    }
    (void)name;
    return true;
  };

  if (a.sig.has_sub) {
    if (!check_map_shape("sub_dual", a.sub_dual)) {
      report.push_back("sub_dual shape: expected n x n maps of length atoms");
    } else {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto& m = a.sub_dual[i][j];
          for (int at = 0; at < k; ++at) {
            if (m[at] < 0 || m[at] >= k) {
              report.push_back("sub_dual total: " + entry("sub_dual", i, j) + " has no valid image for atom " +
                               std::to_string(at));
            } else if (i == j && m[at] != at) {
              report.push_back("sub_dual identity: " + entry("sub_dual", i, i) + " moves atom " +
                               std::to_string(at));
            }
          }
        }
      }
    }
  } else if (!a.sub_dual.empty()) {
    report.push_back("signature: sub_dual present but signature has no substitutions");
  }

  if (a.sig.has_swap) {
    if (!check_map_shape("swap_dual", a.swap_dual)) {
      report.push_back("swap_dual shape: expected n x n maps of length atoms");
    } else {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const auto& m = a.swap_dual[i][j];
          bool total = true;
          for (int at = 0; at < k; ++at) {
            if (m[at] < 0 || m[at] >= k) {
              report.push_back("swap_dual total: " + entry("swap_dual", i, j) +
                               " has no valid image for atom " + std::to_string(at));
              total = false;
            }
          }
          if (!total) continue;
          if (m != a.swap_dual[j][i]) {
            report.push_back("swap_dual symmetric: " + entry("swap_dual", i, j) + " differs from " +
                             entry("swap_dual", j, i));
          }
          for (int at = 0; at < k; ++at) {
            if (m[m[at]] != at) {
              report.push_back("swap_dual involution: " + entry("swap_dual", i, j) +
                               " does not return atom " + std::to_string(at));
              break;
            }
          }
          if (i == j) {
            for (int at = 0; at < k; ++at) {
              if (m[at] != at) {
                report.push_back("swap_dual identity: " + entry("swap_dual", i, i) +
                                 " moves atom " + std::to_string(at));
                break;
              }
            }
          }
        }
      }
    }
  } else if (!a.swap_dual.empty()) {
    report.push_back("signature: swap_dual present but signature has no transpositions");
  }

  if (a.sig.has_d) {
    if (static_cast<int>(a.d.size()) != n) {
      report.push_back("d shape: expected n x n elements");
    } else {
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a.d[i].size()) != n) {
          report.push_back("d shape: expected n x n elements");
          break;
        }
        for (int j = 0; j < n; ++j) {
          if (!a.d[i][j].leq(top)) report.push_back("d range: " + entry("d", i, j) + " names atoms outside the algebra");
        }
        if (a.d[i][i] != top) report.push_back("d_ii full: " + entry("d", i, i) + " is not the unit");
      }
    }
  } else if (!a.d.empty()) {
    report.push_back("signature: d present but signature has no diagonals");
  }
  return report;
}

FiniteBAO reduct(const FiniteBAO& a, const Signature& target) {
  if (!target.subset_of(a.sig)) {
    throw SignatureError("reduct to " + to_string(target) + " requests operators absent from " +
                         to_string(a.sig));
  }
  FiniteBAO r = a;
  r.sig = target;
  if (!target.has_sub) r.sub_dual.clear();
  if (!target.has_swap) r.swap_dual.clear();
  if (!target.has_d) r.d.clear();
  return r;
}

FiniteBAO define_diagonals(const FiniteBAO& a) {
  if (!a.sig.has_sub) throw SignatureError("define_diagonals needs substitution operators");
  if (a.num_atoms > limits().max_atoms) {
    throw BudgetError("define_diagonals enumerates 2^" + std::to_string(a.num_atoms) +
                      " elements, above the configured cap");
  }
  FiniteBAO r = a;
  r.sig.has_d = true;
  const Element top = a.top();
  const std::uint64_t count = std::uint64_t{1} << a.num_atoms;
  r.d.assign(a.dim, std::vector<Element>(a.dim, top));
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      Element meet = top;
      for (std::uint64_t bits = 0; bits < count; ++bits) {
        const Element y(bits);
        if (sub(a, i, j, y) == top) meet &= y;
      }
      r.d[i][j] = meet;
    }
  }
  return r;
}

FiniteBAO canonical_extension(const FiniteBAO& a) { return a; }

FiniteBAO trivial_algebra(int dim, const Signature& sig) {
  check_shape(dim, 1);
  FiniteBAO a;
  a.dim = dim;
  a.num_atoms = 1;
  a.sig = sig;
  a.c.assign(dim, std::vector<Element>(1, Element::atom(0)));
  if (sig.has_sub) a.sub_dual.assign(dim, std::vector<std::vector<int>>(dim, std::vector<int>{0}));
  if (sig.has_swap) a.swap_dual.assign(dim, std::vector<std::vector<int>>(dim, std::vector<int>{0}));
  if (sig.has_d) a.d.assign(dim, std::vector<Element>(dim, Element::atom(0)));
  return a;
}

}  // namespace relcyl
