#include "relcyl/axioms.hpp"

#include <algorithm>
#include <thread>

#include "relcyl/error.hpp"

namespace relcyl {

std::string to_string(AxiomSystem s) {
  switch (s) {
    case AxiomSystem::PTA: return "PTA";
    case AxiomSystem::TA: return "TA";
    case AxiomSystem::SA: return "SA";
    case AxiomSystem::TEA: return "TEA";
  }
  return "?";
}

AxiomSystem parse_axiom_system(const std::string& name) {
  if (name == "PTA") return AxiomSystem::PTA;
  if (name == "TA") return AxiomSystem::TA;
  if (name == "SA") return AxiomSystem::SA;
  if (name == "TEA") return AxiomSystem::TEA;
  throw FormatError("unknown class '" + name + "' (expected PTA, TA, SA or TEA)");
}

Signature required_signature(AxiomSystem s) {
  switch (s) {
    case AxiomSystem::PTA: return Signature::pta();
    case AxiomSystem::TA: return Signature::ta();
    case AxiomSystem::SA: return Signature::sa();
    case AxiomSystem::TEA: return Signature::tea();
  }
  return Signature::tea();
}

namespace {

using namespace term;

struct Builder {
  AxiomSystem sys;
  int n;
  std::vector<AxiomInstance> out;

  // s^i_j, written out in PTA.
  TermPtr S(int i, int j, TermPtr t) const {
    if (sys != AxiomSystem::PTA) return s(i, j, std::move(t));
    if (i == j) return t;
    return c(i, meet(d(i, j), std::move(t)));
  }

  void add(const std::string& label, std::vector<int> idx, TermPtr l, TermPtr r,
           Equation::Kind k = Equation::Kind::Eq) {
    out.push_back({label, std::move(idx), Equation{std::move(l), std::move(r), k}});
  }

  template <typename F>
  void each1(F f) const {
    for (int i = 0; i < n; ++i) f(i);
  }
  template <typename F>
  void each2(F f) const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f(i, j);
  }
  template <typename F>
  void each3(F f) const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) f(i, j, k);
  }
  template <typename F>
  void each4(F f) const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int m = 0; m < n; ++m) f(i, j, k, m);
  }

  // Shared by the Fe/F/S families: x <= c_i x and additivity.
  void closure(const std::string& p) {
    const auto x = var(0), y = var(1);
    each1([&](int i) { add(p + "1", {i}, x, c(i, x), Equation::Kind::Leq); });
    each1([&](int i) { add(p + "2", {i}, c(i, join(x, y)), join(c(i, x), c(i, y))); });
  }

  void mgr(const std::string& label) {
    const auto x = var(0);
    // indices reported as (i, j, m, k)
    each4([&](int i, int j, int m, int k) {
      if (i == j || m == i || m == j || k == i || k == j || k == m) return;
      TermPtr l = S(k, i, S(i, j, S(j, m, S(m, k, c(k, x)))));
      TermPtr r = S(k, m, S(m, i, S(i, j, S(j, k, c(k, x)))));
      add(label, {i, j, m, k}, l, r);
    });
  }

  void pta() {
    const auto x = var(0), y = var(1);
    each1([&](int i) { add("C0", {i}, c(i, zero()), zero()); });
    each1([&](int i) { add("C1", {i}, x, c(i, x), Equation::Kind::Leq); });
    each1([&](int i) { add("C2", {i}, c(i, join(x, y)), join(c(i, x), c(i, y))); });
    each1([&](int i) { add("C3", {i}, c(i, neg(c(i, x))), neg(c(i, x))); });
    each3([&](int i, int j, int k) {
      if (k == i || k == j) return;
      add("C4*", {i, j, k}, meet(c(j, c(i, x)), d(j, k)), c(i, c(j, x)), Equation::Kind::Leq);
    });
    each1([&](int i) { add("C5", {i}, d(i, i), one()); });
    each3([&](int i, int j, int k) {
      if (k == i || k == j) return;
      add("C6", {i, j, k}, d(i, j), c(k, meet(d(i, k), d(k, j))));
    });
    each2([&](int i, int j) {
      if (i == j) return;
      add("C7", {i, j}, meet(d(i, j), c(i, meet(d(i, j), x))), x, Equation::Kind::Leq);
    });
    mgr("MGR");
  }

  // The TEA list; with_d false gives TA's F0-F9.
  void polyadic(bool with_d) {
    const std::string p = with_d ? "Fe" : "F";
    const auto x = var(0), y = var(1);
    each1([&](int i) { add(p + "0", {i}, s(i, i, x), x); });
    each1([&](int i) { add(p + "0", {i}, swap(i, i, x), x); });
    if (with_d) each1([&](int i) { add(p + "0", {i}, d(i, i), one()); });
    each2([&](int i, int j) { add(p + "0", {i, j}, swap(i, j, x), swap(j, i, x)); });
    closure(p);
    each2([&](int i, int j) { add(p + "3", {i, j}, s(i, j, c(i, x)), c(i, x)); });
    each2([&](int i, int j) {
      if (i != j) add(p + "4", {i, j}, c(i, s(i, j, x)), s(i, j, x));
    });
    each4([&](int i, int j, int k, int m) {
      if (i == k || i == m || j == k || j == m) return;
      add(p + "5*", {i, j, k, m}, s(i, j, s(k, m, x)), s(k, m, s(i, j, x)));
    });
    each2([&](int i, int j) {
      add(p + "6", {i, j}, s(i, j, meet(x, y)), meet(s(i, j, x), s(i, j, y)));
      add(p + "6", {i, j}, s(i, j, neg(x)), neg(s(i, j, x)));
    });
    each2([&](int i, int j) {
      add(p + "6", {i, j}, swap(i, j, meet(x, y)), meet(swap(i, j, x), swap(i, j, y)));
      add(p + "6", {i, j}, swap(i, j, neg(x)), neg(swap(i, j, x)));
    });
    each2([&](int i, int j) { add(p + "7", {i, j}, swap(i, j, swap(i, j, x)), x); });
    each3([&](int i, int j, int k) {
      if (i == j || j == k || i == k) return;
      add(p + "8", {i, j, k}, swap(i, j, swap(i, k, x)), swap(j, k, swap(i, j, x)));
    });
    each2([&](int i, int j) { add(p + "9", {i, j}, swap(i, j, s(i, j, x)), s(j, i, x)); });
    if (!with_d) return;
    each2([&](int i, int j) { add(p + "10", {i, j}, s(i, j, d(i, j)), one()); });
    each2([&](int i, int j) {
      add(p + "11", {i, j}, meet(x, d(i, j)), s(i, j, x), Equation::Kind::Leq);
    });
  }

  void sa(bool s7_alt) {
    const auto x = var(0), y = var(1);
    each1([&](int i) { add("S0", {i}, s(i, i, x), x); });
    closure("S");
    each2([&](int i, int j) { add("S3", {i, j}, s(i, j, c(i, x)), c(i, x)); });
    each2([&](int i, int j) {
      if (i != j) add("S4", {i, j}, c(i, s(i, j, x)), s(i, j, x));
    });
    each4([&](int i, int j, int k, int m) {
      if (i == k || i == m || j == k || j == m) return;
      add("S5*", {i, j, k, m}, s(i, j, s(k, m, x)), s(k, m, s(i, j, x)));
    });
    each2([&](int i, int j) {
      add("S6", {i, j}, s(i, j, meet(x, y)), meet(s(i, j, x), s(i, j, y)));
      add("S6", {i, j}, s(i, j, neg(x)), neg(s(i, j, x)));
    });
    each3([&](int i, int j, int k) {
      if (s7_alt) {
        add("S7", {i, j, k}, s(j, k, s(i, k, x)), s(i, k, s(j, k, x)));
      } else {
        add("S7", {i, j, k}, s(k, k, s(j, k, x)), s(k, i, s(j, i, x)));
      }
    });
    mgr("S8");
  }
};

}  // namespace

std::vector<AxiomInstance> axiom_instances(AxiomSystem s, int n, const AxiomOptions& opt) {
  Builder b{s, n, {}};
  switch (s) {
    case AxiomSystem::PTA: b.pta(); break;
    case AxiomSystem::TEA: b.polyadic(true); break;
    case AxiomSystem::TA: b.polyadic(false); break;
    case AxiomSystem::SA: b.sa(opt.s7_alt); break;
  }
  return std::move(b.out);
}

ViolationReport check_class(const FiniteBAO& a, AxiomSystem s, const AxiomOptions& opt) {
  const Signature need = required_signature(s);
  if (!need.subset_of(a.sig)) {
    throw SignatureError(to_string(s) + " needs signature " + to_string(need) + ", algebra has " +
                         to_string(a.sig));
  }
  const auto inst = axiom_instances(s, a.dim, opt);
  std::vector<CheckResult> results(inst.size());
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(inst.size())));
  if (jobs == 1) {
    for (std::size_t k = 0; k < inst.size(); ++k) results[k] = check_equation(a, inst[k].equation, CheckMode::Auto);
  } else {
    // Strided split; results land in their instance slot so the order is fixed.
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < inst.size(); k += jobs) {
            results[k] = check_equation(a, inst[k].equation, CheckMode::Auto);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  ViolationReport report;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    if (results[k].holds) continue;
    report.push_back({inst[k].label, inst[k].indices, to_string(inst[k].equation),
                      results[k].counterexample, results[k].lhs, results[k].rhs});
  }
  return report;
}

namespace {

std::string set_str(Element e) {
  std::string s = "{";
  bool first = true;
  for (int at : e.atoms()) {
    s += (first ? "" : ",") + std::to_string(at);
    first = false;
  }
  return s + "}";
}

}  // namespace

std::vector<std::string> soatom_report(const FiniteBAO& a) {
  if (!a.sig.has_d) throw SignatureError("soatom checks need diagonals");
  if (a.num_atoms > limits().max_atoms) throw BudgetError("too many atoms to enumerate every element");
  std::vector<std::string> out;
  const int n = a.dim;
  const std::uint64_t count = std::uint64_t{1} << a.num_atoms;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const Element x(bits);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Element t = t_op(a, i, j, x);
        if (!t.leq(a.d[i][j])) {
          out.push_back("soatom (i): t^" + std::to_string(i) + "_" + std::to_string(j) + " " + set_str(x) +
                        " not below d_" + std::to_string(i) + std::to_string(j));
        }
        if (cyl(a, i, t) != cyl(a, i, x)) {
          out.push_back("soatom (iv): c_" + std::to_string(i) + " t^" + std::to_string(i) + "_" +
                        std::to_string(j) + " " + set_str(x) + " differs from c_" + std::to_string(i) + " x");
        }
        if (x.leq(a.d[i][j])) {
          for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const Element bound = a.d[i][j] & a.d[i][k] & a.d[j][k];
            if (!t_op(a, k, i, x).leq(bound)) {
              out.push_back("soatom (ii): x=" + set_str(x) + " <= d_" + std::to_string(i) + std::to_string(j) +
                            " but t^" + std::to_string(k) + "_" + std::to_string(i) + " x exceeds the bound");
            }
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < a.num_atoms; ++p) {
      for (int q = 0; q < a.num_atoms; ++q) {
        const bool below = Element::atom(p).leq(cyl(a, i, Element::atom(q)));
        const bool same = cyl(a, i, Element::atom(p)) == cyl(a, i, Element::atom(q));
        if (below != same) {
          out.push_back("soatom (iii): atoms " + std::to_string(p) + "," + std::to_string(q) + " at index " +
                        std::to_string(i));
        }
      }
    }
  }
  return out;
}

std::vector<std::string> lesa_report(const FiniteBAO& a) {
  if (!a.sig.has_d || !a.sig.has_swap) throw SignatureError("lesa check needs transpositions and diagonals");
  std::vector<std::string> out;
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      for (int at : a.d[i][j].atoms()) {
        if (swap(a, i, j, Element::atom(at)) != Element::atom(at)) {
          out.push_back("lesa: atom " + std::to_string(at) + " <= d_" + std::to_string(i) + std::to_string(j) +
                        " moved by s_" + std::to_string(i) + std::to_string(j));
        }
      }
    }
  }
  return out;
}

}  // namespace relcyl
