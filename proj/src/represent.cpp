#include "relcyl/represent.hpp"

#include <algorithm>
#include <map>

#include "relcyl/error.hpp"

namespace relcyl {

Representation extract(const Play& p) {
  Representation rep;
  rep.num_atoms = p.num_atoms;
  rep.dim = p.dim;
  rep.saturated = p.outcome == Play::Outcome::Saturated;
  rep.pending = p.pending;
  rep.h_atoms.assign(p.num_atoms, {});
  for (const auto& [x, l] : p.M.labels) {
    const int idx = static_cast<int>(rep.edges.size());
    rep.edges.push_back(x);
    for (int at : l.atoms()) {
      if (at < p.num_atoms) rep.h_atoms[at].push_back(idx);
    }
  }
  return rep;
}

std::vector<int> h_of(const Representation& rep, Element x) {
  std::vector<int> out;
  for (int at : x.atoms()) {
    if (at < rep.num_atoms) out.insert(out.end(), rep.h_atoms[at].begin(), rep.h_atoms[at].end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(CheckOutcome::Status s) {
  switch (s) {
    case CheckOutcome::Status::Pass: return "pass";
    case CheckOutcome::Status::Fail: return "fail";
    case CheckOutcome::Status::Conditional: return "conditional";
    case CheckOutcome::Status::Skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) {
    return c.status == CheckOutcome::Status::Pass || c.status == CheckOutcome::Status::Skipped;
  });
}

Unit edge_unit(const Representation& rep) {
  Unit u;
  u.dim = rep.dim;
  int base = 1;
  for (const auto& e : rep.edges) {
    for (int v : e) base = std::max(base, v + 1);
  }
  u.base = base;
  u.tuples.insert(rep.edges.begin(), rep.edges.end());
  return u;
}

bool check_complete(const Representation& rep) {
  std::vector<bool> hit(rep.edges.size(), false);
  for (const auto& img : rep.h_atoms) {
    for (int e : img) hit[e] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

namespace {

using EdgeSet = std::vector<int>;  // sorted edge indices

class Checker {
 public:
  Checker(const FiniteBAO& a, const Representation& rep) : a_(a), rep_(rep) {
    for (std::size_t k = 0; k < rep.edges.size(); ++k) index_[rep.edges[k]] = static_cast<int>(k);
  }

  EdgeSet h(Element x) const { return h_of(rep_, x); }

  EdgeSet all() const {
    EdgeSet e(rep_.edges.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<int>(k);
    return e;
  }

  // {y in E : y agrees off i with some member of X}
  EdgeSet cyl(int i, const EdgeSet& x) const {
    std::map<Tuple, bool> keys;
    for (int e : x) {
      Tuple k = rep_.edges[e];
      k[i] = -1;
      keys[k] = true;
    }
    EdgeSet out;
    for (std::size_t k = 0; k < rep_.edges.size(); ++k) {
      Tuple key = rep_.edges[k];
      key[i] = -1;
      if (keys.count(key)) out.push_back(static_cast<int>(k));
    }
    return out;
  }

  // {y in E : t|y in X}
  EdgeSet pre(const Transformation& t, const EdgeSet& x) const {
    std::vector<bool> in(rep_.edges.size(), false);
    for (int e : x) in[e] = true;
    EdgeSet out;
    for (std::size_t k = 0; k < rep_.edges.size(); ++k) {
      auto it = index_.find(act(t, rep_.edges[k]));
      if (it != index_.end() && in[it->second]) out.push_back(static_cast<int>(k));
    }
    return out;
  }

  EdgeSet diag(int i, int j) const {
    EdgeSet out;
    for (std::size_t k = 0; k < rep_.edges.size(); ++k) {
      if (rep_.edges[k][i] == rep_.edges[k][j]) out.push_back(static_cast<int>(k));
    }
    return out;
  }

  static bool subset(const EdgeSet& x, const EdgeSet& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  }

 private:
  const FiniteBAO& a_;
  const Representation& rep_;
  std::map<Tuple, int> index_;
};

std::string at_str(int at) { return "atom " + std::to_string(at); }

}  // namespace

VerifyReport verify(const FiniteBAO& a, const Representation& rep, NetworkMode mode) {
  VerifyReport r;
  using S = CheckOutcome::Status;
  const int n = a.dim;
  const int k = a.num_atoms;
  if (rep.num_atoms != k || static_cast<int>(rep.h_atoms.size()) != k) {
    r.checks.push_back({"injective", S::Fail, "representation has a different atom count"});
    return r;
  }
  Checker ck(a, rep);

  {  // (1) injectivity on atoms; an empty image collides with h(0)
    CheckOutcome c{"injective", S::Pass, ""};
    for (int p = 0; p < k && c.status == S::Pass; ++p) {
      if (rep.h_atoms[p].empty()) c = {"injective", S::Fail, at_str(p) + " has an empty image, equal to h(0)"};
      for (int q = p + 1; q < k && c.status == S::Pass; ++q) {
        if (rep.h_atoms[p] == rep.h_atoms[q]) {
          c = {"injective", S::Fail, "atoms " + std::to_string(p) + " and " + std::to_string(q) + " have equal images"};
        }
      }
    }
    r.checks.push_back(c);
  }

  {  // (2) Boolean homomorphism
    CheckOutcome c{"boolean homomorphism", S::Pass, ""};
    std::vector<int> owner(rep.edges.size(), -1);
    for (int p = 0; p < k && c.status == S::Pass; ++p) {
      for (int e : rep.h_atoms[p]) {
        if (e < 0 || e >= static_cast<int>(rep.edges.size())) {
          c = {c.name, S::Fail, at_str(p) + " maps to an edge index out of range"};
          break;
        }
        if (owner[e] >= 0) {
          c = {c.name, S::Fail, "edge " + to_string(rep.edges[e]) + " lies in the images of atoms " +
                                    std::to_string(owner[e]) + " and " + std::to_string(p)};
          break;
        }
        owner[e] = p;
      }
    }
    if (c.status == S::Pass && !check_complete(rep)) {
      c = {c.name, S::Fail, "h(1) is not the whole edge set"};
    }
    if (c.status == S::Pass && k <= 8) {
      const EdgeSet all = ck.all();
      const std::uint64_t count = std::uint64_t{1} << k;
      for (std::uint64_t xb = 0; xb < count && c.status == S::Pass; ++xb) {
        const Element x(xb);
        const EdgeSet hx0 = ck.h(x);
        EdgeSet comp;
        std::set_difference(all.begin(), all.end(), hx0.begin(), hx0.end(), std::back_inserter(comp));
        if (ck.h(a.neg(x)) != comp) c = {c.name, S::Fail, "h(-x) differs from E - h(x)"};
        for (std::uint64_t yb = 0; yb < count && c.status == S::Pass; ++yb) {
          const Element y(yb);
          EdgeSet un;
          const EdgeSet hx = ck.h(x), hy = ck.h(y);
          std::set_union(hx.begin(), hx.end(), hy.begin(), hy.end(), std::back_inserter(un));
          if (ck.h(x | y) != un) c = {c.name, S::Fail, "h(x + y) differs from h(x) u h(y)"};
        }
      }
    }
    r.checks.push_back(c);
  }

  {  // (3) diagonals
    CheckOutcome c{"diagonals", S::Pass, ""};
    if (!a.sig.has_d) {
      c.status = S::Skipped;
      c.detail = "no diagonals in the signature";
    }
    for (int i = 0; i < n && c.status == S::Pass; ++i) {
      for (int j = 0; j < n && c.status == S::Pass; ++j) {
        if (ck.h(a.d[i][j]) != ck.diag(i, j)) {
          c = {c.name, S::Fail, "h(d_" + std::to_string(i) + std::to_string(j) + ") differs from D_" +
                                    std::to_string(i) + std::to_string(j)};
        }
      }
    }
    r.checks.push_back(c);
  }

  {  // (4) cylindrifications
    CheckOutcome c{"cylindrifications", S::Pass, ""};
    std::string unequal;
    for (int i = 0; i < n && c.status != S::Fail; ++i) {
      for (int p = 0; p < k && c.status != S::Fail; ++p) {
        const EdgeSet lhs = ck.h(cyl(a, i, Element::atom(p)));
        const EdgeSet rhs = ck.cyl(i, rep.h_atoms[p]);
        if (!Checker::subset(rhs, lhs)) {
          c = {c.name, S::Fail, "C_" + std::to_string(i) + " h(" + at_str(p) + ") not inside h(c_" +
                                    std::to_string(i) + " " + at_str(p) + ")"};
        } else if (lhs != rhs && unequal.empty()) {
          unequal = "h(c_" + std::to_string(i) + " " + at_str(p) + ") strictly contains C_" + std::to_string(i) +
                    " h(" + at_str(p) + ")";
        }
      }
    }
    if (c.status != S::Fail && !unequal.empty()) {
      c.status = rep.saturated ? S::Fail : S::Conditional;
      c.detail = unequal + (rep.saturated ? "" : "; play unsaturated with " + std::to_string(rep.pending) +
                                                     " pending obligations");
    } else if (c.status == S::Pass && !rep.saturated) {
      c = {c.name, S::Conditional,
           "inclusion holds; equality not claimed for an unsaturated play with " + std::to_string(rep.pending) +
               " pending obligations"};
    }
    r.checks.push_back(c);
  }

  {  // (5) substitutions and transpositions, on atoms
    CheckOutcome c{"substitutions", S::Pass, ""};
    const bool subs = a.sig.can_sub();
    const bool swaps = mode == NetworkMode::TEA && a.sig.has_swap;
    if (!subs && !swaps) {
      c.status = S::Skipped;
      c.detail = "no substitution operators";
    }
    for (int i = 0; i < n && c.status == S::Pass; ++i) {
      for (int j = 0; j < n && c.status == S::Pass; ++j) {
        for (int p = 0; p < k && c.status == S::Pass; ++p) {
          const Element x = Element::atom(p);
          if (subs && ck.h(sub(a, i, j, x)) != ck.pre(Transformation::elementary(n, i, j), rep.h_atoms[p])) {
            c = {c.name, S::Fail, "h(s^" + std::to_string(i) + "_" + std::to_string(j) + " " + at_str(p) +
                                      ") differs from S_[" + std::to_string(i) + "|" + std::to_string(j) + "]"};
          }
          if (swaps && ck.h(swap(a, i, j, x)) != ck.pre(Transformation::transposition(n, i, j), rep.h_atoms[p])) {
            c = {c.name, S::Fail, "h(s_" + std::to_string(i) + std::to_string(j) + " " + at_str(p) +
                                      ") differs from S_[" + std::to_string(i) + "," + std::to_string(j) + "]"};
          }
        }
      }
    }
    r.checks.push_back(c);
  }

  {  // (6) unit classification
    const char* want = mode == NetworkMode::PTA ? "is_D" : "is_Dpe";
    CheckOutcome c{"unit classification", S::Pass, want};
    if (rep.edges.empty()) {
      c = {c.name, S::Fail, "empty edge set"};
    } else {
      const UnitFlags f = classify_unit(edge_unit(rep));
      const bool ok = mode == NetworkMode::PTA ? f.is_D : f.is_Dpe;
      if (!ok) c = {c.name, S::Fail, std::string("edge set is not ") + want};
    }
    r.checks.push_back(c);
  }

  std::uint64_t nonempty = 0;
  for (const auto& img : rep.h_atoms) nonempty += img.empty() ? 0 : 1;
  r.image_size = nonempty >= 64 ? 0 : (std::uint64_t{1} << nonempty);
  return r;
}

}  // namespace relcyl
