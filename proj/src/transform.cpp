#include "relcyl/transform.hpp"

#include <algorithm>
#include <sstream>

#include "relcyl/error.hpp"

namespace relcyl {

Transformation::Transformation(std::vector<int> map) : map_(std::move(map)) {
  const int n = size();
  for (int v : map_) {
    if (v < 0 || v >= n) {
      throw IndexError("transformation value " + std::to_string(v) + " outside 0.." +
                       std::to_string(n - 1));
    }
  }
}

Transformation Transformation::identity(int n) {
  std::vector<int> m(n);
  for (int k = 0; k < n; ++k) m[k] = k;
  return Transformation(std::move(m));
}

Transformation Transformation::elementary(int n, int i, int j) {
  auto m = identity(n).map_;
  m.at(i) = j;
  return Transformation(std::move(m));
}

Transformation Transformation::transposition(int n, int i, int j) {
  auto m = identity(n).map_;
  m.at(i) = j;
  m.at(j) = i;
  return Transformation(std::move(m));
}

bool Transformation::is_permutation() const {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool Transformation::is_identity() const { return *this == identity(size()); }

Transformation Transformation::inverse() const {
  if (!is_permutation()) throw PreconditionError("only permutations have inverses");
  std::vector<int> inv(map_.size());
  for (int k = 0; k < size(); ++k) inv[map_[k]] = k;
  return Transformation(std::move(inv));
}

Transformation Transformation::then(const Transformation& l) const {
  if (l.size() != size()) throw PreconditionError("composing transformations of different sizes");
  std::vector<int> m(map_.size());
  for (int k = 0; k < size(); ++k) m[k] = l(map_[k]);
  return Transformation(std::move(m));
}

Tuple act(const Transformation& t, const Tuple& y) {
  if (static_cast<int>(y.size()) != t.size()) {
    throw PreconditionError("tuple length does not match transformation size");
  }
  Tuple out(y.size());
  for (int k = 0; k < t.size(); ++k) out[k] = y[t(k)];
  return out;
}

std::string to_string(const Tuple& y) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < y.size(); ++k) os << (k ? "," : "") << y[k];
  os << ')';
  return os.str();
}

Transformation Generator::as_transformation(int n) const {
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw IndexError("generator index ≥ dimension " + std::to_string(n));
  }
  return kind == Kind::Sub ? Transformation::elementary(n, i, j)
                           : Transformation::transposition(n, i, j);
}

std::string to_string(const SubstWord& w) {
  std::ostringstream os;
  os << '<';
  for (std::size_t k = 0; k < w.size(); ++k) {
    os << (k ? "," : "") << '[' << w[k].i << (w[k].kind == Generator::Kind::Sub ? '|' : ',')
       << w[k].j << ']';
  }
  os << '>';
  return os.str();
}

Transformation hat(const SubstWord& w, int n) {
  Transformation t = Transformation::identity(n);
  for (const auto& g : w) t = t.then(g.as_transformation(n));
  return t;
}

namespace {

// Cycle (c0 c1 ... c_{L-1}) with t(c_m) = c_{m+1} equals the word
// [c0,c1],[c0,c2],...,[c0,c_{L-1}].
SubstWord permutation_word(const Transformation& t) {
  const int n = t.size();
  SubstWord w;
  std::vector<bool> done(n, false);
  for (int start = 0; start < n; ++start) {
    if (done[start] || t(start) == start) {
      done[start] = true;
      continue;
    }
    int cur = t(start);
    done[start] = true;
    while (cur != start) {
      w.push_back({Generator::Kind::Swap, start, cur});
      done[cur] = true;
      cur = t(cur);
    }
  }
  return w;
}

}  // namespace

// Builds the tuple (t(0),...,t(n-1)) from (0,...,n-1) by single-coordinate
// copies; copy "k := coordinate s" is the tuple action of [k|s]. The word is
// the copy sequence reversed, since the last generator acts on tuples first.
SubstWord substitution_word(const Transformation& t) {
  const int n = t.size();
  if (t.is_identity()) return {};
  if (t.is_permutation()) {
    throw PreconditionError("a non-identity permutation is not a product of elementary substitutions");
  }
  std::vector<int> cur(n);
  for (int k = 0; k < n; ++k) cur[k] = k;
  const std::vector<int>& target = t.map();
  SubstWord ops;

  auto holders = [&](int v) { return std::count(cur.begin(), cur.end(), v); };
  auto needed = [&](int v) {
    for (int m = 0; m < n; ++m) {
      if (cur[m] != target[m] && target[m] == v) return true;
    }
    return false;
  };
  auto source_of = [&](int v) {
    for (int s = 0; s < n; ++s) {
      if (cur[s] == v) return s;
    }
    return -1;
  };

  for (int guard = 0; guard < 4 * n * n + 8; ++guard) {
    bool any_pending = false;
    bool progressed = false;
    for (int k = 0; k < n; ++k) {
      if (cur[k] == target[k]) continue;
      any_pending = true;
      if (needed(cur[k]) && holders(cur[k]) < 2) continue;
      const int s = source_of(target[k]);
      if (s < 0) throw InvariantError("substitution_word lost a value");
      ops.push_back({Generator::Kind::Sub, k, s});
      cur[k] = target[k];
      progressed = true;
      break;
    }
    if (!any_pending) break;
    if (progressed) continue;
    // Every pending coordinate holds a value needed elsewhere and held once:
    // borrow a settled coordinate whose value is duplicated as scratch space.
    int scratch = -1;
    for (int k1 = 0; k1 < n && scratch < 0; ++k1) {
      if (cur[k1] != target[k1]) continue;
      for (int k2 = 0; k2 < n; ++k2) {
        if (k2 != k1 && cur[k2] == cur[k1]) {
          scratch = k1;
          break;
        }
      }
    }
    int pending = -1;
    for (int k = 0; k < n; ++k) {
      if (cur[k] != target[k]) {
        pending = k;
        break;
      }
    }
    if (scratch < 0 || pending < 0) throw InvariantError("substitution_word found no scratch coordinate");
    ops.push_back({Generator::Kind::Sub, scratch, pending});
    cur[scratch] = cur[pending];
    // Settle the pending coordinate now; otherwise the next pass restores the
    // scratch coordinate first and the loop never ends.
    const int s = source_of(target[pending]);
    if (s < 0) throw InvariantError("substitution_word lost a value");
    ops.push_back({Generator::Kind::Sub, pending, s});
    cur[pending] = target[pending];
  }
  if (cur != target) throw InvariantError("substitution_word did not converge");
  SubstWord w(ops.rbegin(), ops.rend());
  if (hat(w, n) != t) throw InvariantError("substitution_word produced a word with the wrong hat");
  return w;
}

SubstWord decompose(const Transformation& t) {
  SubstWord w = t.is_permutation() ? permutation_word(t) : substitution_word(t);
  if (hat(w, t.size()) != t) throw InvariantError("decompose produced a word with the wrong hat");
  return w;
}

}  // namespace relcyl
