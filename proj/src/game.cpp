#include "relcyl/game.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "relcyl/error.hpp"

namespace relcyl {

std::string to_string(Strategy s) { return s == Strategy::Faithful ? "faithful" : "atomic-fast"; }

Strategy parse_strategy(const std::string& s) {
  if (s == "atomic-fast") return Strategy::AtomicFast;
  if (s == "faithful") return Strategy::Faithful;
  throw FormatError("unknown strategy '" + s + "' (expected atomic-fast or faithful)");
}

std::string to_string(Play::Outcome o) {
  return o == Play::Outcome::Saturated ? "saturated" : "budget_exhausted";
}

namespace {

std::string elem(Element e) {
  std::string s = "{";
  bool first = true;
  for (int at : e.atoms()) {
    s += (first ? "" : ",") + std::to_string(at);
    first = false;
  }
  return s + "}";
}

Tuple blank(Tuple x, int i) {
  x[i] = -1;
  return x;
}

int distinct(const Tuple& y) {
  Tuple r = y;
  std::sort(r.begin(), r.end());
  return static_cast<int>(std::unique(r.begin(), r.end()) - r.begin());
}

}  // namespace

std::string to_string(const Move& m) {
  switch (m.kind) {
    case Move::Kind::Place: return "place " + elem(m.a);
    case Move::Kind::Split: return "split " + to_string(m.edge) + " by " + elem(m.a);
    case Move::Kind::Witness:
      return "witness " + to_string(m.edge) + " at " + std::to_string(m.i) + " for " + elem(m.b);
  }
  return "?";
}

GameState::GameState(const FiniteBAO& a, GameConfig cfg) : a_(canonical_extension(a)), cfg_(cfg) {
  if (!a_.sig.has_d) throw SignatureError("the game needs diagonal elements");
  if (cfg_.mode == NetworkMode::TEA && !a_.sig.has_swap) {
    throw SignatureError("TEA-mode play needs transpositions");
  }
}

std::vector<Obligation> GameState::pending_obligations() const {
  std::vector<Obligation> out;
  for (const auto& [seq, ob] : queue_) out.push_back(ob);
  return out;
}

std::optional<Move> GameState::schedule_forall() const {
  if (next_place_ < a_.num_atoms) {
    Move m;
    m.kind = Move::Kind::Place;
    m.a = Element::atom(next_place_);
    return m;
  }
  if (cfg_.strategy == Strategy::Faithful && split_front_ < split_cursor_.size()) {
    const auto& [edge, next] = split_cursor_[split_front_];
    Move m;
    m.kind = Move::Kind::Split;
    m.edge = edge;
    m.a = Element(next);
    return m;
  }
  if (!queue_.empty()) {
    const Obligation& ob = queue_.begin()->second;
    Move m;
    m.kind = Move::Kind::Witness;
    m.edge = ob.edge;
    m.i = ob.i;
    m.b = Element::atom(ob.b);
    return m;
  }
  return std::nullopt;
}

Element GameState::diag_product(const Tuple& y) const {
  Element p = a_.top();
  for (int i = 0; i < a_.dim; ++i) {
    for (int j = 0; j < a_.dim; ++j) {
      if (y[i] == y[j]) p &= a_.d[i][j];
    }
  }
  return p;
}

int GameState::fresh_node() {
  if (static_cast<int>(m_.nodes.size()) + 1 > cfg_.max_nodes) {
    throw NodeBudgetExceeded("node budget of " + std::to_string(cfg_.max_nodes) + " reached");
  }
  const int z = next_node_++;
  m_.nodes.insert(z);
  n_.nodes.insert(z);
  return z;
}

// PT (plus the full tuple when it is surjective) or T, as a plain edge map.
std::map<Tuple, Element> GameState::local_network(Element atom, const Tuple& x) const {
  if (cfg_.mode == NetworkMode::TEA) return build_T(a_, atom, x).labels;
  auto g = build_PT(a_, atom, x).labels;
  if (distinct(x) == a_.dim) g.emplace(x, atom);
  return g;
}

// Labels x and its transposition family by value, s_ij on each step.
void GameState::set_family(const Tuple& x, Element value, std::map<Tuple, Element>& into) const {
  into[x] = value;
  if (cfg_.mode != NetworkMode::TEA) return;
  const int n = a_.dim;
  std::map<Tuple, Element> seen{{x, value}};
  std::deque<Tuple> todo{x};
  while (!todo.empty()) {
    const Tuple w = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Tuple z = act(Transformation::transposition(n, i, j), w);
        if (seen.emplace(z, swap(a_, i, j, seen.at(w))).second) {
          into[z] = seen.at(z);
          todo.push_back(z);
        }
      }
    }
  }
}

void GameState::add_edges(const std::map<Tuple, Element>& edges) {
  for (const auto& [x, l] : edges) {
    m_.labels.emplace(x, l);
    for (int i = 0; i < a_.dim; ++i) {
      GroupKey key{i, blank(x, i)};
      witnessed_[key] |= l;
      groups_[key].push_back(x);
      auto w = waiting_.find({i, key.second, l.least()});
      if (w != waiting_.end()) {
        for (std::uint64_t seq : w->second) queue_.erase(seq);
        waiting_.erase(w);
      }
    }
    if (cfg_.strategy == Strategy::Faithful) split_cursor_.emplace_back(x, 0);
  }
  for (const auto& [x, l] : edges) {
    for (int i = 0; i < a_.dim; ++i) {
      const Tuple key = blank(x, i);
      const Element have = witnessed_.at({i, key});
      for (int b = 0; b < a_.num_atoms; ++b) {
        if (have.contains(b) || !l.leq(cyl(a_, i, Element::atom(b)))) continue;
        const std::uint64_t seq = next_seq_++;
        queue_.emplace(seq, Obligation{x, i, b});
        waiting_[{i, key, b}].push_back(seq);
      }
    }
  }
}

// The new edges of M u G for G built on x (atom ax) and t (atom bt), or
// nullopt when the union is not an atomic network.
std::optional<std::map<Tuple, Element>> GameState::extension(const Tuple& x, Element ax, const Tuple& t,
                                                             Element bt) const {
  if (!matches_diagonals(a_, bt, t)) return std::nullopt;
  std::map<Tuple, Element> g = local_network(ax, x);
  for (const auto& [y, l] : local_network(bt, t)) {
    auto [it, fresh] = g.emplace(y, l);
    if (!fresh && it->second != l) return std::nullopt;
  }
  std::map<Tuple, Element> added;
  for (const auto& [y, l] : g) {
    auto it = m_.labels.find(y);
    if (it == m_.labels.end()) {
      added.emplace(y, l);
    } else if (it->second != l) {
      return std::nullopt;
    }
  }
  // (b) between each new edge and every edge agreeing with it off i.
  for (const auto& [y, l] : added) {
    for (int i = 0; i < a_.dim; ++i) {
      const Tuple key = blank(y, i);
      auto check = [&](Element other) {
        return !(l & cyl(a_, i, other)).empty() && !(other & cyl(a_, i, l)).empty();
      };
      auto grp = groups_.find({i, key});
      if (grp != groups_.end()) {
        for (const auto& z : grp->second) {
          if (!check(m_.labels.at(z))) return std::nullopt;
        }
      }
      for (int v : m_.nodes) {
        Tuple z = y;
        z[i] = v;
        auto it = added.find(z);
        if (it != added.end() && !check(it->second)) return std::nullopt;
      }
      for (int v : t) {
        Tuple z = y;
        z[i] = v;
        auto it = added.find(z);
        if (it != added.end() && !check(it->second)) return std::nullopt;
      }
    }
  }
  return added;
}

std::string GameState::respond_place(const Move& mv) {
  if (mv.a.empty() || !mv.a.leq(a_.top())) throw PreconditionError("place needs a non-zero element of the algebra");
  const Element atom = Element::atom(mv.a.least());
  const int n = a_.dim;
  Tuple x(n);
  int fresh_needed = 0;
  for (int k = 0; k < n; ++k) {
    bool shared = false;
    for (int j = 0; j < k; ++j) shared = shared || atom.leq(a_.d[j][k]);
    if (!shared) ++fresh_needed;
  }
  if (static_cast<int>(m_.nodes.size()) + fresh_needed > cfg_.max_nodes) {
    throw NodeBudgetExceeded("node budget of " + std::to_string(cfg_.max_nodes) + " reached");
  }
  for (int k = 0; k < n; ++k) {
    int same = -1;
    for (int j = 0; j < k && same < 0; ++j) {
      if (atom.leq(a_.d[j][k])) same = j;
    }
    x[k] = same >= 0 ? x[same] : fresh_node();
  }
  const auto g = local_network(atom, x);
  if (cfg_.strategy == Strategy::Faithful) {
    std::map<Tuple, Element> nl;
    for (const auto& [y, l] : g) nl[y] = diag_product(y);
    set_family(x, mv.a & diag_product(x), nl);
    for (const auto& [y, l] : nl) n_.labels[y] = l;
  }
  add_edges(g);
  if (next_place_ < a_.num_atoms && mv.a == Element::atom(next_place_)) ++next_place_;
  return "atom " + std::to_string(atom.least()) + " on " + to_string(x) + ", " + std::to_string(g.size()) +
         " edges";
}

std::string GameState::respond_split(const Move& mv) {
  if (cfg_.strategy != Strategy::Faithful) throw PreconditionError("split moves are only played in faithful mode");
  if (!m_.labels.count(mv.edge)) throw PreconditionError("split on a non-edge " + to_string(mv.edge));
  if (!mv.a.leq(a_.top())) throw PreconditionError("split element outside the algebra");
  std::map<Tuple, Element> family;
  set_family(mv.edge, mv.a, family);
  bool below = false;
  for (const auto& [y, g] : family) {
    const bool le = m_.labels.at(y).leq(g);
    if (y == mv.edge) below = le;
    n_.labels[y] = le ? (n_.labels.at(y) & g) : (n_.labels.at(y) & a_.neg(g));
  }
  if (split_front_ < split_cursor_.size() && split_cursor_[split_front_].first == mv.edge &&
      split_cursor_[split_front_].second == mv.a.bits()) {
    auto& cur = split_cursor_[split_front_].second;
    if (++cur >= (std::uint64_t{1} << a_.num_atoms)) ++split_front_;
  }
  return below ? "N(x) <= a" : "N(x) <= -a";
}

std::string GameState::respond_witness(const Move& mv) {
  const int n = a_.dim;
  auto it = m_.labels.find(mv.edge);
  if (it == m_.labels.end()) throw PreconditionError("witness move on a non-edge " + to_string(mv.edge));
  if (mv.i < 0 || mv.i >= n) throw IndexError("index " + std::to_string(mv.i) + " ≥ dimension " + std::to_string(n));
  if (!mv.b.leq(a_.top())) throw PreconditionError("witness element outside the algebra");
  if (!N().labels.at(mv.edge).leq(cyl(a_, mv.i, mv.b))) {
    throw PreconditionError("illegal witness move: N(x) is not below c_" + std::to_string(mv.i) + " b");
  }
  const Tuple x = mv.edge;
  const Element ax = it->second;

  for (int z : m_.nodes) {
    Tuple t = x;
    t[mv.i] = z;
    auto e = m_.labels.find(t);
    if (e != m_.labels.end() && e->second.leq(mv.b)) return "existing witness node " + std::to_string(z);
  }

  const Element options = cyl(a_, mv.i, ax) & mv.b;
  if (options.empty()) throw InvariantError("no atom below c_i a . b for a legal witness move " + to_string(mv));
  const Element bt = Element::atom(options.least());

  std::vector<int> candidates;
  if (cfg_.reuse) candidates.assign(m_.nodes.begin(), m_.nodes.end());
  candidates.push_back(-1);  // a fresh node
  for (int z : candidates) {
    const bool fresh = z < 0;
    const int node = fresh ? next_node_ : z;
    if (fresh && static_cast<int>(m_.nodes.size()) + 1 > cfg_.max_nodes) {
      throw NodeBudgetExceeded("node budget of " + std::to_string(cfg_.max_nodes) + " reached");
    }
    Tuple t = x;
    t[mv.i] = node;
    auto added = extension(x, ax, t, bt);
    if (!added) {
      if (fresh) throw InvariantError("fresh-node amalgamation failed for " + to_string(mv));
      continue;
    }
    if (fresh) fresh_node();
    if (!added->count(t)) throw InvariantError("witness tuple missing from the amalgam");
    if (cfg_.strategy == Strategy::Faithful) {
      std::map<Tuple, Element> nl;
      for (const auto& [y, l] : *added) nl[y] = diag_product(y);
      set_family(t, mv.b, nl);
      for (const auto& [y, l] : nl) {
        if (added->count(y)) n_.labels[y] = l;
      }
    }
    add_edges(*added);
    // The two inequalities the strategy promises for the witness.
    const Element wt = m_.labels.at(t);
    if (!wt.leq(mv.b) || !ax.leq(cyl(a_, mv.i, wt))) {
      throw InvariantError("witness soundness fails for " + to_string(mv));
    }
    return std::string(fresh ? "new node " : "reused node ") + std::to_string(node) + ", " +
           std::to_string(added->size()) + " edges";
  }
  throw InvariantError("unreachable: no witness candidate");
}

void GameState::check_invariants(const Move& mv) const {
  auto rep = check_network(a_, m_, cfg_.mode);
  if (!rep.empty()) {
    throw InvariantError("M is not a network after " + to_string(mv) + ": " + rep.front() + "\n" +
                         transcript_text());
  }
  if (cfg_.strategy == Strategy::Faithful) {
    rep = check_network(a_, n_, cfg_.mode);
    if (!rep.empty()) {
      throw InvariantError("N is not a network after " + to_string(mv) + ": " + rep.front() + "\n" +
                           transcript_text());
    }
    for (const auto& [y, l] : m_.labels) {
      if (!l.leq(n_.labels.at(y))) {
        throw InvariantError("N(" + to_string(y) + ") is not above M after " + to_string(mv));
      }
    }
  }
}

std::string GameState::transcript_text() const {
  std::ostringstream os;
  for (const auto& e : transcript_) {
    os << e.round << ": " << to_string(e.move) << " -> " << e.response << " [nodes " << e.node_count
       << ", pending " << e.pending_obligations << "]\n";
  }
  return os.str();
}

void GameState::exists_respond(const Move& mv) {
  std::string response;
  switch (mv.kind) {
    case Move::Kind::Place: response = respond_place(mv); break;
    case Move::Kind::Split: response = respond_split(mv); break;
    case Move::Kind::Witness: response = respond_witness(mv); break;
  }
  ++round_;
  transcript_.push_back({round_, mv, response, static_cast<int>(m_.nodes.size()), pending()});
  if (cfg_.check_each_round) check_invariants(mv);
}

Play play(const FiniteBAO& a, const GameConfig& cfg) {
  GameState st(a, cfg);
  Play p;
  p.mode = cfg.mode;
  p.num_atoms = a.num_atoms;
  p.dim = a.dim;
  p.outcome = Play::Outcome::Saturated;
  while (true) {
    const auto mv = st.schedule_forall();
    if (!mv) break;
    if (st.round() >= cfg.max_rounds) {
      p.outcome = Play::Outcome::BudgetExhausted;
      p.budget_reason = "round budget of " + std::to_string(cfg.max_rounds) + " reached";
      break;
    }
    try {
      st.exists_respond(*mv);
    } catch (const NodeBudgetExceeded& e) {
      p.outcome = Play::Outcome::BudgetExhausted;
      p.budget_reason = e.what();
      break;
    }
  }
  p.rounds = st.round();
  p.pending = st.pending();
  if (p.outcome == Play::Outcome::BudgetExhausted && p.pending == 0 && st.schedule_forall()) {
    p.pending = 1;  // unplayed placements or splits still count as outstanding
  }
  p.transcript = st.transcript();
  p.M = st.M();
  p.N = st.N();
  return p;
}

}  // namespace relcyl
