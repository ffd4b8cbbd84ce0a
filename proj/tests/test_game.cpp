#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relcyl/error.hpp"
#include "relcyl/game.hpp"
#include "relcyl/setalg.hpp"

using namespace relcyl;

namespace {

Move place(Element a) {
  Move m;
  m.kind = Move::Kind::Place;
  m.a = a;
  return m;
}

// Every edge, index and atom b with M(x) <= c_i b has a witness node z.
bool saturated_network(const FiniteBAO& a, const Network& m) {
  for (const auto& [x, l] : m.labels) {
    for (int i = 0; i < a.dim; ++i) {
      for (int b = 0; b < a.num_atoms; ++b) {
        if (!l.leq(cyl(a, i, Element::atom(b)))) continue;
        bool found = false;
        for (int z : m.nodes) {
          Tuple y = x;
          y[i] = z;
          auto it = m.labels.find(y);
          if (it != m.labels.end() && it->second == Element::atom(b)) found = true;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("scheduler order") {
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::tea());
  GameState st(sq, GameConfig{});
  auto first = st.schedule_forall();
  REQUIRE(first.has_value());
  CHECK(first->kind == Move::Kind::Place);
  CHECK(first->a == Element::atom(0));
}

TEST_CASE("placement and witness reuse") {
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::tea());
  for (auto mode : {NetworkMode::PTA, NetworkMode::TEA}) {
    GameConfig cfg;
    cfg.mode = mode;
    GameState st(sq, cfg);
    st.exists_respond(place(Element::atom(1)));  // the atom (0,1)
    CHECK(st.M().nodes.size() == 2);
    CHECK(st.M().labels.size() == (mode == NetworkMode::TEA ? 4U : 3U));
    CHECK(check_network(sq, st.M(), mode).empty());

    Move w;
    w.kind = Move::Kind::Witness;
    w.edge = {0, 1};
    w.i = 0;
    w.b = Element::atom(3);  // (1,1) shares the c_0 class of (0,1)
    st.exists_respond(w);
    CHECK(st.M().nodes.size() == 2);
    CHECK(st.transcript().back().response == "existing witness node 1");

    CHECK_THROWS_AS(st.exists_respond(place(Element{})), PreconditionError);
  }
}

TEST_CASE("illegal witness move") {
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::tea());
  GameState st(sq, GameConfig{});
  st.exists_respond(place(Element::atom(1)));
  Move w;
  w.kind = Move::Kind::Witness;
  w.edge = {0, 1};
  w.i = 0;
  w.b = Element::atom(0);  // (0,0) is not in the c_0 class of (0,1)
  CHECK_THROWS_AS(st.exists_respond(w), PreconditionError);
}

TEST_CASE("plays on the full square saturate; pinned sizes") {
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::tea());
  GameConfig cfg;
  cfg.mode = NetworkMode::PTA;
  Play p = play(sq, cfg);
  CHECK(p.outcome == Play::Outcome::Saturated);
  CHECK(p.rounds == 11);
  CHECK(p.M.nodes.size() == 6);
  CHECK(p.M.labels.size() == 15);
  CHECK(saturated_network(sq, p.M));

  cfg.mode = NetworkMode::TEA;
  p = play(sq, cfg);
  CHECK(p.outcome == Play::Outcome::Saturated);
  CHECK(p.rounds == 6);
  CHECK(p.M.nodes.size() == 6);
  CHECK(p.M.labels.size() == 14);
  CHECK(saturated_network(sq, p.M));
}

TEST_CASE("full cube in TEA mode") {
  const FiniteBAO cube = abstract(full_unit(3, 2), Signature::tea());
  GameConfig cfg;
  cfg.mode = NetworkMode::TEA;
  const Play p = play(cube, cfg);
  CHECK(p.outcome == Play::Outcome::Saturated);
  CHECK(p.rounds == 10);
  CHECK(p.M.nodes.size() == 14);
  CHECK(p.M.labels.size() == 62);
  CHECK(saturated_network(cube, p.M));
}

TEST_CASE("one-atom algebra saturates within n + 1 rounds") {
  for (int n = 2; n <= 4; ++n) {
    for (auto mode : {NetworkMode::PTA, NetworkMode::TEA}) {
      GameConfig cfg;
      cfg.mode = mode;
      const Play p = play(trivial_algebra(n, Signature::tea()), cfg);
      CHECK(p.outcome == Play::Outcome::Saturated);
      CHECK(p.rounds <= n + 1);
    }
  }
}

TEST_CASE("faithful and atomic-fast agree") {
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::tea());
  for (auto mode : {NetworkMode::PTA, NetworkMode::TEA}) {
    GameConfig cfg;
    cfg.mode = mode;
    const Play fast = play(sq, cfg);
    cfg.strategy = Strategy::Faithful;
    const Play faithful = play(sq, cfg);
    CHECK(faithful.outcome == Play::Outcome::Saturated);
    CHECK(faithful.M == fast.M);
    CHECK(faithful.rounds > fast.rounds);
    // N labels sit above the atomic M labels.
    for (const auto& [x, l] : faithful.M.labels) CHECK(l.leq(faithful.N.labels.at(x)));
  }
}

TEST_CASE("budgets") {
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::tea());
  GameConfig cfg;
  cfg.max_nodes = 2;
  Play p = play(sq, cfg);
  CHECK(p.outcome == Play::Outcome::BudgetExhausted);
  CHECK(p.budget_reason.find("node budget") != std::string::npos);
  CHECK(p.pending > 0);

  cfg = GameConfig{};
  cfg.max_rounds = 1;
  p = play(sq, cfg);
  CHECK(p.outcome == Play::Outcome::BudgetExhausted);
  CHECK(p.rounds == 1);

  cfg = GameConfig{};
  cfg.reuse = false;
  cfg.max_nodes = 64;
  p = play(sq, cfg);
  CHECK(p.outcome == Play::Outcome::BudgetExhausted);
}

TEST_CASE("transcripts are deterministic") {
  const FiniteBAO sq = abstract(full_unit(2, 2), Signature::tea());
  const Play a = play(sq, GameConfig{});
  const Play b = play(sq, GameConfig{});
  REQUIRE(a.transcript.size() == b.transcript.size());
  for (std::size_t k = 0; k < a.transcript.size(); ++k) {
    CHECK(a.transcript[k].response == b.transcript[k].response);
    CHECK(to_string(a.transcript[k].move) == to_string(b.transcript[k].move));
    CHECK(a.transcript[k].node_count == b.transcript[k].node_count);
  }
}
