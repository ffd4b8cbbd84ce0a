#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "relcyl/error.hpp"
#include "relcyl/networks.hpp"

namespace relcyl {

enum class Strategy { AtomicFast, Faithful };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

struct GameConfig {
  NetworkMode mode = NetworkMode::PTA;
  Strategy strategy = Strategy::AtomicFast;
  int max_rounds = 10000;
  int max_nodes = 512;
  // Try existing nodes as witnesses before creating a fresh one.
  bool reuse = true;
  // Run check_network on M (and N in faithful mode) after every round.
  bool check_each_round = true;
};

struct Move {
  enum class Kind { Place, Split, Witness };
  Kind kind = Kind::Place;
  Element a;    // Place, Split
  Tuple edge;   // Split, Witness
  int i = 0;    // Witness
  Element b;    // Witness
};

std::string to_string(const Move& m);

struct Obligation {
  Tuple edge;
  int i = 0;
  int b = 0;  // atom index
};

struct TranscriptEntry {
  int round = 0;
  Move move;
  std::string response;
  int node_count = 0;
  int pending_obligations = 0;
};

// Thrown when a response would need more nodes than the budget allows.
class NodeBudgetExceeded : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

// One play in progress: the public network N, the atomic companion M, the
// obligation queue and the scheduler cursors.
class GameState {
 public:
  GameState(const FiniteBAO& a, GameConfig cfg);

  const FiniteBAO& algebra() const { return a_; }
  const GameConfig& config() const { return cfg_; }
  const Network& M() const { return m_; }
  // In atomic-fast mode this is M.
  const Network& N() const { return cfg_.strategy == Strategy::Faithful ? n_ : m_; }
  int round() const { return round_; }
  int pending() const { return static_cast<int>(queue_.size()); }
  std::vector<Obligation> pending_obligations() const;
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }

  // The next move of the fixed fair scheduler, or nullopt at saturation.
  std::optional<Move> schedule_forall() const;

  // Plays one round. Throws PreconditionError on illegal moves,
  // NodeBudgetExceeded when fresh nodes would exceed the budget, and
  // InvariantError (with the transcript so far) if M stops being a network.
  void exists_respond(const Move& mv);

 private:
  using GroupKey = std::pair<int, Tuple>;

  std::string respond_place(const Move& mv);
  std::string respond_split(const Move& mv);
  std::string respond_witness(const Move& mv);

  std::optional<std::map<Tuple, Element>> extension(const Tuple& x, Element ax, const Tuple& t, Element bt) const;
  std::map<Tuple, Element> local_network(Element atom, const Tuple& x) const;
  void add_edges(const std::map<Tuple, Element>& edges);
  void set_family(const Tuple& x, Element value, std::map<Tuple, Element>& into) const;
  Element diag_product(const Tuple& y) const;
  int fresh_node();
  void check_invariants(const Move& mv) const;
  std::string transcript_text() const;

  FiniteBAO a_;
  GameConfig cfg_;
  Network m_;
  Network n_;
  int next_node_ = 0;
  int round_ = 0;

  int next_place_ = 0;
  std::vector<std::pair<Tuple, std::uint64_t>> split_cursor_;  // faithful mode only
  std::size_t split_front_ = 0;

  std::map<std::uint64_t, Obligation> queue_;
  std::map<std::tuple<int, Tuple, int>, std::vector<std::uint64_t>> waiting_;
  std::map<GroupKey, Element> witnessed_;
  std::map<GroupKey, std::vector<Tuple>> groups_;
  std::uint64_t next_seq_ = 0;

  std::vector<TranscriptEntry> transcript_;
};

struct Play {
  enum class Outcome { Saturated, BudgetExhausted };
  Outcome outcome = Outcome::Saturated;
  std::string budget_reason;
  int rounds = 0;
  int pending = 0;
  std::vector<TranscriptEntry> transcript;
  Network M;
  Network N;
  NetworkMode mode = NetworkMode::PTA;
  int num_atoms = 0;
  int dim = 2;
};

std::string to_string(Play::Outcome o);

// Alternates schedule_forall / exists_respond until saturation or budget.
Play play(const FiniteBAO& a, const GameConfig& cfg);

}  // namespace relcyl
