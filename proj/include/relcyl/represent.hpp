#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relcyl/game.hpp"
#include "relcyl/setalg.hpp"

namespace relcyl {

// h read off a play: edge e is in h(a) iff the final atomic label of e is below a.
struct Representation {
  int num_atoms = 0;
  int dim = 2;
  std::vector<Tuple> edges;                // sorted
  std::vector<std::vector<int>> h_atoms;   // per atom, sorted edge indices
  bool saturated = false;
  int pending = 0;

  bool operator==(const Representation&) const = default;
};

Representation extract(const Play& p);

// h(x) as a set of edge indices, the union of the atom images.
std::vector<int> h_of(const Representation& rep, Element x);

struct CheckOutcome {
  enum class Status { Pass, Fail, Conditional, Skipped };
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

std::string to_string(CheckOutcome::Status s);

struct VerifyReport {
  std::vector<CheckOutcome> checks;  // fixed order, see verify()
  std::uint64_t image_size = 0;      // number of distinct values h takes
  bool all_pass() const;             // every check Pass (Skipped counts as pass)
};

// Checks, in order: injective, boolean homomorphism, diagonals,
// cylindrifications (equality only when saturated, else Conditional with the
// pending count), transpositions/substitutions, unit classification (is_D in
// PTA mode, is_Dpe in TEA mode).
VerifyReport verify(const FiniteBAO& a, const Representation& rep, NetworkMode mode);

// Union of the atom images equals the edge set.
bool check_complete(const Representation& rep);

// The edge set as a unit over the nodes it mentions.
Unit edge_unit(const Representation& rep);

}  // namespace relcyl
