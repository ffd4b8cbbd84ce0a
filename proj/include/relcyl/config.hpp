#pragma once

#include <cstdint>

namespace relcyl {

// Size caps for dimensions, atom counts and exhaustive enumeration.
struct Limits {
  int max_dim = 6;
  int max_atoms = 20;
  std::uint64_t max_assignments = std::uint64_t{1} << 24;
};

// Process-wide limits. RELCYL_MAX_DIM overrides max_dim on first use.
const Limits& limits();

// Replaces the process-wide limits. Not synchronized; call before spawning work.
void set_limits(const Limits& l);

// Hard ceiling imposed by the 64-bit element representation.
inline constexpr int kAtomCeiling = 64;

}  // namespace relcyl
