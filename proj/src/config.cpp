#include "relcyl/config.hpp"

#include <cstdlib>
#include <string>

namespace relcyl {
namespace {

Limits initial_limits() {
  Limits l;
  if (const char* env = std::getenv("RELCYL_MAX_DIM")) {
    try {
      int v = std::stoi(env);
      if (v >= 2) l.max_dim = v;
    } catch (...) {
      // unparsable override is ignored
    }
  }
  return l;
}

Limits& mutable_limits() {
  static Limits l = initial_limits();
  return l;
}

}  // namespace

const Limits& limits() { return mutable_limits(); }

void set_limits(const Limits& l) { mutable_limits() = l; }

}  // namespace relcyl
