#pragma once

#include <cstddef>

namespace clonewt {

// Enumeration limits. Defaults may be raised (never lowered) through the
// CLONEWT_CAPS environment variable, e.g. "cliques=5000000,partition_vertices=14".
struct Caps {
  std::size_t max_cliques = 1'000'000;
  std::size_t partition_vertices = 12;

  static Caps defaults();
  static Caps from_environment();
};

}  // namespace clonewt
