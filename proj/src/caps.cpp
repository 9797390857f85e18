#include "clonewt/caps.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

#include "clonewt/errors.hpp"

namespace clonewt {

Caps Caps::defaults() { return Caps{}; }

Caps Caps::from_environment() {
  Caps caps;
  const char* env = std::getenv("CLONEWT_CAPS");
  if (env == nullptr) {
    return caps;
  }
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("CLONEWT_CAPS: expected key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::size_t value = std::stoull(item.substr(eq + 1));
    if (key == "cliques") {
      caps.max_cliques = std::max(caps.max_cliques, value);
    } else if (key == "partition_vertices") {
      caps.partition_vertices = std::max(caps.partition_vertices, value);
    } else {
      throw ValidationError("CLONEWT_CAPS: unknown cap '" + key + "'");
    }
  }
  return caps;
}

}  // namespace clonewt
