#include "phaselag/parallel.hpp"

#include <cstdlib>
#include <string>

namespace phaselag {

unsigned worker_count() {
  if (const char* env = std::getenv("PHASELAG_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace phaselag
