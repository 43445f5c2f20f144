#include "wallkit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace wallkit {

std::size_t thread_count() {
  if (char const* env = std::getenv("WALLKIT_THREADS")) {
    try {
      long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (std::exception const&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace wallkit
