#include "dlakit/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace dlakit {

int configure_threads() {
  if (const char* env = std::getenv("DLAKIT_THREADS")) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(env, &used);
      if (used == std::string(env).size() && n > 0) omp_set_num_threads(n);
    } catch (const std::exception&) {
    }
  }
  return max_threads();
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace dlakit
