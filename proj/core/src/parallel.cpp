#include "cone_spectra/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cone_spectra {

std::size_t thread_limit() {
  if (const char* env = std::getenv("CONE_SPECTRA_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace cone_spectra
