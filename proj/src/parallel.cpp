#include "qverma/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qverma {

int thread_count() {
  if (const char* env = std::getenv("QVERMA_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace qverma
