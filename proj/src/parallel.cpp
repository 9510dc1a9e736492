#include "eblab/parallel.hpp"

namespace eblab {

unsigned available_workers() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace eblab
