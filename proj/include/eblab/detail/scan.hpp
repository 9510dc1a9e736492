#pragma once

#include <vector>

#include "eblab/parallel.hpp"

namespace eblab {

template <class Accept>
std::vector<std::vector<Elem>> scan_unary_tables(std::size_t n, unsigned workers,
                                                 Accept accept) {
  if (n == 0) return {};
  // The leading `prefix` entries pick a chunk; the rest run as an odometer.
  std::size_t prefix = 0;
  std::size_t chunks = 1;
  while (prefix < n && chunks < 64) {
    chunks *= n;
    ++prefix;
  }

  return parallel_collect<std::vector<Elem>>(chunks, workers, [&](std::size_t chunk) {
    std::vector<std::vector<Elem>> found;
    std::vector<Elem> table(n, 0);
    std::size_t rest = chunk;
    for (std::size_t i = prefix; i-- > 0;) {
      table[i] = static_cast<Elem>(rest % n);
      rest /= n;
    }
    auto advance = [&] {
      for (std::size_t i = n; i-- > prefix;) {
        if (++table[i] < n) return true;
        table[i] = 0;
      }
      return false;
    };
    do {
      if (accept(static_cast<const std::vector<Elem>&>(table))) found.push_back(table);
    } while (advance());
    return found;
  });
}

}  // namespace eblab
