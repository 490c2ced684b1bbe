#include "s1fp/symmetric.hpp"

namespace s1fp {

std::vector<Integer> elementary_symmetric_all(std::span<const std::int64_t> values) {
  // e[j] accumulates sigma_j of the prefix processed so far.
  std::vector<Integer> e(values.size() + 1, Integer(0));
  e[0] = 1;
  std::size_t seen = 0;
  for (std::int64_t x : values) {
    ++seen;
    for (std::size_t j = seen; j >= 1; --j) e[j] += e[j - 1] * x;
  }
  return e;
}

Integer elementary_symmetric(std::span<const std::int64_t> values, std::size_t i) {
  if (i > values.size())
    throw std::out_of_range("elementary_symmetric: index exceeds sequence length");
  return elementary_symmetric_all(values)[i];
}

}  // namespace s1fp
