#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "s1fp/rational.hpp"

namespace s1fp {

/// i-th elementary symmetric polynomial of the given integers.
/// sigma_0 = 1, sigma_n = product of all entries; i out of [0, size] throws.
Integer elementary_symmetric(std::span<const std::int64_t> values, std::size_t i);

/// All of sigma_0 .. sigma_n in one pass.
std::vector<Integer> elementary_symmetric_all(std::span<const std::int64_t> values);

}  // namespace s1fp
