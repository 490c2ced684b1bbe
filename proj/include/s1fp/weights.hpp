#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "s1fp/rational.hpp"

namespace s1fp {

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Finite multiset of nonzero integers in canonical ascending order.
class WeightMultiset {
 public:
  WeightMultiset() = default;

  /// Sorts the input; throws ValidationError on a zero entry.
  explicit WeightMultiset(std::vector<std::int64_t> weights);

  const std::vector<std::int64_t>& values() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  /// Multiplicity N(ell); ell == 0 throws.
  std::size_t multiplicity(std::int64_t ell) const;

  std::int64_t sum() const;
  Integer product() const;
  std::size_t count_negative() const;

  /// Multiset with every element negated (re-sorted).
  WeightMultiset negated() const;

  /// Residues of all elements mod m, as a sorted multiset in [0, m); m >= 1.
  std::vector<std::int64_t> residues_mod(std::int64_t m) const;

  /// Sorted distinct absolute values present.
  std::vector<std::int64_t> distinct_magnitudes() const;

  auto operator<=>(const WeightMultiset& other) const = default;

  std::string str() const;

 private:
  std::vector<std::int64_t> weights_;
};

}  // namespace s1fp
