#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "s1fp/weights.hpp"

namespace s1fp {

// One isolated fixed point: a label plus the isotropy weights at the point.
struct FixedPoint {
  std::string id;
  WeightMultiset weights;
};

/// Sum of the weights at p (the value of the Chern class map there).
std::int64_t chern_one(const FixedPoint& p);

/// Number of negative weights at p, with multiplicity.
std::size_t lambda_neg(const FixedPoint& p);

/// Product of the weights at p.
Integer weight_product(const FixedPoint& p);

/// Multiplicity of ell among the weights at p; ell == 0 is rejected.
std::size_t multiplicity(const FixedPoint& p, std::int64_t ell);

// Candidate fixed-point data: half-dimension n plus a nonempty list of
// labeled points, each carrying exactly n nonzero weights.
class FixedPointData {
 public:
  FixedPointData(std::size_t half_dim, std::vector<FixedPoint> points);

  std::size_t half_dim() const { return half_dim_; }
  const std::vector<FixedPoint>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }

  /// gcd of all weights across all points (always >= 1).
  std::int64_t overall_gcd() const;

  /// Data with every weight divided by the overall gcd.
  FixedPointData normalized_effective() const;

  /// Data with every weight negated (the circle run backwards).
  FixedPointData negated() const;

  /// Sorted list of weight multisets, forgetting labels. Used for equality
  /// up to relabeling and for deterministic ordering of search output.
  std::vector<WeightMultiset> canonical_points() const;

  std::string str() const;

 private:
  std::size_t half_dim_;
  std::vector<FixedPoint> points_;
};

/// Lexicographic order on canonical_points(); total up to relabeling.
bool canonical_less(const FixedPointData& a, const FixedPointData& b);
bool canonical_equal(const FixedPointData& a, const FixedPointData& b);

/// Canonical representative of {data, data.negated()} under canonical_less.
FixedPointData sign_canonical(const FixedPointData& data);

/// Parse the JSON document format
/// {"half_dim": n, "fixed_points": [{"id": "...", "weights": [...]}, ...]}.
/// Throws ValidationError with a field diagnostic on malformed input.
FixedPointData data_from_json(const std::string& text);

std::string data_to_json(const FixedPointData& data);

}  // namespace s1fp
