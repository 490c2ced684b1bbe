#include "s1fp/weights.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace s1fp {

WeightMultiset::WeightMultiset(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  for (std::int64_t w : weights_)
    if (w == 0) throw ValidationError("weight multiset may not contain 0");
  std::sort(weights_.begin(), weights_.end());
}

std::size_t WeightMultiset::multiplicity(std::int64_t ell) const {
  if (ell == 0) throw ValidationError("multiplicity is defined for nonzero ell only");
  auto [lo, hi] = std::equal_range(weights_.begin(), weights_.end(), ell);
  return static_cast<std::size_t>(hi - lo);
}

std::int64_t WeightMultiset::sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

Integer WeightMultiset::product() const {
  Integer p = 1;
  for (std::int64_t w : weights_) p *= w;
  return p;
}

std::size_t WeightMultiset::count_negative() const {
  return static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(), [](std::int64_t w) { return w < 0; }));
}

WeightMultiset WeightMultiset::negated() const {
  std::vector<std::int64_t> neg(weights_.size());
  std::transform(weights_.begin(), weights_.end(), neg.begin(),
                 [](std::int64_t w) { return -w; });
  return WeightMultiset(std::move(neg));
}

std::vector<std::int64_t> WeightMultiset::residues_mod(std::int64_t m) const {
  if (m < 1) throw ValidationError("modulus must be positive");
  std::vector<std::int64_t> res;
  res.reserve(weights_.size());
  for (std::int64_t w : weights_) res.push_back(((w % m) + m) % m);
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<std::int64_t> WeightMultiset::distinct_magnitudes() const {
  std::vector<std::int64_t> mags;
  mags.reserve(weights_.size());
  for (std::int64_t w : weights_) mags.push_back(w < 0 ? -w : w);
  std::sort(mags.begin(), mags.end());
  mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
  return mags;
}

std::string WeightMultiset::str() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out << ',';
    out << weights_[i];
  }
  out << '}';
  return out.str();
}

}  // namespace s1fp
