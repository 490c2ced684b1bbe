#include "s1fp/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace s1fp {

std::int64_t chern_one(const FixedPoint& p) { return p.weights.sum(); }

std::size_t lambda_neg(const FixedPoint& p) { return p.weights.count_negative(); }

Integer weight_product(const FixedPoint& p) { return p.weights.product(); }

std::size_t multiplicity(const FixedPoint& p, std::int64_t ell) {
  return p.weights.multiplicity(ell);
}

FixedPointData::FixedPointData(std::size_t half_dim, std::vector<FixedPoint> points)
    : half_dim_(half_dim), points_(std::move(points)) {
  if (half_dim_ == 0) throw ValidationError("half_dim must be positive");
  if (points_.empty()) throw ValidationError("fixed point set must be nonempty");
  std::set<std::string> ids;
  for (const FixedPoint& p : points_) {
    if (p.id.empty()) throw ValidationError("fixed point id must be nonempty");
    if (!ids.insert(p.id).second)
      throw ValidationError("duplicate fixed point id '" + p.id + "'");
    if (p.weights.size() != half_dim_)
      throw ValidationError("point '" + p.id + "' carries " +
                            std::to_string(p.weights.size()) + " weights, expected " +
                            std::to_string(half_dim_));
  }
}

std::int64_t FixedPointData::overall_gcd() const {
  std::int64_t g = 0;
  for (const FixedPoint& p : points_)
    for (std::int64_t w : p.weights.values()) g = std::gcd(g, w);
  return g;
}

FixedPointData FixedPointData::normalized_effective() const {
  std::int64_t g = overall_gcd();
  if (g == 1) return *this;
  std::vector<FixedPoint> scaled;
  scaled.reserve(points_.size());
  for (const FixedPoint& p : points_) {
    std::vector<std::int64_t> w = p.weights.values();
    for (std::int64_t& x : w) x /= g;
    scaled.push_back({p.id, WeightMultiset(std::move(w))});
  }
  return FixedPointData(half_dim_, std::move(scaled));
}

FixedPointData FixedPointData::negated() const {
  std::vector<FixedPoint> neg;
  neg.reserve(points_.size());
  for (const FixedPoint& p : points_) neg.push_back({p.id, p.weights.negated()});
  return FixedPointData(half_dim_, std::move(neg));
}

std::vector<WeightMultiset> FixedPointData::canonical_points() const {
  std::vector<WeightMultiset> sets;
  sets.reserve(points_.size());
  for (const FixedPoint& p : points_) sets.push_back(p.weights);
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::string FixedPointData::str() const {
  std::ostringstream out;
  out << "n=" << half_dim_ << " [";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out << ' ';
    out << points_[i].id << ':' << points_[i].weights.str();
  }
  out << ']';
  return out.str();
}

bool canonical_less(const FixedPointData& a, const FixedPointData& b) {
  if (a.half_dim() != b.half_dim()) return a.half_dim() < b.half_dim();
  return a.canonical_points() < b.canonical_points();
}

bool canonical_equal(const FixedPointData& a, const FixedPointData& b) {
  return a.half_dim() == b.half_dim() && a.canonical_points() == b.canonical_points();
}

FixedPointData sign_canonical(const FixedPointData& data) {
  FixedPointData neg = data.negated();
  return canonical_less(neg, data) ? neg : data;
}

FixedPointData data_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("top-level value must be an object");
  if (!doc.contains("half_dim") || !doc["half_dim"].is_number_integer())
    throw ValidationError("field 'half_dim' missing or not an integer");
  std::int64_t n = doc["half_dim"].get<std::int64_t>();
  if (n < 1) throw ValidationError("field 'half_dim' must be >= 1");
  if (!doc.contains("fixed_points") || !doc["fixed_points"].is_array())
    throw ValidationError("field 'fixed_points' missing or not an array");

  std::vector<FixedPoint> points;
  std::size_t index = 0;
  for (const auto& entry : doc["fixed_points"]) {
    std::string where = "fixed_points[" + std::to_string(index++) + "]";
    if (!entry.is_object()) throw ValidationError(where + " must be an object");
    if (!entry.contains("id") || !entry["id"].is_string())
      throw ValidationError(where + ".id missing or not a string");
    if (!entry.contains("weights") || !entry["weights"].is_array())
      throw ValidationError(where + ".weights missing or not an array");
    std::vector<std::int64_t> weights;
    for (const auto& w : entry["weights"]) {
      if (!w.is_number_integer())
        throw ValidationError(where + ".weights must contain integers only");
      weights.push_back(w.get<std::int64_t>());
      if (weights.back() == 0)
        throw ValidationError(where + ".weights contains a zero weight");
    }
    points.push_back({entry["id"].get<std::string>(), WeightMultiset(std::move(weights))});
  }
  if (points.empty()) throw ValidationError("field 'fixed_points' must be nonempty");
  return FixedPointData(static_cast<std::size_t>(n), std::move(points));
}

std::string data_to_json(const FixedPointData& data) {
  nlohmann::json doc;
  doc["half_dim"] = data.half_dim();
  doc["fixed_points"] = nlohmann::json::array();
  for (const FixedPoint& p : data.points()) {
    nlohmann::json entry;
    entry["id"] = p.id;
    entry["weights"] = p.weights.values();
    doc["fixed_points"].push_back(std::move(entry));
  }
  return doc.dump();
}

}  // namespace s1fp
