#include "s1fp/search.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <optional>

#include "s1fp/constraints.hpp"
#include "s1fp/lemma_multi.hpp"

namespace s1fp {

namespace {

// All weight multisets of size n over [-W, W] \ {0}, in lexicographic order.
std::vector<WeightMultiset> all_multisets(std::size_t n, std::int64_t max_weight) {
  std::vector<WeightMultiset> out;
  std::vector<std::int64_t> current;
  auto rec = [&](auto&& self, std::int64_t min_value) -> void {
    if (current.size() == n) {
      out.push_back(WeightMultiset(current));
      return;
    }
    for (std::int64_t v = min_value; v <= max_weight; ++v) {
      if (v == 0) continue;
      current.push_back(v);
      self(self, v);
      current.pop_back();
    }
  };
  rec(rec, -max_weight);
  return out;
}

FixedPointData make_data(std::size_t half_dim, const std::vector<WeightMultiset>& sets) {
  std::vector<FixedPoint> points;
  points.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    points.push_back({"p" + std::to_string(i), sets[i]});
  return FixedPointData(half_dim, std::move(points));
}

// Keep only the lexicographically smaller of a configuration and its global
// negation; the partner shows up elsewhere in the enumeration.
bool is_sign_representative(const FixedPointData& data) {
  return !canonical_less(data.negated(), data);
}

void sort_and_dedup(std::vector<FixedPointData>& configs) {
  std::sort(configs.begin(), configs.end(), canonical_less);
  configs.erase(std::unique(configs.begin(), configs.end(), canonical_equal), configs.end());
}

struct PartialResult {
  std::vector<FixedPointData> feasible;
  unsigned long long examined = 0;
  std::map<std::string, unsigned long long> pruned;
};

// Walk nondecreasing index tuples with first index in [first_lo, first_hi).
PartialResult scan_range(const SearchSpec& spec, const std::vector<WeightMultiset>& pool,
                         std::size_t first_lo, std::size_t first_hi) {
  PartialResult out;
  std::vector<std::size_t> tuple(spec.point_count);
  std::vector<WeightMultiset> sets(spec.point_count);

  auto rec = [&](auto&& self, std::size_t depth, std::size_t min_index) -> void {
    if (depth == spec.point_count) {
      ++out.examined;
      for (std::size_t i = 0; i < spec.point_count; ++i) sets[i] = pool[tuple[i]];
      FixedPointData data = make_data(spec.half_dim, sets);
      if (spec.effective_only && data.overall_gcd() > 1) {
        ++out.pruned["effectiveness"];
        return;
      }
      std::string failed = first_failing_constraint(data);
      if (!failed.empty()) {
        ++out.pruned[failed];
        return;
      }
      if (is_sign_representative(data)) out.feasible.push_back(std::move(data));
      return;
    }
    std::size_t lo = depth == 0 ? first_lo : min_index;
    std::size_t hi = depth == 0 ? first_hi : pool.size();
    for (std::size_t i = lo; i < hi; ++i) {
      tuple[depth] = i;
      self(self, depth + 1, i);
    }
  };
  rec(rec, 0, 0);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Integer raw_candidate_count(const SearchSpec& spec) {
  // Multisets per point: C(2W + n - 1, n).
  Integer per_point = binomial(
      static_cast<unsigned long>(2 * spec.max_weight + spec.half_dim - 1),
      static_cast<unsigned long>(spec.half_dim));
  Integer total;
  mpz_pow_ui(total.get_mpz_t(), per_point.get_mpz_t(),
             static_cast<unsigned long>(spec.point_count));
  return total;
}

SearchResult enumerate_feasible(const SearchSpec& spec, unsigned jobs) {
  if (spec.point_count < 1 || spec.half_dim < 1 || spec.max_weight < 1)
    throw ValidationError("search spec requires k >= 1, n >= 1, W >= 1");
  SearchResult result;
  result.spec = spec;
  result.raw_candidates = raw_candidate_count(spec);
  if (result.raw_candidates > spec.budget) throw BudgetExceeded(result.raw_candidates);

  std::vector<WeightMultiset> pool = all_multisets(spec.half_dim, spec.max_weight);

  std::vector<PartialResult> parts;
  if (jobs <= 1) {
    parts.push_back(scan_range(spec, pool, 0, pool.size()));
  } else {
    // Contiguous chunks of the first index; later chunks carry fewer tuples,
    // which is acceptable at these sizes.
    std::vector<std::future<PartialResult>> futures;
    std::size_t chunk = (pool.size() + jobs - 1) / jobs;
    for (std::size_t lo = 0; lo < pool.size(); lo += chunk) {
      std::size_t hi = std::min(lo + chunk, pool.size());
      futures.push_back(std::async(std::launch::async, [&, lo, hi] {
        return scan_range(spec, pool, lo, hi);
      }));
    }
    for (auto& f : futures) parts.push_back(f.get());
  }

  for (PartialResult& part : parts) {
    result.examined += part.examined;
    for (auto& [id, count] : part.pruned) result.pruned[id] += count;
    for (FixedPointData& data : part.feasible) result.feasible.push_back(std::move(data));
  }
  sort_and_dedup(result.feasible);
  return result;
}

SearchResult brute_oracle(const SearchSpec& spec) {
  if (spec.point_count < 1 || spec.half_dim < 1 || spec.max_weight < 1)
    throw ValidationError("search spec requires k >= 1, n >= 1, W >= 1");
  SearchResult result;
  result.spec = spec;
  result.raw_candidates = raw_candidate_count(spec);
  if (result.raw_candidates > spec.budget) throw BudgetExceeded(result.raw_candidates);

  std::vector<WeightMultiset> pool = all_multisets(spec.half_dim, spec.max_weight);
  std::vector<std::size_t> tuple(spec.point_count);
  std::vector<WeightMultiset> sets(spec.point_count);

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == spec.point_count) {
      ++result.examined;
      for (std::size_t i = 0; i < spec.point_count; ++i) sets[i] = pool[tuple[i]];
      FixedPointData data = make_data(spec.half_dim, sets);
      if (spec.effective_only && data.overall_gcd() > 1) return;
      if (run_all(data).feasible) result.feasible.push_back(sign_canonical(data));
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      tuple[depth] = i;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  sort_and_dedup(result.feasible);
  return result;
}

bool same_feasible_set(const SearchResult& a, const SearchResult& b) {
  if (a.feasible.size() != b.feasible.size()) return false;
  for (std::size_t i = 0; i < a.feasible.size(); ++i)
    if (!canonical_equal(a.feasible[i], b.feasible[i])) return false;
  return true;
}

ExampleRecipe ExampleRecipe::sphere(std::int64_t a) {
  ExampleRecipe r;
  r.kind = Kind::Sphere;
  r.sphere_speed = a;
  return r;
}

ExampleRecipe ExampleRecipe::projective(std::vector<std::int64_t> params) {
  ExampleRecipe r;
  r.kind = Kind::Projective;
  r.projective_params = std::move(params);
  return r;
}

ExampleRecipe ExampleRecipe::product(std::vector<ExampleRecipe> factors) {
  ExampleRecipe r;
  r.kind = Kind::Product;
  r.factors = std::move(factors);
  return r;
}

FixedPointData generate_example(const ExampleRecipe& recipe) {
  switch (recipe.kind) {
    case ExampleRecipe::Kind::Sphere: {
      if (recipe.sphere_speed < 1)
        throw ValidationError("sphere speed must be a natural number");
      return FixedPointData(
          1, {{"south", WeightMultiset({recipe.sphere_speed})},
              {"north", WeightMultiset({-recipe.sphere_speed})}});
    }
    case ExampleRecipe::Kind::Projective: {
      const auto& a = recipe.projective_params;
      if (a.size() < 2) throw ValidationError("projective recipe needs at least two parameters");
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
          if (a[i] == a[j])
            throw ValidationError("projective parameters must be pairwise distinct");
      std::vector<FixedPoint> points;
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<std::int64_t> weights;
        for (std::size_t j = 0; j < a.size(); ++j)
          if (j != i) weights.push_back(a[j] - a[i]);
        points.push_back({"p" + std::to_string(i), WeightMultiset(std::move(weights))});
      }
      return FixedPointData(a.size() - 1, std::move(points));
    }
    case ExampleRecipe::Kind::Product: {
      if (recipe.factors.empty()) throw ValidationError("product recipe needs factors");
      std::optional<FixedPointData> acc;
      for (const ExampleRecipe& factor : recipe.factors) {
        FixedPointData next = generate_example(factor);
        if (!acc) {
          acc = std::move(next);
          continue;
        }
        std::vector<FixedPoint> points;
        for (const FixedPoint& p : acc->points()) {
          for (const FixedPoint& q : next.points()) {
            std::vector<std::int64_t> weights = p.weights.values();
            const auto& more = q.weights.values();
            weights.insert(weights.end(), more.begin(), more.end());
            points.push_back({p.id + "x" + q.id, WeightMultiset(std::move(weights))});
          }
        }
        acc = FixedPointData(acc->half_dim() + next.half_dim(), std::move(points));
      }
      return *acc;
    }
  }
  throw ValidationError("unknown recipe kind");
}

namespace {

SearchSpec probe_spec(const ProbeBounds& bounds, std::size_t k, std::size_t n) {
  SearchSpec spec;
  spec.point_count = k;
  spec.half_dim = n;
  spec.max_weight = bounds.max_weight;
  spec.budget = bounds.budget;
  spec.effective_only = bounds.effective_only;
  return spec;
}

}  // namespace

ProbeResult theorem_probe(const std::string& name, const ProbeBounds& bounds, unsigned jobs) {
  ProbeResult out;
  out.name = name;
  out.pass = true;

  if (name == "no-one-point") {
    unsigned long long total = 0;
    for (std::size_t n = 1; n <= bounds.max_half_dim; ++n) {
      SearchResult r = enumerate_feasible(probe_spec(bounds, 1, n), jobs);
      total += r.examined;
      for (const FixedPointData& c : r.feasible) {
        out.pass = false;
        out.counterexamples.push_back(c);
      }
    }
    out.detail = out.pass ? "no feasible single-point data among " + std::to_string(total) +
                                " candidates"
                          : "feasible single-point data found";
    return out;
  }

  if (name == "two-point-classification") {
    for (std::size_t n = 1; n <= bounds.max_half_dim; ++n) {
      SearchResult r = enumerate_feasible(probe_spec(bounds, 2, n), jobs);
      for (const FixedPointData& c : r.feasible) {
        bool ok = false;
        if (n == 1) {
          ok = c.points()[0].weights == c.points()[1].weights.negated();
        } else if (n == 3) {
          ok = classify(c.points()[0].weights).has_value() ||
               classify(c.points()[1].weights).has_value();
        }
        if (!ok) {
          out.pass = false;
          out.counterexamples.push_back(c);
        }
      }
    }
    out.detail = out.pass
                     ? "every feasible two-point configuration is a sphere or the dim-6 pattern"
                     : "two-point configuration outside the classification found";
    return out;
  }

  if (name == "odd-count-parity") {
    std::size_t k = bounds.point_count ? bounds.point_count : 3;
    if (k % 2 == 0) throw ValidationError("odd-count-parity probe needs odd point count");
    for (std::size_t n = 1; n <= bounds.max_half_dim; n += 2) {
      SearchResult r = enumerate_feasible(probe_spec(bounds, k, n), jobs);
      for (const FixedPointData& c : r.feasible) {
        out.pass = false;
        out.counterexamples.push_back(c);
      }
    }
    out.detail = out.pass ? "no feasible configuration with k = " + std::to_string(k) +
                                " and odd n"
                          : "feasible odd-k odd-n configuration found";
    return out;
  }

  if (name == "somewhere-injective-bound") {
    for (std::size_t n = 1; n <= bounds.max_half_dim; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        SearchResult r = enumerate_feasible(probe_spec(bounds, k, n), jobs);
        for (const FixedPointData& c : r.feasible) {
          if (check_somewhere_injective(c).somewhere_injective) {
            out.pass = false;
            out.counterexamples.push_back(c);
          }
        }
      }
    }
    out.detail = out.pass ? "no feasible configuration with k <= n has a singleton c1 fiber"
                          : "somewhere injective configuration with k <= n found";
    return out;
  }

  if (name == "three-point-list") {
    // Exploration only: list what survives, assert nothing.
    for (std::size_t n = 1; n <= bounds.max_half_dim; ++n) {
      SearchResult r = enumerate_feasible(probe_spec(bounds, 3, n), jobs);
      for (const FixedPointData& c : r.feasible) out.listing.push_back(c);
    }
    out.detail = std::to_string(out.listing.size()) +
                 " feasible three-point configurations listed (no assertion)";
    return out;
  }

  throw ValidationError("unknown probe '" + name + "'");
}

}  // namespace s1fp
