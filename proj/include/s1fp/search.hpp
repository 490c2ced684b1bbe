#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "s1fp/model.hpp"

namespace s1fp {

struct SearchSpec {
  std::size_t point_count = 1;   // k
  std::size_t half_dim = 1;      // n
  std::int64_t max_weight = 1;   // W: weights range over [-W, W] \ {0}
  bool effective_only = true;    // skip candidates with overall gcd > 1
  Integer budget = Integer(100000000);
};

struct BudgetExceeded : std::runtime_error {
  Integer raw_size;
  explicit BudgetExceeded(Integer size)
      : std::runtime_error("raw candidate count " + size.get_str() + " exceeds budget"),
        raw_size(std::move(size)) {}
};

struct SearchResult {
  SearchSpec spec;
  // Feasible configurations, canonicalized up to point relabeling and global
  // sign flip, in deterministic sorted order.
  std::vector<FixedPointData> feasible;
  Integer raw_candidates = 0;             // C(2W+n-1, n)^k before any dedup
  unsigned long long examined = 0;        // candidates actually tested
  std::map<std::string, unsigned long long> pruned;  // first failing constraint
};

/// Raw candidate count C(2W+n-1, n)^k for a given SearchSpec.
Integer raw_candidate_count(const SearchSpec& spec);

/// Exhaustive search with cheap-constraint-first pruning; throws
/// BudgetExceeded when the raw size is over spec.budget. jobs > 1 partitions
/// the space by the first point's multiset; output is deterministic.
SearchResult enumerate_feasible(const SearchSpec& spec, unsigned jobs = 1);

/// Same contract as enumerate_feasible, but with no pruning and no
/// search-order shortcuts: every ordered candidate tuple is tested against
/// the full constraint report. Validation path for enumerate_feasible.
SearchResult brute_oracle(const SearchSpec& spec);

/// Canonical-set equality of the feasible lists.
bool same_feasible_set(const SearchResult& a, const SearchResult& b);

// Known-good generators.
struct ExampleRecipe {
  enum class Kind { Sphere, Projective, Product };
  Kind kind = Kind::Sphere;
  std::int64_t sphere_speed = 1;                 // Sphere: rotation speed a >= 1
  std::vector<std::int64_t> projective_params;   // Projective: pairwise distinct a_i
  std::vector<ExampleRecipe> factors;            // Product

  static ExampleRecipe sphere(std::int64_t a);
  static ExampleRecipe projective(std::vector<std::int64_t> params);
  static ExampleRecipe product(std::vector<ExampleRecipe> factors);
};

/// sphere(a): two points {a}, {-a}. projective(a_0..a_n): point i carries
/// weights {a_j - a_i : j != i}. product: cartesian fixed points, weights
/// concatenated, half-dimensions added.
FixedPointData generate_example(const ExampleRecipe& recipe);

struct ProbeBounds {
  std::size_t point_count = 0;  // used by probes parameterized over k
  std::size_t max_half_dim = 1;
  std::int64_t max_weight = 1;
  Integer budget = Integer(100000000);
  bool effective_only = true;
};

struct ProbeResult {
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<FixedPointData> counterexamples;
  std::vector<FixedPointData> listing;  // three-point-list exploration output
};

/// Probes: "no-one-point", "two-point-classification", "odd-count-parity",
/// "somewhere-injective-bound", and the exploratory "three-point-list"
/// (which reports configurations without asserting anything).
ProbeResult theorem_probe(const std::string& name, const ProbeBounds& bounds,
                          unsigned jobs = 1);

}  // namespace s1fp
