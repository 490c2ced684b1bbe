#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "s1fp/localization.hpp"
#include "s1fp/model.hpp"
#include "s1fp/verdict.hpp"

namespace s1fp {

// A_k = sum of 1/Lambda_p over points with c1 value k, for each k in the
// range of the Chern class map.
using GroupedSums = std::map<std::int64_t, Rational>;

GroupedSums grouped_sums(const FixedPointData& data);

struct ConstraintEntry {
  std::string id;
  Verdict verdict;
  std::string witness;
};

struct ConstraintReport {
  bool feasible = false;
  std::vector<ConstraintEntry> entries;
  std::vector<std::string> advisories;

  std::string to_json() const;
  /// Human-readable table (one line per constraint plus advisories).
  std::string to_table() const;
};

// Individual necessary conditions. Each is a pure function of the data.

/// C-AK: when c1 takes at most n distinct values, every grouped sum vanishes.
CheckResult check_grouped_sums(const FixedPointData& data);

/// C-VAND: cross-check of C-AK. The Vandermonde system built from the
/// distinct c1 values applied to the grouped sums must reproduce the
/// localization integrals of c1^j, j < l — two independent computation paths.
CheckResult check_vandermonde_equivalence(const FixedPointData& data);

/// C-IDX: #{p : lambda_p = i} = #{p : lambda_p = n-i} for all i.
CheckResult check_index_symmetry(const FixedPointData& data);

/// C-BAL: total multiplicity of ell equals total multiplicity of -ell.
CheckResult check_weight_balance(const FixedPointData& data);

/// C-C1: the c1 values sum to zero over all points.
CheckResult check_c1_sum(const FixedPointData& data);

/// C-PAR: an odd number of fixed points forces even half-dimension.
CheckResult check_parity(const FixedPointData& data);

/// C-2PT: the full two-fixed-point battery (applies only when k = 2).
CheckResult check_two_point_claims(const FixedPointData& data);

struct InjectivityClassification {
  bool somewhere_injective = false;
  std::int64_t singleton_value = 0;  // a c1 value with a singleton fiber, when any
  CheckResult result;                // C-INJ verdict
};

/// C-INJ: a somewhere injective c1 map needs at least n+1 fixed points.
InjectivityClassification check_somewhere_injective(const FixedPointData& data);

/// C-DEG: vanishing of every localization integral of half-degree < n
/// (capped at max_total_degree), plus the grouped-sum variant for monomials
/// whose value range is small enough. One result per monomial.
std::vector<std::pair<ChernMonomial, CheckResult>> check_degree_battery(
    const FixedPointData& data, std::size_t max_total_degree);

/// Run the whole battery in fixed order and aggregate. Feasible iff nothing
/// fails. Advisories (gcd > 1, fixed-point-count bound without the
/// injectivity hypothesis, non-integral top-degree integrals) never affect
/// feasibility.
ConstraintReport run_all(const FixedPointData& data);

/// Ids in the order run_all registers them.
const std::vector<std::string>& constraint_ids();

/// Short-circuit feasibility: id of the first failing constraint in run_all
/// order, or empty string when feasible. Agrees with run_all().feasible.
std::string first_failing_constraint(const FixedPointData& data);

}  // namespace s1fp
