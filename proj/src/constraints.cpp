#include "s1fp/constraints.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "s1fp/lemma_multi.hpp"

namespace s1fp {

GroupedSums grouped_sums(const FixedPointData& data) {
  GroupedSums sums;
  for (const FixedPoint& p : data.points())
    sums[chern_one(p)] += reciprocal(weight_product(p));
  return sums;
}

CheckResult check_grouped_sums(const FixedPointData& data) {
  GroupedSums sums = grouped_sums(data);
  const std::size_t n = data.half_dim();
  if (sums.size() > n)
    return {Verdict::NotApplicable,
            "c1 takes " + std::to_string(sums.size()) + " > n = " + std::to_string(n) +
                " distinct values"};
  for (const auto& [k, a] : sums) {
    if (a != 0)
      return {Verdict::Fail, "A_" + std::to_string(k) + " = " + to_string(a) + " != 0"};
  }
  return {Verdict::Pass, "all " + std::to_string(sums.size()) + " grouped sums vanish"};
}

CheckResult check_vandermonde_equivalence(const FixedPointData& data) {
  GroupedSums sums = grouped_sums(data);
  const std::size_t n = data.half_dim();
  const std::size_t l = sums.size();
  if (l > n) return {Verdict::NotApplicable, "c1 range larger than n"};

  std::vector<std::int64_t> k_values;
  std::vector<Rational> a_values;
  for (const auto& [k, a] : sums) {
    k_values.push_back(k);
    a_values.push_back(a);
  }

  for (std::size_t j = 0; j < l; ++j) {
    // Row j of the Vandermonde system applied to (A_1..A_l).
    Rational lhs(0);
    for (std::size_t i = 0; i < l; ++i) {
      Integer power;
      Integer base(static_cast<long>(k_values[i]));
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(j));
      lhs += Rational(power) * a_values[i];
    }
    // Independent path: the localization integral of c1^j.
    std::vector<unsigned> exps(n, 0);
    exps[0] = static_cast<unsigned>(j);
    Rational rhs = abbv_integral(data, ChernMonomial(std::move(exps)))
                       .coeff(static_cast<long>(j) - static_cast<long>(n));
    if (lhs != rhs)
      return {Verdict::Fail, "row j=" + std::to_string(j) + ": B.A = " + to_string(lhs) +
                                 " but integral of c1^" + std::to_string(j) + " gives " +
                                 to_string(rhs)};
  }
  return {Verdict::Pass,
          "Vandermonde system agrees with localization on all " + std::to_string(l) + " rows"};
}

CheckResult check_index_symmetry(const FixedPointData& data) {
  const std::size_t n = data.half_dim();
  std::vector<std::size_t> counts(n + 1, 0);
  for (const FixedPoint& p : data.points()) ++counts[lambda_neg(p)];
  for (std::size_t i = 0; i <= n; ++i) {
    if (counts[i] != counts[n - i])
      return {Verdict::Fail, "#{lambda=" + std::to_string(i) + "} = " +
                                 std::to_string(counts[i]) + " but #{lambda=" +
                                 std::to_string(n - i) + "} = " + std::to_string(counts[n - i])};
  }
  return {Verdict::Pass, "index counts symmetric about n/2"};
}

CheckResult check_weight_balance(const FixedPointData& data) {
  std::map<std::int64_t, std::int64_t> net;  // ell > 0 -> N(ell) - N(-ell) totals
  for (const FixedPoint& p : data.points())
    for (std::int64_t w : p.weights.values()) net[w < 0 ? -w : w] += (w < 0 ? -1 : 1);
  for (const auto& [ell, delta] : net) {
    if (delta != 0)
      return {Verdict::Fail, "ell=" + std::to_string(ell) + ": N(+) - N(-) totals " +
                                 std::to_string(delta)};
  }
  return {Verdict::Pass, "multiplicities of ell and -ell balance for every ell"};
}

CheckResult check_c1_sum(const FixedPointData& data) {
  std::int64_t total = 0;
  for (const FixedPoint& p : data.points()) total += chern_one(p);
  if (total != 0)
    return {Verdict::Fail, "sum of c1 values = " + std::to_string(total) + " != 0"};
  return {Verdict::Pass, "c1 values sum to 0"};
}

CheckResult check_parity(const FixedPointData& data) {
  const std::size_t k = data.point_count();
  const std::size_t n = data.half_dim();
  if (k % 2 == 1 && n % 2 == 1)
    return {Verdict::Fail,
            "k = " + std::to_string(k) + " odd forces n even, but n = " + std::to_string(n)};
  return {Verdict::Pass, "k = " + std::to_string(k) + ", n = " + std::to_string(n)};
}

CheckResult check_two_point_claims(const FixedPointData& data) {
  if (data.point_count() != 2)
    return {Verdict::NotApplicable, "applies only to exactly two fixed points"};
  const std::size_t n = data.half_dim();
  const FixedPoint& p = data.points()[0];
  const FixedPoint& q = data.points()[1];

  // (a) The weight multisets are mutual negatives.
  if (p.weights != q.weights.negated())
    return {Verdict::Fail, "weights at '" + q.id + "' are not the negatives of those at '" +
                               p.id + "'"};

  // (e) Two fixed points only occur in dimension 2 or 6.
  if (n != 1 && n != 3)
    return {Verdict::Fail, "two fixed points with n = " + std::to_string(n) +
                               "; only n = 1 or n = 3 admit two-point data"};

  // (b) For n > 1 the grouped-sum lemma forces equal c1 values and
  // cancelling weight products.
  if (n > 1) {
    if (chern_one(p) != chern_one(q))
      return {Verdict::Fail, "c1('" + p.id + "') = " + std::to_string(chern_one(p)) +
                                 " != c1('" + q.id + "') = " + std::to_string(chern_one(q))};
    if (weight_product(p) + weight_product(q) != 0)
      return {Verdict::Fail, "Lambda_p + Lambda_q = " +
                                 Integer(weight_product(p) + weight_product(q)).get_str() +
                                 " != 0"};
  }

  // (c) Self-negative congruence of each weight set mod each of its elements.
  for (const FixedPoint* pt : {&p, &q}) {
    WeightMultiset neg = pt->weights.negated();
    for (std::int64_t m : pt->weights.distinct_magnitudes()) {
      if (m == 1) continue;
      if (pt->weights.residues_mod(m) != neg.residues_mod(m))
        return {Verdict::Fail, "weights at '" + pt->id + "' are not self-negative mod " +
                                   std::to_string(m)};
    }
  }

  // (d) In dimension 6 the weights must match the {a+b,-a,-b}/{a,b,-a-b} pattern.
  if (n == 3) {
    std::optional<SigmaPattern> pattern = classify(p.weights);
    if (!pattern) pattern = classify(q.weights);
    if (!pattern)
      return {Verdict::Fail,
              "neither point matches the {a+b,-a,-b} pattern: " + p.weights.str() + " / " +
                  q.weights.str()};
    return {Verdict::Pass, "pattern (a,b) = (" + std::to_string(pattern->a) + "," +
                               std::to_string(pattern->b) + ")"};
  }
  return {Verdict::Pass, "sphere pattern {a},{-a} with a = " +
                             std::to_string(std::abs(p.weights.values()[0]))};
}

InjectivityClassification check_somewhere_injective(const FixedPointData& data) {
  const std::size_t n = data.half_dim();
  const std::size_t k = data.point_count();
  std::map<std::int64_t, std::vector<const FixedPoint*>> fibers;
  for (const FixedPoint& p : data.points()) fibers[chern_one(p)].push_back(&p);

  InjectivityClassification out;
  for (const auto& [value, pts] : fibers) {
    if (pts.size() == 1) {
      out.somewhere_injective = true;
      out.singleton_value = value;
      break;
    }
  }
  if (!out.somewhere_injective) {
    out.result = {Verdict::NotApplicable, "no singleton c1 fiber"};
    return out;
  }
  if (k >= n + 1) {
    out.result = {Verdict::Pass, "somewhere injective with k = " + std::to_string(k) +
                                     " >= n+1 = " + std::to_string(n + 1)};
    return out;
  }
  // k <= n so the grouped-sum lemma applies, yet the singleton fiber
  // contributes A = 1/Lambda != 0.
  const FixedPoint* witness = fibers[out.singleton_value].front();
  out.result = {Verdict::Fail,
                "singleton fiber over " + std::to_string(out.singleton_value) + " gives A = 1/" +
                    weight_product(*witness).get_str() + " != 0 while k = " + std::to_string(k) +
                    " <= n = " + std::to_string(n)};
  return out;
}

std::vector<std::pair<ChernMonomial, CheckResult>> check_degree_battery(
    const FixedPointData& data, std::size_t max_total_degree) {
  const std::size_t n = data.half_dim();
  std::vector<std::pair<ChernMonomial, CheckResult>> results;
  for (std::size_t m = 0; m < n && m <= max_total_degree; ++m) {
    for (const ChernMonomial& mono : monomials_of_half_degree(n, m)) {
      CheckResult r = degree_vanishing_check(data, mono);
      if (r.verdict == Verdict::Pass && m >= 1) {
        // Grouped-sum variant: when the monomial takes at most n/m distinct
        // values over the fixed points, each grouped sum of 1/Lambda vanishes.
        std::map<Integer, Rational> groups;
        for (const FixedPoint& p : data.points())
          groups[monomial_value(p, mono)] += reciprocal(weight_product(p));
        if (groups.size() * m <= n) {
          for (const auto& [value, sum] : groups) {
            if (sum != 0) {
              r = {Verdict::Fail, "grouped sum over " + mono.str() + " = " + value.get_str() +
                                      " equals " + to_string(sum) + " != 0"};
              break;
            }
          }
        }
      }
      results.emplace_back(mono, std::move(r));
    }
  }
  return results;
}

namespace {

const std::vector<std::string> kConstraintOrder = {
    "C-C1", "C-BAL", "C-IDX", "C-PAR", "C-AK", "C-VAND", "C-INJ", "C-DEG", "C-2PT"};

CheckResult aggregate_degree_battery(const FixedPointData& data) {
  auto battery = check_degree_battery(data, data.half_dim() - 1);
  for (const auto& [mono, r] : battery)
    if (r.verdict == Verdict::Fail) return r;
  return {Verdict::Pass,
          "all " + std::to_string(battery.size()) + " low-degree integrals vanish"};
}

CheckResult run_one(const std::string& id, const FixedPointData& data) {
  if (id == "C-C1") return check_c1_sum(data);
  if (id == "C-BAL") return check_weight_balance(data);
  if (id == "C-IDX") return check_index_symmetry(data);
  if (id == "C-PAR") return check_parity(data);
  if (id == "C-AK") return check_grouped_sums(data);
  if (id == "C-VAND") return check_vandermonde_equivalence(data);
  if (id == "C-INJ") return check_somewhere_injective(data).result;
  if (id == "C-DEG") return aggregate_degree_battery(data);
  if (id == "C-2PT") return check_two_point_claims(data);
  throw std::invalid_argument("unknown constraint id '" + id + "'");
}

}  // namespace

const std::vector<std::string>& constraint_ids() { return kConstraintOrder; }

ConstraintReport run_all(const FixedPointData& data) {
  ConstraintReport report;
  report.feasible = true;
  for (const std::string& id : kConstraintOrder) {
    CheckResult r = run_one(id, data);
    if (r.verdict == Verdict::Fail) report.feasible = false;
    report.entries.push_back({id, r.verdict, std::move(r.witness)});
  }

  report.advisories.push_back(
      "necessary conditions only: a feasible verdict does not imply a realizing manifold");
  std::int64_t g = data.overall_gcd();
  if (g > 1)
    report.advisories.push_back("overall weight gcd is " + std::to_string(g) +
                                " > 1 (action would not be effective)");
  InjectivityClassification inj = check_somewhere_injective(data);
  if (!inj.somewhere_injective && data.point_count() < data.half_dim() + 1)
    report.advisories.push_back(
        "fixed point count k = " + std::to_string(data.point_count()) + " < n+1 = " +
        std::to_string(data.half_dim() + 1) +
        " without the somewhere-injective hypothesis (open question; not a failure)");
  for (const ChernMonomial& mono :
       monomials_of_half_degree(data.half_dim(), data.half_dim())) {
    Rational top = abbv_integral(data, mono).coeff(0);
    if (!is_integer(top))
      report.advisories.push_back("top-degree integral of " + mono.str() + " = " +
                                  to_string(top) + " is not an integer (advisory only)");
  }
  return report;
}

std::string first_failing_constraint(const FixedPointData& data) {
  for (const std::string& id : kConstraintOrder)
    if (run_one(id, data).verdict == Verdict::Fail) return id;
  return "";
}

std::string ConstraintReport::to_json() const {
  nlohmann::json doc;
  doc["feasible"] = feasible;
  doc["constraints"] = nlohmann::json::array();
  for (const ConstraintEntry& e : entries)
    doc["constraints"].push_back(
        {{"id", e.id}, {"verdict", verdict_name(e.verdict)}, {"witness", e.witness}});
  doc["advisories"] = advisories;
  return doc.dump();
}

std::string ConstraintReport::to_table() const {
  std::ostringstream out;
  for (const ConstraintEntry& e : entries) {
    out << e.id;
    for (std::size_t i = e.id.size(); i < 8; ++i) out << ' ';
    out << verdict_name(e.verdict);
    for (std::size_t i = std::string(verdict_name(e.verdict)).size(); i < 16; ++i) out << ' ';
    out << e.witness << '\n';
  }
  out << (feasible ? "feasible" : "infeasible") << '\n';
  for (const std::string& a : advisories) out << "note: " << a << '\n';
  return out.str();
}

}  // namespace s1fp
