#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "s1fp/constraints.hpp"
#include "s1fp/lemma_multi.hpp"
#include "s1fp/localization.hpp"
#include "s1fp/model.hpp"
#include "s1fp/search.hpp"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw s1fp::ValidationError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

s1fp::Integer default_budget(const s1fp::Integer& fallback) {
  if (const char* env = std::getenv("S1FP_BUDGET")) {
    try {
      return s1fp::Integer(env);
    } catch (const std::invalid_argument&) {
      throw s1fp::ValidationError(std::string("S1FP_BUDGET is not an integer: ") + env);
    }
  }
  return fallback;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  for (const std::string& part : split(text, ',')) values.push_back(std::stoll(part));
  return values;
}

int cmd_check(const std::string& path, const std::string& constraint_filter, bool json) {
  s1fp::FixedPointData data = s1fp::data_from_json(read_input(path));
  s1fp::ConstraintReport report = s1fp::run_all(data);

  if (!constraint_filter.empty()) {
    std::vector<std::string> wanted = split(constraint_filter, ',');
    for (const std::string& id : wanted) {
      bool known = false;
      for (const std::string& registered : s1fp::constraint_ids())
        known = known || registered == id;
      if (!known) throw s1fp::ValidationError("unknown constraint id '" + id + "'");
    }
    std::vector<s1fp::ConstraintEntry> kept;
    for (s1fp::ConstraintEntry& e : report.entries)
      if (std::find(wanted.begin(), wanted.end(), e.id) != wanted.end())
        kept.push_back(std::move(e));
    report.entries = std::move(kept);
    report.feasible = true;
    for (const s1fp::ConstraintEntry& e : report.entries)
      if (e.verdict == s1fp::Verdict::Fail) report.feasible = false;
  }

  std::cout << (json ? report.to_json() + "\n" : report.to_table());
  return report.feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_integrate(const std::string& path, const std::string& cls, bool json) {
  s1fp::FixedPointData data = s1fp::data_from_json(read_input(path));
  s1fp::ChernMonomial mono = s1fp::ChernMonomial::parse(cls, data.half_dim());
  s1fp::LaurentPoly value = s1fp::abbv_integral(data, mono);
  if (json) {
    nlohmann::json doc;
    doc["class"] = mono.str();
    doc["result"] = value.str();
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return kExitFeasible;
}

int cmd_enumerate(std::size_t points, std::size_t dim, std::int64_t max_weight,
                  const std::string& budget_text, unsigned jobs, bool no_effective) {
  if (dim % 2 != 0 || dim == 0)
    throw s1fp::ValidationError("--dim takes the even manifold dimension 2n");
  s1fp::SearchSpec spec;
  spec.point_count = points;
  spec.half_dim = dim / 2;
  spec.max_weight = max_weight;
  spec.effective_only = !no_effective;
  spec.budget = budget_text.empty() ? default_budget(spec.budget) : s1fp::Integer(budget_text);

  s1fp::SearchResult result = s1fp::enumerate_feasible(spec, jobs);
  for (const s1fp::FixedPointData& data : result.feasible)
    std::cout << s1fp::data_to_json(data) << "\n";

  nlohmann::json trailer;
  trailer["summary"] = {{"feasible", result.feasible.size()},
                        {"raw_candidates", result.raw_candidates.get_str()},
                        {"examined", result.examined}};
  nlohmann::json pruned = nlohmann::json::object();
  for (const auto& [id, count] : result.pruned) pruned[id] = count;
  trailer["summary"]["pruned"] = pruned;
  std::cout << trailer.dump() << "\n";
  return kExitFeasible;
}

int cmd_lemma_multi(std::int64_t max_n, std::size_t max_size) {
  for (const s1fp::WeightMultiset& sigma : s1fp::enumerate_satisfying(max_n, max_size)) {
    std::cout << sigma.str();
    if (auto pattern = s1fp::classify(sigma))
      std::cout << " (a,b)=(" << pattern->a << "," << pattern->b << ")";
    else
      std::cout << " (no pattern)";  // would contradict the classification lemma
    std::cout << "\n";
  }
  return kExitFeasible;
}

s1fp::ExampleRecipe parse_recipe(const std::string& family, const std::string& params) {
  if (family == "sphere") return s1fp::ExampleRecipe::sphere(std::stoll(params));
  if (family == "cpn") return s1fp::ExampleRecipe::projective(parse_int_list(params));
  if (family == "product") {
    std::vector<s1fp::ExampleRecipe> factors;
    for (const std::string& part : split(params, ';')) {
      auto colon = part.find(':');
      if (colon == std::string::npos)
        throw s1fp::ValidationError("product factor must look like family:params, got '" +
                                    part + "'");
      factors.push_back(parse_recipe(part.substr(0, colon), part.substr(colon + 1)));
    }
    return s1fp::ExampleRecipe::product(std::move(factors));
  }
  throw s1fp::ValidationError("unknown family '" + family + "'");
}

int cmd_example(const std::string& family, const std::string& params) {
  std::cout << s1fp::data_to_json(s1fp::generate_example(parse_recipe(family, params)))
            << "\n";
  return kExitFeasible;
}

int cmd_probe(const std::string& name, std::size_t max_dim, std::int64_t max_weight,
              std::size_t points, const std::string& budget_text, unsigned jobs,
              bool no_effective) {
  if (max_dim % 2 != 0 || max_dim == 0)
    throw s1fp::ValidationError("--max-dim takes the even manifold dimension 2n");
  s1fp::ProbeBounds bounds;
  bounds.max_half_dim = max_dim / 2;
  bounds.max_weight = max_weight;
  bounds.point_count = points;
  bounds.effective_only = !no_effective;
  bounds.budget = budget_text.empty() ? default_budget(bounds.budget) : s1fp::Integer(budget_text);

  s1fp::ProbeResult result = s1fp::theorem_probe(name, bounds, jobs);
  std::cout << result.name << ": " << (result.pass ? "pass" : "FAIL") << " — "
            << result.detail << "\n";
  for (const s1fp::FixedPointData& c : result.counterexamples)
    std::cout << "counterexample: " << s1fp::data_to_json(c) << "\n";
  for (const s1fp::FixedPointData& c : result.listing)
    std::cout << s1fp::data_to_json(c) << "\n";
  return result.pass ? kExitFeasible : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact feasibility checker for fixed-point data of symplectic circle actions"};
  app.require_subcommand(1);

  std::string path, constraint_filter, cls, family, params, probe_name, budget_text;
  bool json = false, no_effective = false;
  std::size_t points = 1, probe_points = 0, dim = 2, max_dim = 2, max_size = 3;
  std::int64_t max_weight = 1, max_n = 1;
  unsigned jobs = 1;

  auto* check = app.add_subcommand("check", "Run the constraint suite on a data file");
  check->add_option("file", path, "JSON data file ('-' for stdin)")->required();
  check->add_option("--constraints", constraint_filter, "Comma list of constraint ids to run");
  check->add_flag("--json", json, "Emit the report as JSON");

  auto* integrate = app.add_subcommand("integrate", "Evaluate a localization integral");
  integrate->add_option("file", path, "JSON data file ('-' for stdin)")->required();
  integrate->add_option("--class", cls, "Chern monomial, e.g. c1^2*c3")->required();
  integrate->add_flag("--json", json, "Emit the result as JSON");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustively search for feasible data");
  enumerate->add_option("--points", points, "Number of fixed points k")->required();
  enumerate->add_option("--dim", dim, "Manifold dimension 2n")->required();
  enumerate->add_option("--max-weight", max_weight, "Weight bound W")->required();
  enumerate->add_option("--budget", budget_text, "Raw candidate budget");
  enumerate->add_option("--jobs", jobs, "Parallel workers");
  enumerate->add_flag("--no-effective-filter", no_effective,
                      "Keep candidates whose overall weight gcd exceeds 1");

  auto* lemma = app.add_subcommand("lemma-multi", "Enumerate multisets meeting the four hypotheses");
  lemma->add_option("--max-n", max_n, "Apex bound")->required();
  lemma->add_option("--max-size", max_size, "Multiset size bound")->required();

  auto* example = app.add_subcommand("example", "Emit known-good fixed-point data");
  example->add_option("--family", family, "sphere | cpn | product")->required();
  example->add_option("--params", params, "Family parameters")->required();

  auto* probe = app.add_subcommand("probe", "Check a theorem over a bounded range");
  probe->add_option("--name", probe_name,
                    "no-one-point | two-point-classification | odd-count-parity | "
                    "somewhere-injective-bound | three-point-list")
      ->required();
  probe->add_option("--max-dim", max_dim, "Largest manifold dimension 2n")->required();
  probe->add_option("--max-weight", max_weight, "Weight bound W")->required();
  probe->add_option("--points", probe_points, "Point count for parameterized probes");
  probe->add_option("--budget", budget_text, "Raw candidate budget");
  probe->add_option("--jobs", jobs, "Parallel workers");
  probe->add_flag("--no-effective-filter", no_effective,
                  "Keep candidates whose overall weight gcd exceeds 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(path, constraint_filter, json);
    if (integrate->parsed()) return cmd_integrate(path, cls, json);
    if (enumerate->parsed())
      return cmd_enumerate(points, dim, max_weight, budget_text, jobs, no_effective);
    if (lemma->parsed()) return cmd_lemma_multi(max_n, max_size);
    if (example->parsed()) return cmd_example(family, params);
    if (probe->parsed())
      return cmd_probe(probe_name, max_dim, max_weight, probe_points, budget_text, jobs,
                       no_effective);
  } catch (const s1fp::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const s1fp::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const s1fp::MonomialParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
