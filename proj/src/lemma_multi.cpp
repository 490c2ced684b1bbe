#include "s1fp/lemma_multi.hpp"

#include <algorithm>
#include <map>

namespace s1fp {

SigmaHypotheses evaluate_hypotheses(const WeightMultiset& sigma) {
  if (sigma.empty()) throw ValidationError("sigma must be nonempty");

  SigmaHypotheses h;

  h.opposite_free = true;
  for (std::int64_t m : sigma.distinct_magnitudes()) {
    if (sigma.multiplicity(m) > 0 && sigma.multiplicity(-m) > 0) {
      h.opposite_free = false;
      break;
    }
  }

  h.self_neg_congruent = true;
  WeightMultiset neg = sigma.negated();
  for (std::int64_t m : sigma.distinct_magnitudes()) {
    if (m == 1) continue;  // mod 1 is vacuous
    if (sigma.residues_mod(m) != neg.residues_mod(m)) {
      h.self_neg_congruent = false;
      break;
    }
  }

  h.zero_sum = sigma.sum() == 0;

  std::int64_t top = sigma.distinct_magnitudes().back();
  h.apex = sigma.multiplicity(top) == 1 && sigma.multiplicity(-top) == 0;
  if (h.apex) h.apex_value = top;

  return h;
}

std::optional<SigmaPattern> classify(const WeightMultiset& sigma) {
  if (sigma.size() != 3) return std::nullopt;
  const auto& w = sigma.values();  // ascending
  // Need two negatives and one positive with zero sum.
  if (!(w[0] < 0 && w[1] < 0 && w[2] > 0)) return std::nullopt;
  if (w[0] + w[1] + w[2] != 0) return std::nullopt;
  return SigmaPattern{-w[1], -w[0]};
}

std::optional<SlotPairing> build_pairings(const WeightMultiset& sigma, std::int64_t modulus) {
  if (modulus <= 0) throw ValidationError("modulus must be positive");
  const auto& w = sigma.values();
  const std::size_t n = w.size();
  SlotPairing pairing(n, n);  // n = unassigned sentinel

  // Slots grouped by residue class, in sorted slot order.
  std::map<std::int64_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i)
    classes[((w[i] % modulus) + modulus) % modulus].push_back(i);

  for (auto& [r, slots] : classes) {
    std::int64_t comp = (modulus - r) % modulus;
    if (comp == r) {
      // Self-complementary class: pair adjacent slots, odd one out is fixed.
      std::size_t i = 0;
      for (; i + 1 < slots.size(); i += 2) {
        pairing[slots[i]] = slots[i + 1];
        pairing[slots[i + 1]] = slots[i];
      }
      if (i < slots.size()) pairing[slots[i]] = slots[i];
    } else if (r < comp) {
      auto it = classes.find(comp);
      std::size_t other_count = it == classes.end() ? 0 : it->second.size();
      if (slots.size() != other_count) return std::nullopt;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        pairing[slots[i]] = it->second[i];
        pairing[it->second[i]] = slots[i];
      }
    }
    // r > comp handled from the complementary class.
  }

  for (std::size_t i = 0; i < n; ++i)
    if (pairing[i] == n) return std::nullopt;
  return pairing;
}

namespace {
void enumerate_rec(std::int64_t max_apex, std::size_t max_size, std::int64_t min_value,
                   std::vector<std::int64_t>& current, std::vector<WeightMultiset>& out) {
  if (!current.empty()) {
    WeightMultiset sigma(current);
    if (evaluate_hypotheses(sigma).all()) out.push_back(std::move(sigma));
  }
  if (current.size() == max_size) return;
  for (std::int64_t v = min_value; v <= max_apex; ++v) {
    if (v == 0) continue;
    current.push_back(v);
    enumerate_rec(max_apex, max_size, v, current, out);
    current.pop_back();
  }
}
}  // namespace

std::vector<WeightMultiset> enumerate_satisfying(std::int64_t max_apex, std::size_t max_size) {
  if (max_apex < 1 || max_size < 1)
    throw ValidationError("max_apex and max_size must be >= 1");
  std::vector<WeightMultiset> out;
  std::vector<std::int64_t> current;
  enumerate_rec(max_apex, max_size, -max_apex, current, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace s1fp
