#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "s1fp/weights.hpp"

namespace s1fp {

// The four hypotheses of the multiset classification lemma, evaluated on a
// nonempty multiset of nonzero integers.
struct SigmaHypotheses {
  bool opposite_free = false;      // N(ell)*N(-ell) = 0 for all ell
  bool self_neg_congruent = false; // residues of S and -S agree mod |a| for all a in S
  bool zero_sum = false;
  bool apex = false;               // max magnitude attained by a unique positive element
  std::optional<std::int64_t> apex_value;

  bool all() const { return opposite_free && self_neg_congruent && zero_sum && apex; }
};

// Canonical (a, b) with a <= b naming the multiset {a+b, -a, -b}.
struct SigmaPattern {
  std::int64_t a = 0;
  std::int64_t b = 0;

  WeightMultiset multiset() const { return WeightMultiset({a + b, -a, -b}); }
  bool operator==(const SigmaPattern&) const = default;
};

/// Evaluate all four hypotheses; empty input is rejected.
SigmaHypotheses evaluate_hypotheses(const WeightMultiset& sigma);

/// (a, b) with 1 <= a <= b iff sigma is exactly {a+b, -a, -b}; nullopt otherwise.
std::optional<SigmaPattern> classify(const WeightMultiset& sigma);

// Involution on element slots pairing each value with one whose sum is
// divisible by the modulus. pairing[i] = j means slots i and j are matched
// (i == j for a fixed slot); always symmetric.
using SlotPairing = std::vector<std::size_t>;

/// Build such an involution (deterministic greedy matching on residue
/// classes, sorted slot order), or nullopt if none exists.
std::optional<SlotPairing> build_pairings(const WeightMultiset& sigma, std::int64_t modulus);

/// All multisets of nonzero integers in [-max_apex, max_apex], size 1..max_size,
/// satisfying all four hypotheses; canonical and sorted.
std::vector<WeightMultiset> enumerate_satisfying(std::int64_t max_apex, std::size_t max_size);

}  // namespace s1fp
