#pragma once

// Brute-force oracles for the staged construction. Everything here is
// re-derived from stage sets, checkpoints and f alone; none of the
// construction's intermediate constants are consulted.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repbasis/construct.hpp"

namespace repbasis {

struct CheckResult {
  std::string name;
  std::optional<std::size_t> stage;
  bool pass = true;
  std::optional<std::int64_t> witness;
  std::string detail;
};

struct InvariantReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  const CheckResult* first_failure() const;
  void append(InvariantReport other);
};

// Induction conditions per stage: r <= f, prefix coverage, density at each
// checkpoint, 0 excluded; plus nesting, checkpoint growth and bookkeeping.
// Throws MALFORMED_TRACE when the stage layout itself is unusable.
InvariantReport check_invariants(const ConstructionTrace& trace);

// Splits 2(A ∪ added) into 2A, A + added and added + added, checks that the
// parts are pairwise disjoint (the extension pair's own sum excepted), that
// sums in the last two parts are uniquely represented, and that the
// piecewise formula for r_B equals the brute-force profile.
InvariantReport check_decomposition(const FiniteBasis& a, std::span<const std::int64_t> added,
                                    StageKind kind, std::optional<std::size_t> stage = {});

// k(k+1)/2 <= r(4x+1) for k = A(-x, x).
bool upper_bound_check(const FiniteBasis& a, std::int64_t x, std::uint64_t r);

// Exact equality r(n) = f(n) for every n whose target-sequence occurrences
// are exhausted inside the final stage's covered prefix, zero counts where
// f vanishes, and monotone approach to f(n) across stages.
InvariantReport check_equality_coverage(const ConstructionTrace& trace);

// check_invariants + check_decomposition on every non-base stage +
// check_equality_coverage.
InvariantReport verify_trace(const ConstructionTrace& trace);

}  // namespace repbasis
