#include "repbasis/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace repbasis {

bool InvariantReport::passed() const { return failures() == 0; }

std::size_t InvariantReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

const CheckResult* InvariantReport::first_failure() const {
  auto it = std::find_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
  return it == checks.end() ? nullptr : &*it;
}

void InvariantReport::append(InvariantReport other) {
  checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                std::make_move_iterator(other.checks.end()));
}

namespace {

CheckResult ok(std::string name, std::optional<std::size_t> stage) {
  return CheckResult{std::move(name), stage, true, std::nullopt, {}};
}

CheckResult fail(std::string name, std::optional<std::size_t> stage, std::int64_t witness,
                 std::string detail) {
  return CheckResult{std::move(name), stage, false, witness, std::move(detail)};
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedTrace, what);
}

void check_layout(const ConstructionTrace& trace) {
  if (trace.stages.empty()) malformed("trace has no stages");
  for (std::size_t i = 0; i < trace.stages.size(); ++i) {
    const StageRecord& s = trace.stages[i];
    const std::size_t index = i + 1;
    if (s.index != index) {
      malformed("stage " + std::to_string(index) + " carries index " + std::to_string(s.index));
    }
    const StageKind expected = index == 1       ? StageKind::kBase
                               : index % 2 == 0 ? StageKind::kTargetExtension
                                                : StageKind::kDensification;
    if (s.kind != expected) {
      malformed("stage " + std::to_string(index) + " has kind " + std::string(to_string(s.kind)));
    }
    if ((index % 2 == 1) != s.checkpoint.has_value()) {
      malformed("stage " + std::to_string(index) +
                (s.checkpoint ? " is even but has a checkpoint" : " is odd but has no checkpoint"));
    }
    if (s.checkpoint && *s.checkpoint < 1) {
      malformed("stage " + std::to_string(index) + " has a nonpositive checkpoint");
    }
  }
}

constexpr std::size_t kMaxCoverageClaim = 1'000'000;

// Stage s must cover u_1 .. u_{floor(s/2)+1}.
std::size_t required_prefix(std::size_t stage) { return stage / 2 + 1; }

CheckResult check_zero_absent(const StageRecord& s) {
  if (s.set.contains_zero()) return fail("zero_absent", s.index, 0, "0 belongs to the stage set");
  return ok("zero_absent", s.index);
}

CheckResult check_rep_bounded(const StageRecord& s, const RepTarget& f) {
  if (s.set.empty()) return ok("rep_le_target", s.index);
  const RepProfile profile = rep_profile(s.set);
  for (const auto& [n, count] : profile.entries()) {
    if (!f.at(n).admits(count)) {
      return fail("rep_le_target", s.index, n,
                  "r(n) = " + std::to_string(count) + " exceeds f(n)");
    }
  }
  return ok("rep_le_target", s.index);
}

CheckResult check_prefix_coverage(const std::string& name, const StageRecord& s,
                                  std::span<const std::int64_t> prefix) {
  for (std::int64_t n : std::set<std::int64_t>(prefix.begin(), prefix.end())) {
    const std::uint64_t need = prefix_occurrences(prefix, n);
    const std::uint64_t have = rep_function(s.set, n);
    if (have < need) {
      return fail(name, s.index, n,
                  "r(n) = " + std::to_string(have) + " < " + std::to_string(need) +
                      " occurrences in u_1..u_" + std::to_string(prefix.size()));
    }
  }
  return ok(name, s.index);
}

CheckResult check_density(const StageRecord& s, const PhiSpec& phi) {
  const std::int64_t x = *s.checkpoint;
  const std::size_t count = counting(s.set, -x, x);
  if (!beats_density(count, x, phi)) {
    return fail("density", s.index, x,
                "A(-x, x) = " + std::to_string(count) + " <= sqrt(x)/phi(x) = " +
                    std::to_string(static_cast<double>(density_bound(phi, x))));
  }
  return ok("density", s.index);
}

CheckResult check_nesting(const StageRecord& prev, const StageRecord& s) {
  for (std::int64_t a : prev.set) {
    if (!s.set.contains(a)) {
      return fail("nesting", s.index, a, "element of the previous stage is missing");
    }
  }
  return ok("nesting", s.index);
}

CheckResult check_added(const FiniteBasis* prev, const StageRecord& s) {
  for (std::int64_t a : s.added) {
    if (prev != nullptr && prev->contains(a)) {
      return fail("added_consistent", s.index, a, "added element already in the previous stage");
    }
    if (!s.set.contains(a)) {
      return fail("added_consistent", s.index, a, "added element missing from the stage set");
    }
  }
  for (std::int64_t a : s.set) {
    const bool listed = std::find(s.added.begin(), s.added.end(), a) != s.added.end();
    if (!listed && (prev == nullptr || !prev->contains(a))) {
      return fail("added_consistent", s.index, a, "element appears without being listed as added");
    }
  }
  return ok("added_consistent", s.index);
}

}  // namespace

InvariantReport check_invariants(const ConstructionTrace& trace) {
  check_layout(trace);
  InvariantReport report;
  const std::size_t stages = trace.stages.size();
  const std::vector<std::int64_t> u = target_prefix(trace.f, required_prefix(stages));

  {
    const auto own = target_prefix(trace.f, trace.u_prefix.size());
    auto mismatch = std::mismatch(own.begin(), own.end(), trace.u_prefix.begin());
    if (mismatch.first != own.end()) {
      report.checks.push_back(fail("u_prefix_matches", std::nullopt, *mismatch.second,
                                   "recorded u-prefix differs from the enumeration of f"));
    } else {
      report.checks.push_back(ok("u_prefix_matches", std::nullopt));
    }
  }

  std::optional<std::int64_t> last_checkpoint;
  for (std::size_t i = 0; i < stages; ++i) {
    const StageRecord& s = trace.stages[i];
    const StageRecord* prev = i > 0 ? &trace.stages[i - 1] : nullptr;

    report.checks.push_back(check_zero_absent(s));
    report.checks.push_back(check_rep_bounded(s, trace.f));
    report.checks.push_back(check_prefix_coverage(
        "prefix_coverage", s, std::span(u).first(required_prefix(s.index))));
    if (s.m_covered > 0) {
      if (s.m_covered > kMaxCoverageClaim) {
        report.checks.push_back(fail("coverage_claim", s.index,
                                     static_cast<std::int64_t>(s.m_covered),
                                     "claimed coverage is implausibly long"));
      } else {
        const auto claimed = target_prefix(trace.f, s.m_covered);
        report.checks.push_back(check_prefix_coverage("coverage_claim", s, claimed));
      }
    }
    if (s.checkpoint) {
      report.checks.push_back(check_density(s, trace.phi));
      if (last_checkpoint) {
        if (*s.checkpoint > *last_checkpoint) {
          report.checks.push_back(ok("checkpoint_increasing", s.index));
        } else {
          report.checks.push_back(fail("checkpoint_increasing", s.index, *s.checkpoint,
                                       "checkpoint does not exceed its predecessor " +
                                           std::to_string(*last_checkpoint)));
        }
      }
      last_checkpoint = s.checkpoint;
    }
    if (prev != nullptr) report.checks.push_back(check_nesting(*prev, s));
    report.checks.push_back(check_added(prev != nullptr ? &prev->set : nullptr, s));
  }
  return report;
}

// ------------------------------------------------------------ decomposition

namespace {

using SumCounts = std::map<std::int64_t, std::uint64_t>;

SumCounts self_sums(std::span<const std::int64_t> v) {
  SumCounts out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) ++out[checked::add(v[i], v[j])];
  }
  return out;
}

SumCounts cross_sums(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  SumCounts out;
  for (std::int64_t x : a) {
    for (std::int64_t y : b) ++out[checked::add(x, y)];
  }
  return out;
}

std::optional<std::int64_t> common_key(const SumCounts& p, const SumCounts& q,
                                       std::optional<std::int64_t> allowed = {}) {
  for (const auto& [n, c] : p) {
    if (allowed && n == *allowed) continue;
    if (q.contains(n)) return n;
  }
  return std::nullopt;
}

std::optional<std::int64_t> repeated_key(const SumCounts& p) {
  for (const auto& [n, c] : p) {
    if (c > 1) return n;
  }
  return std::nullopt;
}

}  // namespace

InvariantReport check_decomposition(const FiniteBasis& a, std::span<const std::int64_t> added,
                                    StageKind kind, std::optional<std::size_t> stage) {
  InvariantReport report;
  std::vector<std::int64_t> extra(added.begin(), added.end());
  std::sort(extra.begin(), extra.end());

  const SumCounts two_a = self_sums(a.elements());
  const SumCounts mixed = cross_sums(a.elements(), extra);
  const SumCounts two_extra = self_sums(extra);

  // For an extension pair {p, q} the sum p + q is the target being covered;
  // it may already lie in 2A and then gains one representation.
  std::optional<std::int64_t> target;
  if (kind == StageKind::kTargetExtension) {
    if (extra.size() != 2) {
      report.checks.push_back(fail("extension_pair", stage,
                                   static_cast<std::int64_t>(extra.size()),
                                   "a target extension adds exactly two elements"));
      return report;
    }
    target = checked::add(extra[0], extra[1]);
  }

  auto disjoint = [&](const char* name, const SumCounts& p, const SumCounts& q,
                      std::optional<std::int64_t> allowed) {
    if (auto n = common_key(p, q, allowed)) {
      report.checks.push_back(fail(name, stage, *n, "sumset parts intersect"));
    } else {
      report.checks.push_back(ok(name, stage));
    }
  };
  disjoint("disjoint_2A_mixed", two_a, mixed, std::nullopt);
  disjoint("disjoint_2A_added", two_a, two_extra, target);
  disjoint("disjoint_mixed_added", mixed, two_extra, std::nullopt);

  auto unique = [&](const char* name, const SumCounts& p) {
    if (auto n = repeated_key(p)) {
      report.checks.push_back(fail(name, stage, *n, "sum represented more than once in its part"));
    } else {
      report.checks.push_back(ok(name, stage));
    }
  };
  unique("unique_mixed", mixed);
  unique("unique_added", two_extra);

  // Predicted r_B: r_A on 2A, +1 at the extension target, 1 on the rest of 2B.
  SumCounts predicted = two_a;
  for (const auto& part : {&mixed, &two_extra}) {
    for (const auto& [n, c] : *part) {
      if (target && n == *target) continue;
      predicted[n] = 1;
    }
  }
  if (target) predicted[*target] = (two_a.contains(*target) ? two_a.at(*target) : 0) + 1;

  const FiniteBasis b = a.united(extra);
  if (b.empty()) {
    report.checks.push_back(ok("piecewise_formula", stage));
    return report;
  }
  const RepProfile actual = rep_profile(b);
  std::optional<std::int64_t> mismatch;
  for (const auto& [n, c] : actual.entries()) {
    auto it = predicted.find(n);
    if (it == predicted.end() || it->second != c) {
      mismatch = n;
      break;
    }
  }
  if (!mismatch) {
    for (const auto& [n, c] : predicted) {
      if (actual.at(n) != c) {
        mismatch = n;
        break;
      }
    }
  }
  if (mismatch) {
    report.checks.push_back(fail("piecewise_formula", stage, *mismatch,
                                 "predicted r_B(n) = " + std::to_string(predicted[*mismatch]) +
                                     ", brute force gives " + std::to_string(actual.at(*mismatch))));
  } else {
    report.checks.push_back(ok("piecewise_formula", stage));
  }
  return report;
}

bool upper_bound_check(const FiniteBasis& a, std::int64_t x, std::uint64_t r) {
  const auto k = static_cast<unsigned __int128>(counting(a, -x, x));
  const unsigned __int128 lhs = k * (k + 1) / 2;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(r) *
                                (4 * static_cast<unsigned __int128>(x) + 1);
  return lhs <= rhs;
}

// ------------------------------------------------------------ equality

InvariantReport check_equality_coverage(const ConstructionTrace& trace) {
  check_layout(trace);
  InvariantReport report;
  const StageRecord& last = trace.stages.back();
  const std::vector<std::int64_t> covered = target_prefix(trace.f, last.m_covered);
  const std::set<std::int64_t> seen(covered.begin(), covered.end());

  for (std::int64_t n : seen) {
    const RepValue fn = trace.f.at(n);
    if (fn.is_infinite()) continue;

    // Nondecreasing and bounded by f(n) across stages.
    std::uint64_t previous = 0;
    for (const StageRecord& s : trace.stages) {
      const std::uint64_t r = rep_function(s.set, n);
      if (r < previous || !fn.admits(r)) {
        report.checks.push_back(fail("sandwich", s.index, n,
                                     "r(n) left the interval [previous, f(n)]"));
        break;
      }
      previous = r;
    }

    if (prefix_occurrences(covered, n) != fn.value()) continue;
    const std::uint64_t r = rep_function(last.set, n);
    if (r != fn.value()) {
      report.checks.push_back(fail("equality", last.index, n,
                                   "r(n) = " + std::to_string(r) + " but f(n) = " +
                                       std::to_string(fn.value())));
    } else {
      report.checks.push_back(ok("equality", last.index));
    }
  }

  const std::int64_t w = trace.f.window();
  for (std::int64_t n = -w; n <= w; ++n) {
    if (trace.f.at(n) != RepValue(0)) continue;
    bool clean = true;
    for (const StageRecord& s : trace.stages) {
      if (rep_function(s.set, n) != 0) {
        report.checks.push_back(fail("zero_target", s.index, n, "r(n) > 0 where f(n) = 0"));
        clean = false;
        break;
      }
    }
    if (clean) report.checks.push_back(ok("zero_target", std::nullopt));
  }
  return report;
}

InvariantReport verify_trace(const ConstructionTrace& trace) {
  InvariantReport report = check_invariants(trace);
  for (std::size_t i = 1; i < trace.stages.size(); ++i) {
    const StageRecord& s = trace.stages[i];
    if (s.added.empty()) continue;
    report.append(check_decomposition(trace.stages[i - 1].set, s.added, s.kind, s.index));
  }
  report.append(check_equality_coverage(trace));
  return report;
}

}  // namespace repbasis
