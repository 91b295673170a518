#include "repbasis/construct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "repbasis/sidon.hpp"

namespace repbasis {

std::string_view to_string(StageKind kind) {
  switch (kind) {
    case StageKind::kBase: return "BASE";
    case StageKind::kTargetExtension: return "TARGET_EXTENSION";
    case StageKind::kDensification: return "DENSIFICATION";
  }
  return "";
}

StageKind parse_stage_kind(std::string_view text) {
  if (text == "BASE") return StageKind::kBase;
  if (text == "TARGET_EXTENSION") return StageKind::kTargetExtension;
  if (text == "DENSIFICATION") return StageKind::kDensification;
  throw Error(ErrorCode::kParse, "unknown stage kind '" + std::string(text) + "'");
}

std::string_view to_string(CheckpointRule rule) {
  return rule == CheckpointRule::kDirectDensity ? "direct" : "proof";
}

CheckpointRule parse_checkpoint_rule(std::string_view text) {
  if (text == "direct") return CheckpointRule::kDirectDensity;
  if (text == "proof") return CheckpointRule::kProofBound;
  throw Error(ErrorCode::kParse, "unknown checkpoint rule '" + std::string(text) + "'");
}

BuildHalted::BuildHalted(const Error& cause, ConstructionTrace partial)
    : Error(cause.code(),
            cause.message() + " (halted at stage " +
                std::to_string(partial.stages.size() + 1) + ")",
            cause.witness()),
      partial_(std::move(partial)) {}

namespace {

void require_no_zero(const FiniteBasis& a) {
  if (a.contains_zero()) {
    throw Error(ErrorCode::kPreconditionViolated, "0 must not belong to the set", 0);
  }
}

void require_bounded_by_target(const FiniteBasis& a, const RepTarget& f) {
  if (a.empty()) return;
  const RepProfile profile = rep_profile(a);
  for (const auto& [n, count] : profile.entries()) {
    if (!f.at(n).admits(count)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "r_A(n) = " + std::to_string(count) + " exceeds f(n)", n);
    }
  }
}

void require_covers(const FiniteBasis& a, std::span<const std::int64_t> prefix) {
  for (std::int64_t n : prefix) {
    if (rep_function(a, n) < prefix_occurrences(prefix, n)) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "r_A(n) below its target-sequence multiplicity", n);
    }
  }
}

std::vector<std::int64_t> dilate(const SidonSet& d, std::int64_t factor) {
  std::vector<std::int64_t> out;
  out.reserve(d.size());
  for (std::int64_t e : d.elements) out.push_back(checked::mul(factor, e));
  return out;
}

void require_density(const FiniteBasis& b, std::int64_t x, const PhiSpec& phi) {
  if (!beats_density(counting(b, -x, x), x, phi)) {
    throw std::logic_error("constructed stage misses its density checkpoint x = " +
                           std::to_string(x));
  }
}

}  // namespace

// ------------------------------------------------------------------ base case

StageRecord base_case(const RepTarget& f, const PhiSpec& phi, std::int64_t search_cap) {
  const std::int64_t u1 = target_prefix(f, 1).front();
  const std::int64_t d0 = d0_of(f);
  const std::int64_t c = u1 >= 0 ? checked::mul(4, d0) : checked::mul(-4, d0);
  const std::int64_t alpha =
      checked::abs(checked::add(checked::mul(2, c), checked::mul(2, u1)));
  const std::int64_t step = checked::mul(3, alpha);
  const long double phi_floor = 2.0L * std::sqrt(static_cast<long double>(step));

  SidonSource sidon;
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t x = checked::mul(step, n);
    if (x > search_cap) {
      throw Error(ErrorCode::kPhiTooSlow,
                  "no admissible base-case n with 3*alpha*n <= search cap " +
                      std::to_string(search_cap));
    }
    if (!strictly_exceeds(phi(static_cast<long double>(x)), phi_floor)) continue;
    const long double half_root = std::sqrt(static_cast<long double>(n)) / 2.0L;
    if (!strictly_exceeds(static_cast<long double>(sidon.best_size(n)), half_root)) continue;

    std::vector<std::int64_t> added = dilate(sidon.best(n), step);
    added.push_back(-c);
    added.push_back(checked::add(c, u1));
    std::sort(added.begin(), added.end());

    StageRecord stage;
    stage.index = 1;
    stage.kind = StageKind::kBase;
    stage.set = FiniteBasis(added);
    stage.added = std::move(added);
    stage.checkpoint = x;
    stage.m_covered = 1;
    require_density(stage.set, x, phi);
    return stage;
  }
}

// ----------------------------------------------------------- target extension

FiniteBasis extend_target(const FiniteBasis& a, const RepTarget& f, TargetSequence& u,
                          std::size_t m) {
  u.extend_to(m + 1);
  const auto prefix = u.emitted().first(m + 1);
  require_no_zero(a);
  require_bounded_by_target(a, f);
  require_covers(a, prefix.first(m));

  const std::int64_t target = prefix[m];
  if (rep_function(a, target) >= prefix_occurrences(prefix, target)) return a;

  const std::int64_t d = std::max({d0_of(f), checked::abs(target), a.max_abs()});
  const std::int64_t magnitude = checked::add(checked::mul(4, d), 1);
  const std::int64_t c = target >= 0 ? magnitude : -magnitude;
  const std::int64_t pair[] = {-c, checked::add(c, target)};
  return a.united(pair);
}

// --------------------------------------------------------------- densification

Densified densify(const FiniteBasis& a, const RepTarget& f, const PhiSpec& phi,
                  std::int64_t min_checkpoint, const SearchOptions& options) {
  if (min_checkpoint < 1) {
    throw Error(ErrorCode::kPreconditionViolated, "densify needs M >= 1", min_checkpoint);
  }
  require_no_zero(a);
  require_bounded_by_target(a, f);

  const std::int64_t t = std::max(d0_of(f), a.max_abs());
  const std::int64_t step = checked::mul(5, t);
  const long double proof_floor =
      static_cast<long double>(min_checkpoint) + std::sqrt(20.0L * static_cast<long double>(t));

  SidonSource sidon;
  for (std::int64_t n = min_checkpoint / step + 1;; ++n) {
    const std::int64_t x = checked::mul(step, n);
    if (x > options.search_cap) {
      throw Error(ErrorCode::kPhiTooSlow,
                  "no densification checkpoint above " + std::to_string(min_checkpoint) +
                      " with x <= search cap " + std::to_string(options.search_cap));
    }
    // Every element of A has |a| <= T < x.
    const std::size_t existing = counting(a, -x, x);

    if (options.rule == CheckpointRule::kProofBound) {
      if (!strictly_exceeds(phi(static_cast<long double>(x)), proof_floor)) continue;
      const long double half_root = std::sqrt(static_cast<long double>(n)) / 2.0L;
      if (!strictly_exceeds(static_cast<long double>(sidon.best_size(n)), half_root)) continue;
    } else {
      if (!beats_density(existing + sidon_size_upper_bound(n), x, phi)) continue;
      if (!beats_density(existing + sidon.best_size(n), x, phi)) continue;
    }

    Densified out;
    out.added = dilate(sidon.best(n), step);
    out.set = a.united(out.added);
    out.checkpoint = x;
    require_density(out.set, x, phi);
    return out;
  }
}

// ---------------------------------------------------------------------- build

ConstructionTrace build(const RepTarget& f, const PhiSpec& phi, std::size_t rounds,
                        const SearchOptions& options) {
  if (rounds < 1) {
    throw Error(ErrorCode::kPreconditionViolated, "build needs at least one round");
  }
  ConstructionTrace trace{f, phi, {}, {}};
  TargetSequence u(f);
  u.extend_to(rounds + 1);
  const auto full_prefix = u.emitted();
  trace.u_prefix.assign(full_prefix.begin(), full_prefix.begin() + static_cast<std::ptrdiff_t>(rounds + 1));

  try {
    trace.stages.push_back(base_case(f, phi, options.search_cap));
    std::int64_t last_checkpoint = *trace.stages.back().checkpoint;

    for (std::size_t l = 1; l <= rounds; ++l) {
      const FiniteBasis& odd = trace.stages.back().set;
      FiniteBasis even = extend_target(odd, f, u, l);

      StageRecord ext;
      ext.index = 2 * l;
      ext.kind = StageKind::kTargetExtension;
      std::set_difference(even.begin(), even.end(), odd.begin(), odd.end(),
                          std::back_inserter(ext.added));
      ext.set = std::move(even);
      ext.m_covered = l + 1;
      trace.stages.push_back(std::move(ext));

      Densified dense = densify(trace.stages.back().set, f, phi, last_checkpoint, options);
      StageRecord den;
      den.index = 2 * l + 1;
      den.kind = StageKind::kDensification;
      den.set = std::move(dense.set);
      den.added = std::move(dense.added);
      den.checkpoint = dense.checkpoint;
      den.m_covered = l + 1;
      last_checkpoint = dense.checkpoint;
      trace.stages.push_back(std::move(den));
    }
  } catch (const Error& e) {
    throw BuildHalted(e, std::move(trace));
  }
  return trace;
}

}  // namespace repbasis
