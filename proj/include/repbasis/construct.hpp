#pragma once

// Staged construction of a basis A_1 ⊆ A_2 ⊆ ... whose representation
// function approaches a prescribed target f while the odd stages certify
// A_{2l-1}(-x_l, x_l) > sqrt(x_l) / phi(x_l) at increasing checkpoints x_l.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "repbasis/error.hpp"
#include "repbasis/phi.hpp"
#include "repbasis/repcore.hpp"

namespace repbasis {

enum class StageKind { kBase, kTargetExtension, kDensification };

std::string_view to_string(StageKind kind);
StageKind parse_stage_kind(std::string_view text);

struct StageRecord {
  std::size_t index = 0;  // 1-based
  FiniteBasis set;
  StageKind kind = StageKind::kBase;
  std::optional<std::int64_t> checkpoint;  // odd stages only
  std::vector<std::int64_t> added;
  std::size_t m_covered = 0;

  friend bool operator==(const StageRecord&, const StageRecord&) = default;
};

struct ConstructionTrace {
  RepTarget f;
  PhiSpec phi;
  std::vector<std::int64_t> u_prefix;
  std::vector<StageRecord> stages;

  friend bool operator==(const ConstructionTrace&, const ConstructionTrace&) = default;
};

inline constexpr std::int64_t kDefaultSearchCap = 1'000'000'000;

// How densify picks its checkpoint among multiples of 5T above M.
enum class CheckpointRule {
  // First x whose extended set already satisfies B(-x, x) > sqrt(x)/phi(x).
  kDirectDensity,
  // First x meeting phi(x) > M + sqrt(20T) and |D| > sqrt(n)/2 for n = x/5T.
  kProofBound,
};

std::string_view to_string(CheckpointRule rule);
CheckpointRule parse_checkpoint_rule(std::string_view text);

struct SearchOptions {
  std::int64_t search_cap = kDefaultSearchCap;  // largest checkpoint examined
  CheckpointRule rule = CheckpointRule::kDirectDensity;
};

// A_1 = 3α*D ∪ {-c, c + u_1} with c = ±4 d_0 and α = |2c + 2u_1|.
StageRecord base_case(const RepTarget& f, const PhiSpec& phi,
                      std::int64_t search_cap = kDefaultSearchCap);

// Returns B ⊇ A covering the first m + 1 terms of u. Either B = A or
// B = A ∪ {-c, c + u_{m+1}} with c = ±(4d + 1).
FiniteBasis extend_target(const FiniteBasis& a, const RepTarget& f, TargetSequence& u,
                          std::size_t m);

struct Densified {
  FiniteBasis set;
  std::int64_t checkpoint = 0;
  std::vector<std::int64_t> added;  // 5T * D
};

// B = A ∪ 5T*D for a Sidon set D ⊆ [1, x/5T], x > min_checkpoint a multiple of 5T.
Densified densify(const FiniteBasis& a, const RepTarget& f, const PhiSpec& phi,
                  std::int64_t min_checkpoint, const SearchOptions& options = {});

// Stages A_1 .. A_{2L+1}, checkpoints x_1 < ... < x_{L+1}.
ConstructionTrace build(const RepTarget& f, const PhiSpec& phi, std::size_t rounds,
                        const SearchOptions& options = {});

// Thrown by build when a stage cannot be produced; carries every stage that
// was completed before the failure.
class BuildHalted : public Error {
 public:
  BuildHalted(const Error& cause, ConstructionTrace partial);
  const ConstructionTrace& partial() const { return partial_; }
  std::size_t failed_stage() const { return partial_.stages.size() + 1; }

 private:
  ConstructionTrace partial_;
};

}  // namespace repbasis
