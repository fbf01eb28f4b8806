#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "banditlab/arm_history.hpp"
#include "banditlab/rng.hpp"

namespace banditlab {

// Arms a policy wants sampled this round. Indices are 0-based, strictly
// increasing, non-empty, and within the number of arms.
struct PolicyDecision {
  std::vector<int> arms;
};

// Allocation rule driven round by round. The driver owns the histories and
// appends rewards; decide() sees the state at the start of the round. Any
// randomization must come from the provided stream so runs replay exactly.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  virtual void reset(int num_arms, long long horizon) = 0;
  virtual PolicyDecision decide(const std::vector<ArmHistory>& arms, RandomStream& rng) = 0;
};

}  // namespace banditlab
