#pragma once

// Reproduction cases: each registered id re-runs one finite computation and
// certifies the quoted claim about it (candidate counts, strict house^2
// bounds, list memberships).  A case never passes on a violated claim — on
// any discrepancy it fails and names the offending candidate in `details`.

#include <string>
#include <vector>

namespace cyclotome {

struct CaseResult {
  std::string id;
  long long candidate_count = 0;  // candidates actually examined
  // Midpoints of the smallest and largest certified squared house seen in
  // the sweep; both 0 when the case has no house statistic.
  double min_house_sq = 0.0;
  double max_house_sq = 0.0;
  bool pass = false;
  std::string details;  // one-line human summary; on failure, the witness
};

// Options threaded through to long-running cases; defaults change nothing.
struct CaseOptions {
  // Checkpoint path stem for the enumeration sweeps (".k<k>" appended per
  // sweep); empty disables checkpointing.
  std::string checkpoint_path;
  // Nonzero overrides the registry seed of sampled sweeps.
  unsigned long long seed = 0;
};

// Registered ids, in registry order.
const std::vector<std::string>& case_ids();

// Run one case.  Throws std::invalid_argument for an unknown id.
CaseResult run_case(const std::string& id);
CaseResult run_case(const std::string& id, const CaseOptions& opts);

}  // namespace cyclotome
