#include "cyclotome/vanishing.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclotome/canonical.hpp"
#include "cyclotome/numtheory.hpp"

namespace cyclotome {

namespace {

bool partition_groups(std::vector<long>& exps, long N,
                      std::vector<VanishingGroup>& out) {
  if (exps.empty()) return true;
  long base = exps.front();
  for (long p : {2L, 3L, 5L}) {
    if (N % p) continue;
    long step = N / p;
    // The group containing `base` must be {base + t*step}.
    std::vector<long> remaining = exps;
    bool complete = true;
    for (long t = 0; t < p && complete; ++t) {
      long want = mod_norm(base + t * step, N);
      auto it = std::find(remaining.begin(), remaining.end(), want);
      if (it == remaining.end())
        complete = false;
      else
        remaining.erase(it);
    }
    if (!complete) continue;
    out.push_back({p, base});
    if (partition_groups(remaining, N, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::vector<VanishingGroup> classify_vanishing_sum(const RootSum& a) {
  long N = a.conductor();
  std::vector<long> exps;
  for (auto& [e, m] : a.terms()) {
    if (m != 1)
      throw std::invalid_argument("classify_vanishing_sum: multiplicities must all be +1");
    exps.push_back(e);
  }
  if (exps.size() > 5)
    throw std::invalid_argument("classify_vanishing_sum: more than 5 terms");
  if (!is_zero_value(a))
    throw std::invalid_argument("classify_vanishing_sum: terms do not sum to zero");
  std::vector<VanishingGroup> out;
  if (!partition_groups(exps, N, out))
    throw std::logic_error("classify_vanishing_sum: no p-group partition found");
  return out;
}

}  // namespace cyclotome
