#pragma once
// Exhaustive (or seeded-sample) sweeps over k-term sums of N-th roots of
// unity in normalized form, classifying every candidate whose squared house
// is not certifiably above a ceiling (default 126/25).
//
// Normalization: a candidate is an exponent tuple (0, i, j_3 <= ... <= j_k)
// with i = 0 or i a divisor of N, and gcd(N, j) >= i for every remaining
// exponent j. Every k-term sum of N-th roots of unity is equivalent -- up to
// multiplication by a root of unity and Galois conjugation -- to at least one
// normalized tuple: divide by any one term to pin the first exponent at 0,
// then map a term of minimal exponent gcd d to exponent d itself with a
// Galois automorphism (gcds are Galois-invariant, so the other exponents
// keep gcd >= d). The sweep is therefore a cover of all equivalence classes;
// exact deduplication happens afterwards via orbit-canonical keys.
//
// Candidates certified above the ceiling are counted and dropped, the rest
// are classified against the target list. A nonzero candidate that is
// neither on the list nor above the ceiling is an alarm, not an expected
// outcome, and is reported both as a survivor and in a dedicated counter.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclotome/house.hpp"
#include "cyclotome/rootsum.hpp"

namespace cyclotome {

struct SearchSpec {
  long conductor = 420;
  int k = 2;
  mpq_class ceiling_sq = mpq_class(126, 25);
  bool sampled = false;             // full enumeration when false
  std::uint64_t seed = 0;           // sampled mode: RNG seed
  std::uint64_t sample_count = 0;   // sampled mode: tuples to draw
  long prune_bits = 64;             // certified fast-path precision
  long verify_bits = 192;           // classification precision floor

  // Stable one-line serialization (identifies a checkpoint's owner).
  std::string canonical_string() const;
};

struct Survivor {
  RootSum beta;               // first representative encountered
  HouseReport report;         // classification of that representative
  std::string canonical_key;  // lexicographically minimal canonical form
                              // over the orbit {+-zeta^t sigma_g(beta)}
  std::uint64_t hits = 0;     // normalized tuples landing in this class
};

struct SearchResult {
  SearchSpec spec;
  std::uint64_t examined = 0;       // tuples generated (duplicates included)
  std::uint64_t pruned = 0;         // certified above ceiling by the fast path
  std::uint64_t above_ceiling = 0;  // certified above ceiling by full classification
  std::uint64_t zero_values = 0;    // candidates equal to 0 (skipped)
  std::uint64_t strictly_between = 0;  // survivor classes certifiably off the list (alarm)
  std::uint64_t unresolved = 0;        // survivor classes the precision budget left open
  std::vector<Survivor> survivors;     // sorted by canonical_key
  bool complete = true;                // false when halted early (see halt_after)
};

// Exact count of normalized tuples a full run would examine.
mpz_class estimate_full_work(const SearchSpec& spec);

// Hard cap on full-mode work; beyond it enumerate_candidates refuses and
// directs the caller to sampled mode.
inline constexpr std::uint64_t search_work_cap = 5'000'000;

// Called once per surviving equivalence class, at first encounter.
using SurvivorSink =
    std::function<void(const RootSum&, const HouseReport&)>;

// Run the sweep. With a nonempty checkpoint_path, progress is persisted
// there (atomically) and a matching checkpoint is resumed from; a checkpoint
// written by different run parameters is refused. Resumed runs produce
// results identical to uninterrupted ones. A nonzero halt_after stops the
// run (checkpointing it first) once the examined counter reaches that value,
// returning the partial result with complete = false.
SearchResult enumerate_candidates(const SearchSpec& spec,
                                  const std::string& checkpoint_path = "",
                                  const SurvivorSink& sink = nullptr,
                                  std::uint64_t halt_after = 0);

// Deduplication key: the minimal CanonicalForm over the equivalence orbit
// {s * zeta_N^t * sigma_g(beta) : s = +-1, 0 <= t < N, gcd(g, N) = 1} at
// beta's written conductor N, serialized as the text form of the RootSum
// rebuilt from that power-basis form. Two sums written over the same N get
// equal keys exactly when they agree up to a root-of-unity factor and
// Galois conjugation: any root of unity connecting values in Q(zeta_N) is
// +-zeta_N^t, so the orbit above is the whole equivalence class.
std::string orbit_canonical_key(const RootSum& beta);

// The decomposition obstruction: for parts alpha_1..alpha_p of a candidate
// at prime p, with X the number of nonzero parts,
//   S = (p - X) * sum M(alpha_i) + sum_{i<j} M(alpha_i - alpha_j)
// over nonzero parts. A candidate below the cutoff must satisfy
// 13(p-1)/4 > S, so contradiction (S >= threshold) rules it out.
struct SInequalityReport {
  mpq_class s;
  mpq_class threshold;     // 13(p-1)/4
  bool contradiction = false;  // s >= threshold
};

SInequalityReport check_s_inequality(const std::vector<RootSum>& parts,
                                     long p);

}  // namespace cyclotome
