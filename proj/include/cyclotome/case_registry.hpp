#pragma once

// Single registry of every externally quoted constant that the reproduction
// cases certify against.  Each entry records the claim as plain data, so the
// mapping from quoted claim to executable check is auditable in one place.
// run_case() consumes these rows; nothing else hard-codes a quoted value.

#include <gmpxx.h>

namespace cyclotome {
namespace registry {

inline constexpr const char* kVersion = "1";

// --- house-bound sweeps: "every candidate has house^2 > bound" -------------
struct SweepClaim {
  const char* id;
  long long candidate_count;  // quoted number of candidates (0 = not quoted)
  long bound_num;             // strict lower bound on house^2, as a fraction
  long bound_den;
};

inline constexpr SweepClaim kSweeps[] = {
    // 384 = 2 * 4 * 6 * 8 combinations of (j, k, i, m)
    {"p9-gamma5", 384, 5094, 1000},
    // 672 = 4 * 12 * (8 + 6) combinations of (i, m, gamma')
    {"p8-gamma57", 672, 50489, 10000},
    // single smallest witness 1 + z77 + z77^11 + z77^55; the quoted ">5.761"
    // is on the squared house (a four-term sum has house at most 4)
    {"p11x3", 1, 5761, 1000},
    // 1 + z13 + z13^2 (1 + z5), quoted with house^2 > 10
    {"p13x3-53", 1, 10, 1},
    // 1 + z17 + z17^5 (1 + z5), quoted with house^2 > 9
    {"p17x3", 1, 9, 1},
    // 1 + z19 + z19^5 (1 + z5), quoted with house^2 > 10
    {"p19x3", 1, 10, 1},
};

// --- the 1 +- i + zeta_n sweep ---------------------------------------------
// n runs over all divisors of 2^4 * 3 * 5 * 7; every value below the cutoff
// must land on the list (values certified above it are out of scope).
inline constexpr long kJonesDivisorBase = 1680;
inline constexpr long long kJonesDivisorCount = 40;

// --- the four-term survivor table at p = 11 --------------------------------
// Each survivor's house equals FormB(n) for the tabulated n.
struct FormBRow {
  const char* beta;  // sum of roots of unity, RootSum grammar
  long form_b_n;
};

inline constexpr FormBRow kP11X4Rows[] = {
    {"11:0^1,1^1,2^1,5^1", 11},
    {"66:11^1,6^1,18^1,48^1", 33},   // z6 + z11 + z11^3 + z11^8
    {"66:11^1,17^1,18^1,54^1", 22},  // z6 + z6 z11 + z11^3 + z11^9
};

// --- auxiliary-function positivity ------------------------------------------
// Quoted number of real zeros of the derivative numerator in (0, 126/25).
// The certified Sturm count is 20; the case passes on certified positivity
// and reports the measured count next to this quoted one.
inline constexpr int kQuotedDerivativeZeros = 14;

// --- the conductor-420 enumeration ------------------------------------------
inline constexpr long kQ420Conductor = 420;
inline constexpr int kQ420FullKMax = 4;        // k <= 4 swept exhaustively
inline constexpr int kQ420SampledKs[] = {5, 6};
inline constexpr unsigned long long kQ420Seed = 420420;
inline constexpr unsigned long long kQ420SampleCount = 1'000'000;

}  // namespace registry
}  // namespace cyclotome
