#pragma once
// Certified comparisons and the equality decision procedure for houses
// against list values: two algebraic integers of degree <= k whose
// difference has all conjugates below 4.5 are equal as soon as they agree
// within (10 + 1/25)^(-k), so a small enough enclosure decides equality.

#include <algorithm>

#include "cyclotome/ball.hpp"
#include "cyclotome/forms.hpp"

namespace cyclotome {

enum class CompareResult { Less, Greater, Overlap };

CompareResult certified_compare(const BallReal& x, const BallReal& y);

enum class EqualityResult { Equal, NotEqual, NeedsPrecision };

// Exact rational (10 + 1/25)^(-k) = (25/251)^k.
mpq_class equality_threshold(long k);

// Decide house == target given that both are algebraic integers whose
// difference has degree <= k and conjugates < 4.5 in absolute value. The
// target is evaluated at the house enclosure's precision; Equal requires
// |house - target| certifiably below the threshold, NotEqual requires the
// difference to exclude zero, anything else NeedsPrecision (escalate and
// retry).
EqualityResult certify_equal_to_algebraic(const BallReal& house,
                                          const ListValue& target, long k);

// Degree bound for the house-vs-target comparison: both squares live in
// Q(zeta_L), the values are square roots, so 4 * phi(L) bounds the degree
// of the compositum containing the difference.
long equality_degree(long house_sq_conductor, const ListValue& target);

// Precision ladder for equality decisions: start, then doubling, capped at
// the bit budget for degree k plus slack.
struct PrecisionLadder {
  long start = 128;
  long budget;  // required_bits(k) + 256

  explicit PrecisionLadder(long k)
      : budget(PrecisionPolicy::required_bits(k) + 256) {}
  // The next precision after prec, or 0 when the budget is exhausted.
  long next(long prec) const {
    if (prec >= budget) return 0;
    return std::min(2 * prec, budget);
  }
};

}  // namespace cyclotome
