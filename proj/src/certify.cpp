#include "cyclotome/certify.hpp"

#include <numeric>

#include "cyclotome/numtheory.hpp"

namespace cyclotome {

CompareResult certified_compare(const BallReal& x, const BallReal& y) {
  int c = BallReal::compare(x, y);
  if (c < 0) return CompareResult::Less;
  if (c > 0) return CompareResult::Greater;
  return CompareResult::Overlap;
}

mpq_class equality_threshold(long k) {
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), 25, static_cast<unsigned long>(k));
  mpz_ui_pow_ui(den.get_mpz_t(), 251, static_cast<unsigned long>(k));
  return mpq_class(num, den);  // already canonical: gcd(25, 251) = 1
}

long equality_degree(long house_sq_conductor, const ListValue& target) {
  long L = std::lcm(house_sq_conductor, list_value_conductor(target));
  return 4 * euler_phi(L);
}

EqualityResult certify_equal_to_algebraic(const BallReal& house,
                                          const ListValue& target, long k) {
  long prec = house.prec();
  BallReal tv = list_value_ball(target, prec);
  BallReal delta = house - tv;
  if (!delta.contains_zero()) return EqualityResult::NotEqual;
  BallReal thr = BallReal::from_mpq(equality_threshold(k), 64);
  BallReal gap = delta.abs();
  if (mpfr_cmp(gap.hi_raw(), thr.lo_raw()) < 0) return EqualityResult::Equal;
  return EqualityResult::NeedsPrecision;
}

}  // namespace cyclotome
