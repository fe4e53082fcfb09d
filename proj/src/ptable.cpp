#include "cyclotome/ptable.hpp"

#include <stdexcept>

#include "cyclotome/canonical.hpp"
#include "cyclotome/eval.hpp"
#include "cyclotome/forms.hpp"
#include "cyclotome/mvalue.hpp"
#include "cyclotome/numtheory.hpp"

namespace cyclotome {

const std::vector<PTableRow>& p_table() {
  static const std::vector<PTableRow> rows = [] {
    std::vector<PTableRow> t;
    auto row = [&t](int i, std::initializer_list<long> coeffs, long thousandths,
                    long n, bool excluded = false) {
      t.push_back(PTableRow{i, ZPoly::from_longs(coeffs),
                            mpq_class(thousandths, 1000), n, excluded});
    };
    row(1, {-3, 1}, 110, 4);
    row(2, {-4, 1}, 530, 6);
    row(3, {-5, 1}, 620, 1);
    row(4, {6, -6, 1}, 18, 12);
    row(5, {7, -6, 1}, 28, 8);
    row(6, {11, -7, 1}, 194, 10);
    row(7, {-29, 31, -10, 1}, 130, 14);
    row(8, {41, -98, 58, -13, 1}, 45, 0, true);
    row(9, {61, -107, 59, -13, 1}, 40, 15);
    return t;
  }();
  return rows;
}

namespace {

// poly(b) as an exact RootSum (Horner; table coefficients are small).
RootSum eval_at_rootsum(const ZPoly& poly, const RootSum& b) {
  RootSum acc;  // zero
  for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
    if (!it->fits_slong_p())
      throw std::invalid_argument("coefficient too large for exact evaluation");
    acc = acc * b + RootSum::integer(it->get_si());
  }
  return acc;
}

}  // namespace

MBoundReport m_upper_bound_check(const RootSum& a) {
  MBoundReport rep;
  rep.m = m_of(a);
  if (rep.m < mpq_class(13, 4)) {
    rep.result = MBoundResult::BelowThirteenFourths;
    return rep;
  }
  RootSum bb = reduce_to_conductor(a * a.conjugate());
  for (const PTableRow& row : p_table()) {
    if (is_zero_value(eval_at_rootsum(row.poly, bb))) {
      if (row.excluded) break;  // impossible for cyclotomic input: alarm below
      rep.result = MBoundResult::IsFormBRoot;
      rep.table_index = row.index;
      rep.form_b_n = row.form_b_n;
      return rep;
    }
  }
  rep.result = MBoundResult::Violation;
  return rep;
}

bool certify_largest_root_matches(const PTableRow& row, long prec) {
  if (row.excluded)
    throw std::invalid_argument("row has no FormB mapping");

  // Degree and magnitude bounds for the norm argument: the difference of
  // the root and the FormB value is an algebraic integer of degree at most
  // k whose conjugates stay below A, so |delta| < A^-(k-1) forces delta = 0.
  long cond = list_value_conductor(form_b(row.form_b_n));
  long k = row.poly.degree() * 2 * euler_phi(cond);
  mpq_class maxc = 0;
  for (const mpz_class& c : row.poly.coeffs())
    if (abs(mpq_class(c)) > maxc) maxc = abs(mpq_class(c));
  mpq_class cauchy = 1 + maxc;  // monic
  long a_bound = static_cast<long>(cauchy.get_d()) + 8;  // roots + FormB conjugates
  mpz_class apow;
  mpz_ui_pow_ui(apow.get_mpz_t(), static_cast<unsigned long>(a_bound),
                static_cast<unsigned long>(k - 1));
  mpq_class thr = mpq_class(1) / mpq_class(apow);

  long bits = static_cast<long>(mpz_sizeinbase(apow.get_mpz_t(), 2)) + 128;
  long p = std::max(prec, bits);

  auto roots = isolate_roots(row.poly, 0, cauchy + 1, thr / 4);
  if (roots.empty()) return false;
  RootInterval top = roots.back();

  BallReal rb = BallReal::from_mpq_interval(top.lo, top.hi, p);
  BallReal vb =
      eval(list_value_squared(form_b(row.form_b_n)), 1, PrecisionPolicy{0, 0, p}).re;
  BallReal delta = rb - vb;
  return mpfr_cmp_q(delta.abs().hi_raw(), thr.get_mpq_t()) < 0;
}

}  // namespace cyclotome
