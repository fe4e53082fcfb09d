#include "doctest.h"

#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "cyclotome/forms.hpp"
#include "cyclotome/lemma31.hpp"
#include "cyclotome/mvalue.hpp"
#include "cyclotome/ptable.hpp"
#include "cyclotome/rootsum.hpp"
#include "cyclotome/zpoly.hpp"

using namespace cyclotome;

TEST_CASE("bound table rows: indices, coefficients, weights") {
  const std::vector<PTableRow>& rows = p_table();
  REQUIRE(rows.size() == 9);

  const long degs[9] = {1, 1, 1, 2, 2, 2, 3, 4, 4};
  const long thousandths[9] = {110, 530, 620, 18, 28, 194, 130, 45, 40};
  const long ns[9] = {4, 6, 1, 12, 8, 10, 14, 0, 15};
  mpq_class alpha_sum = 0;
  for (int i = 0; i < 9; ++i) {
    CHECK(rows[i].index == i + 1);
    CHECK(rows[i].poly.degree() == degs[i]);
    CHECK(rows[i].alpha == mpq_class(thousandths[i], 1000));
    CHECK(rows[i].form_b_n == ns[i]);
    CHECK(rows[i].excluded == (i == 7));
    alpha_sum += rows[i].alpha;
  }
  CHECK(alpha_sum == mpq_class(343, 200));

  CHECK(rows[0].poly == ZPoly::from_longs({-3, 1}));
  CHECK(rows[3].poly == ZPoly::from_longs({6, -6, 1}));
  CHECK(rows[6].poly == ZPoly::from_longs({-29, 31, -10, 1}));
  CHECK(rows[8].poly == ZPoly::from_longs({61, -107, 59, -13, 1}));
}

TEST_CASE("bound table polynomials: irreducible, all roots real in (0, 126/25]") {
  const mpq_class hi(126, 25);
  for (const PTableRow& r : p_table()) {
    CHECK(is_irreducible(r.poly));
    CHECK(sturm_count_all(r.poly) == r.poly.degree());
    CHECK(sturm_count(r.poly, mpq_class(0), hi) == r.poly.degree());
  }
}

TEST_CASE("largest roots of the included rows match the squared list values") {
  for (const PTableRow& r : p_table()) {
    if (r.excluded) {
      CHECK_THROWS_AS(certify_largest_root_matches(r), std::invalid_argument);
    } else {
      CHECK(certify_largest_root_matches(r));
    }
  }
}

TEST_CASE("mean-square upper-bound dichotomy") {
  RootSum a = RootSum::parse("5:0^1,1^1");
  MBoundReport rep = m_upper_bound_check(a);
  CHECK(rep.result == MBoundResult::BelowThirteenFourths);
  CHECK(rep.m == mpq_class(3, 2));

  rep = m_upper_bound_check(RootSum::parse("1:"));
  CHECK(rep.result == MBoundResult::BelowThirteenFourths);
  CHECK(rep.m == 0);

  // zeta_4 + zeta_20 + zeta_20^-1: mean square 7/2 >= 13/4, and the squared
  // house (7+sqrt(5))/2 is the largest root of x^2-7x+11 (row 6, N=10).
  rep = m_upper_bound_check(witness_form_b(20));
  CHECK(rep.result == MBoundResult::IsFormBRoot);
  CHECK(rep.m == mpq_class(7, 2));
  CHECK(rep.table_index == 6);
  CHECK(rep.form_b_n == 10);

  rep = m_upper_bound_check(witness_form_b(28));
  CHECK(rep.result == MBoundResult::IsFormBRoot);
  CHECK(rep.m == mpq_class(10, 3));
  CHECK(rep.table_index == 7);
  CHECK(rep.form_b_n == 14);

  // beta = 3 has squared house 9, far outside the guarded range; the check
  // must hit the alarm branch rather than misclassify.
  rep = m_upper_bound_check(RootSum::integer(3));
  CHECK(rep.result == MBoundResult::Violation);
  CHECK(rep.m == 9);
}

TEST_CASE("derivative numerator: degree 20, leading -1000, coprime to the table") {
  ZPoly g = lemma31_g();
  CHECK(g.degree() == 20);
  CHECK(g.leading() == mpz_class(-1000));
  for (const PTableRow& r : p_table()) {
    CHECK(poly_gcd(g, r.poly).degree() == 0);
  }
}

TEST_CASE("positivity certificate for the auxiliary function") {
  Lemma31Certificate cert = verify_lemma31_positivity();
  CHECK(cert.ok);
  CHECK(cert.asymptotes_diverge);

  // Exactly 20 critical points in (0, 126/25): the nine polynomials place 20
  // asymptotes inside the interval, forcing one minimum between consecutive
  // asymptotes (19) plus one before the first.
  CHECK(cert.zero_count == 20);
  CHECK(cert.zeros.size() == 20);
  CHECK(cert.f_at_zeros.size() == 20);
  CHECK(cert.asymptote_count == 20);

  const mpq_class hi(126, 25);
  for (std::size_t i = 0; i < cert.zeros.size(); ++i) {
    CHECK(cert.f_at_zeros[i].is_positive());
    CHECK(cert.zeros[i].lo > 0);
    CHECK(cert.zeros[i].hi < hi);
    if (i > 0) CHECK(cert.zeros[i - 1].hi < cert.zeros[i].lo);
  }
  double first = (cert.zeros.front().lo.get_d() + cert.zeros.front().hi.get_d()) / 2;
  double last = (cert.zeros.back().lo.get_d() + cert.zeros.back().hi.get_d()) / 2;
  CHECK(first == doctest::Approx(0.36692161).epsilon(1e-6));
  CHECK(last == doctest::Approx(4.88839423).epsilon(1e-6));

  CHECK(cert.f_at_left.is_positive());
  CHECK(cert.f_at_right.is_positive());
  CHECK(cert.f_at_left.mid_d() == doctest::Approx(0.0753421381).epsilon(1e-6));
  CHECK(cert.f_at_right.mid_d() == doctest::Approx(0.0075001039).epsilon(1e-6));
}

TEST_CASE("auxiliary function evaluation guards its singularities") {
  // x = 5 is a root of x - 5: the logarithm is undefined there.
  CHECK_THROWS_AS(lemma31_f(BallReal::exact_long(5, 128)), std::domain_error);

  BallReal at0 = lemma31_f(BallReal::exact_long(0, 192));
  CHECK(at0.is_positive());
  CHECK(at0.mid_d() == doctest::Approx(0.0753421381).epsilon(1e-6));
}

TEST_CASE("plot sampling skips singular neighbourhoods") {
  // Step 0.01: the integer roots 3, 4, 5 land exactly on grid points and must
  // be dropped by the default exclusion radius.
  std::vector<PlotSample> ps = lemma31_plot_samples(504);
  CHECK(ps.size() < 505);
  CHECK(ps.size() > 480);
  double prev = -1.0;
  for (const PlotSample& s : ps) {
    CHECK(s.x > prev);
    prev = s.x;
    CHECK(s.f > 0.0);
    for (double root : {3.0, 4.0, 5.0}) {
      CHECK(std::abs(s.x - root) >= 1e-3);
    }
  }
  CHECK(ps.front().x == doctest::Approx(0.0));
  CHECK(ps.back().x == doctest::Approx(5.04));

  // A coarse grid misses every singularity and keeps all points.
  CHECK(lemma31_plot_samples(100).size() == 101);
  CHECK_THROWS_AS(lemma31_plot_samples(0), std::invalid_argument);
}
