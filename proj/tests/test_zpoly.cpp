#include <cmath>

#include <gmpxx.h>

#include "cyclotome/zpoly.hpp"
#include "doctest.h"

using namespace cyclotome;

namespace {

double to_d(const mpq_class& q) { return q.get_d(); }

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  ZPoly a = ZPoly::from_longs({-3, 1});  // x - 3
  ZPoly b = ZPoly::from_longs({-4, 1});  // x - 4
  ZPoly prod = a * b;
  CHECK(prod == ZPoly::from_longs({12, -7, 1}));
  CHECK(prod.degree() == 2);
  CHECK(prod.eval_z(3) == 0);
  CHECK(prod.eval_z(4) == 0);
  CHECK(prod.eval_q(mpq_class(7, 2)) == mpq_class(-1, 4));
  CHECK((a + b) == ZPoly::from_longs({-7, 2}));
  CHECK((a - a).is_zero());
  CHECK((a * mpz_class(5)) == ZPoly::from_longs({-15, 5}));

  ZPoly q = ZPoly::from_longs({41, -98, 58, -13, 1});
  CHECK(q.derivative() == ZPoly::from_longs({-98, 116, -39, 4}));
  CHECK(ZPoly::from_longs({7}).derivative().is_zero());
}

TEST_CASE("ball evaluation contains the exact value") {
  ZPoly p = ZPoly::from_longs({-29, 31, -10, 1});
  mpq_class x(48, 10);
  mpq_class exact = p.eval_q(x);
  BallReal bx = BallReal::from_mpq(x, 128);
  BallReal val = p.eval_ball(bx);
  CHECK(mpfr_cmp_q(val.lo_raw(), exact.get_mpq_t()) <= 0);
  CHECK(mpfr_cmp_q(val.hi_raw(), exact.get_mpq_t()) >= 0);
  CHECK(val.rad_d() < 1e-30);
}

TEST_CASE("str formatting") {
  CHECK(ZPoly::from_longs({41, -98, 58, -13, 1}).str() ==
        "x^4 - 13x^3 + 58x^2 - 98x + 41");
  CHECK(ZPoly::from_longs({6, -6, 1}).str() == "x^2 - 6x + 6");
  CHECK(ZPoly::from_longs({-5, 1}).str() == "x - 5");
  CHECK(ZPoly::from_longs({0, 0, 2}).str() == "2x^2");
  CHECK(ZPoly{}.str() == "0");
  CHECK(ZPoly::from_longs({-1, 0, -1}).str() == "-x^2 - 1");
}

TEST_CASE("gcd and squarefree part") {
  ZPoly a = ZPoly::from_longs({-1, 1});          // x - 1
  ZPoly b = ZPoly::from_longs({1, 0, 1});        // x^2 + 1
  ZPoly c = ZPoly::from_longs({2, 1});           // x + 2
  CHECK(poly_gcd(a * b, a * c) == a);
  CHECK(poly_gcd(b, c).degree() == 0);
  CHECK(poly_gcd(ZPoly{}, a * mpz_class(3)) == a);

  ZPoly sq = a * a * c;  // (x-1)^2 (x+2)
  CHECK(squarefree_part(sq) == a * c);
  CHECK(squarefree_part(b) == b);
}

TEST_CASE("sturm counting") {
  ZPoly p2 = ZPoly::from_longs({-2, 0, 1});  // x^2 - 2
  CHECK(sturm_count(p2, 0, 2) == 1);
  CHECK(sturm_count(p2, -2, 2) == 2);
  CHECK(sturm_count(p2, 2, 3) == 0);
  CHECK(sturm_count_all(p2) == 2);

  ZPoly nr = ZPoly::from_longs({1, 0, 1});  // x^2 + 1
  CHECK(sturm_count_all(nr) == 0);

  // distinct-root count for a non-squarefree polynomial
  ZPoly m = ZPoly::from_longs({-1, 1});
  ZPoly rep = m * m * ZPoly::from_longs({-3, 1});  // (x-1)^2 (x-3)
  CHECK(sturm_count(rep, 0, 4) == 2);
  CHECK(sturm_count_all(rep) == 2);

  CHECK(sturm_count_all(ZPoly::from_longs({-29, 31, -10, 1})) == 3);
  CHECK(sturm_count_all(ZPoly::from_longs({41, -98, 58, -13, 1})) == 4);
  CHECK(sturm_count_all(ZPoly::from_longs({61, -107, 59, -13, 1})) == 4);
}

TEST_CASE("sturm endpoint precondition") {
  ZPoly p = ZPoly::from_longs({-4, 0, 1});  // x^2 - 4
  CHECK_THROWS_AS(sturm_count(p, 0, 2), std::invalid_argument);
  CHECK(sturm_count(p, 0, 3) == 1);
}

TEST_CASE("root isolation and refinement") {
  ZPoly p = ZPoly::from_longs({6, -6, 1});  // roots 3 +- sqrt(3)
  mpq_class tol(1, 1L << 40);
  auto roots = isolate_roots(p, 0, mpq_class(126, 25), tol);
  REQUIRE(roots.size() == 2);
  double r0 = 3 - std::sqrt(3.0), r1 = 3 + std::sqrt(3.0);
  CHECK(to_d(roots[0].lo) <= r0);
  CHECK(to_d(roots[0].hi) >= r0 - 1e-12);
  CHECK(to_d(roots[1].lo) <= r1 + 1e-12);
  CHECK(to_d(roots[1].hi) >= r1 - 1e-12);
  CHECK(to_d(roots[0].hi - roots[0].lo) <= 1.0 / (1L << 40) + 1e-18);
  CHECK(roots[0].hi < roots[1].lo);

  // sign change across each isolated interval
  for (const auto& iv : roots)
    CHECK(sgn(p.eval_q(iv.lo)) * sgn(p.eval_q(iv.hi)) < 0);
}

TEST_CASE("isolation finds exact rational roots") {
  // (2x - 1)(x - 3): roots 1/2 and 3
  ZPoly p = ZPoly::from_longs({3, -7, 2});
  auto roots = isolate_roots(p, 0, 4, mpq_class(1, 1L << 30));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo <= mpq_class(1, 2));
  CHECK(roots[0].hi >= mpq_class(1, 2));
  CHECK(roots[1].lo <= 3);
  CHECK(roots[1].hi >= 3);
}

TEST_CASE("refinement tightens an interval") {
  ZPoly p = ZPoly::from_longs({-2, 0, 1});
  RootInterval iv{1, 2};
  mpq_class tol = mpq_class(1) / mpq_class(mpz_class(1) << 80);
  iv = refine_root(p, iv, tol);
  CHECK(to_d(iv.hi - iv.lo) <= std::pow(2.0, -80) * 1.0001);
  // still contains sqrt(2)
  CHECK(sgn(p.eval_q(iv.lo)) <= 0);
  CHECK(sgn(p.eval_q(iv.hi)) >= 0);
}

TEST_CASE("irreducibility over Z") {
  CHECK(is_irreducible(ZPoly::from_longs({-3, 1})));
  CHECK(is_irreducible(ZPoly::from_longs({-2, 0, 1})));
  CHECK(is_irreducible(ZPoly::from_longs({1, 0, 1})));
  CHECK_FALSE(is_irreducible(ZPoly::from_longs({-1, 0, 1})));   // (x-1)(x+1)
  CHECK_FALSE(is_irreducible(ZPoly::from_longs({0, 0, 1})));    // x^2
  CHECK(is_irreducible(ZPoly::from_longs({-29, 31, -10, 1})));
  CHECK(is_irreducible(ZPoly::from_longs({41, -98, 58, -13, 1})));
  CHECK(is_irreducible(ZPoly::from_longs({61, -107, 59, -13, 1})));
  CHECK_FALSE(is_irreducible(ZPoly::from_longs({4, 0, 0, 0, 1})));   // x^4 + 4
  CHECK_FALSE(is_irreducible(ZPoly::from_longs({1, 0, 1, 0, 1})));   // x^4 + x^2 + 1
  CHECK(is_irreducible(ZPoly::from_longs({1, 0, -10, 0, 1})));       // sqrt2 + sqrt3
  CHECK(is_irreducible(ZPoly::from_longs({1, 0, 0, 0, 1})));         // x^4 + 1
  CHECK_FALSE(is_irreducible(ZPoly::from_longs({7})));
}
