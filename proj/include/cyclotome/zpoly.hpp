#pragma once
// Dense integer polynomials with exact arithmetic: evaluation over Z, Q and
// balls, derivatives, exact gcd, Sturm root counting, certified isolation
// and refinement of real roots to rational intervals, and an irreducibility
// test for the small degrees used by the bound table.

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclotome/ball.hpp"

namespace cyclotome {

class ZPoly {
 public:
  ZPoly() = default;  // the zero polynomial
  explicit ZPoly(std::vector<mpz_class> coeffs);  // ascending; trailing zeros trimmed
  static ZPoly from_longs(std::initializer_list<long> ascending);

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const;

  mpz_class eval_z(const mpz_class& x) const;
  mpq_class eval_q(const mpq_class& x) const;
  BallReal eval_ball(const BallReal& x) const;  // Horner, outward rounding

  ZPoly derivative() const;
  // Content removed and leading coefficient made positive.
  ZPoly primitive_part() const;

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly operator*(const mpz_class& k) const;
  bool operator==(const ZPoly&) const = default;

  // Human form, descending powers: "x^2 - 6x + 6".
  std::string str() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Exact gcd (primitive, positive leading coefficient); gcd(0, b) = |b|.
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

// p with repeated factors removed (primitive, positive leading coefficient).
ZPoly squarefree_part(const ZPoly& p);

// Number of distinct real roots in (lo, hi]; requires p(lo), p(hi) != 0.
long sturm_count(const ZPoly& p, const mpq_class& lo, const mpq_class& hi);
// Number of distinct real roots on the whole line.
long sturm_count_all(const ZPoly& p);

// A rational interval certified to contain exactly one root of the
// polynomial it was isolated from; lo == hi marks an exact rational root.
struct RootInterval {
  mpq_class lo, hi;
};

// Disjoint isolating intervals for every distinct real root in (lo, hi],
// ascending, each refined until hi - lo <= tol. Requires p(lo), p(hi) != 0.
std::vector<RootInterval> isolate_roots(const ZPoly& p, const mpq_class& lo,
                                        const mpq_class& hi,
                                        const mpq_class& tol);

// Shrink an isolating interval until hi - lo <= tol.
RootInterval refine_root(const ZPoly& p, RootInterval iv, const mpq_class& tol);

// Irreducibility over Z of a primitive polynomial of degree <= 4.
bool is_irreducible(const ZPoly& p);

}  // namespace cyclotome
