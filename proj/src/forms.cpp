#include "cyclotome/forms.hpp"

#include <set>
#include <stdexcept>

#include "cyclotome/canonical.hpp"
#include "cyclotome/eval.hpp"
#include "cyclotome/numtheory.hpp"

namespace cyclotome {

std::string ListValue::str() const {
  switch (kind) {
    case ListKind::FormA:
      return "FormA(" + std::to_string(n) + ")";
    case ListKind::FormB:
      return "FormB(" + std::to_string(n) + ")";
    case ListKind::ExcSqrt13:
      return "ExcSqrt13";
    case ListKind::ExcSqrt7Sqrt3:
      return "ExcSqrt7Sqrt3";
    case ListKind::Exc70:
      return "Exc70";
  }
  return "?";
}

ListValue form_a(long n) { return {ListKind::FormA, n}; }
ListValue form_b(long n) { return {ListKind::FormB, n}; }

RootSum witness_form_a(long N) { return RootSum::root(N, 1) + RootSum::root(N, -1); }

RootSum witness_form_b(long N) {
  return RootSum::root(4, 1) + RootSum::root(N, 1) + RootSum::root(N, -1);
}

RootSum witness_exc_sqrt13() {
  return RootSum::integer(1) + RootSum::root(13, 1) + RootSum::root(13, 4);
}

RootSum witness_exc_sqrt7_sqrt3() {
  return RootSum::root(84, -9) + RootSum::root(84, -7) + RootSum::root(84, 3) +
         RootSum::root(84, 27);
}

RootSum witness_exc70() {
  return RootSum::integer(1) + RootSum::root(70, 1) + RootSum::root(70, 10) +
         RootSum::root(70, 29);
}

RootSum list_value_squared(const ListValue& v) {
  switch (v.kind) {
    case ListKind::FormA:
      return RootSum::integer(2) + RootSum::root(v.n, 1) + RootSum::root(v.n, -1);
    case ListKind::FormB:
      return RootSum::integer(3) + RootSum::root(v.n, 1) + RootSum::root(v.n, -1);
    case ListKind::ExcSqrt13: {
      // (5+sqrt(13))/2 = 3 + sum of zeta_13^j over the quadratic residues.
      RootSum r = RootSum::integer(3);
      for (long j : {1, 3, 4, 9, 10, 12}) r = r + RootSum::root(13, j);
      return r;
    }
    case ListKind::ExcSqrt7Sqrt3: {
      // (5+sqrt(21))/2 = 2 + sum of zeta_21^j over ker of the Jacobi character.
      RootSum r = RootSum::integer(2);
      for (long j : {1, 4, 5, 16, 17, 20}) r = r + RootSum::root(21, j);
      return r;
    }
    case ListKind::Exc70: {
      RootSum b = witness_exc70();
      return b * b.conjugate();
    }
  }
  throw std::logic_error("list_value_squared: bad kind");
}

BallReal list_value_ball(const ListValue& v, long prec) {
  BallReal sq = eval(list_value_squared(v), 1, PrecisionPolicy{0, 0, prec}).re;
  // The value is a square, hence nonnegative; clamp roundoff below zero.
  return BallReal::max_iv(sq, BallReal::exact_long(0, prec)).sqrt_pos();
}

long list_value_conductor(const ListValue& v) {
  return conductor_of(list_value_squared(v));
}

std::vector<ListValue> candidates_for(long C) {
  std::set<long> ns = {1, 2, 3, 4, 5, 6};
  for (long d : divisors(C)) {
    ns.insert(d);
    // Q(zeta_2d) = Q(zeta_d) for odd d, so conductor d admits index 2d too.
    if (d % 2) ns.insert(2 * d);
  }
  std::vector<ListValue> ordered;
  // FormA(1) = -2 and FormA(2) = 0 are never houses.
  for (long n : ns)
    if (n >= 3) ordered.push_back(form_a(n));
  for (long n : ns) ordered.push_back(form_b(n));
  ordered.push_back({ListKind::ExcSqrt13, 0});
  ordered.push_back({ListKind::ExcSqrt7Sqrt3, 0});
  ordered.push_back({ListKind::Exc70, 0});

  // Drop entries equal in value to an earlier one (e.g. FormB(4) = FormA(6)).
  std::vector<ListValue> out;
  std::vector<RootSum> squares;
  for (const ListValue& v : ordered) {
    RootSum sq = list_value_squared(v);
    bool dup = false;
    for (const RootSum& seen : squares) {
      if (equal_values(sq, seen)) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      out.push_back(v);
      squares.push_back(sq);
    }
  }
  return out;
}

}  // namespace cyclotome
