#include "cyclotome/house.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "cyclotome/canonical.hpp"
#include "cyclotome/certify.hpp"
#include "cyclotome/eval.hpp"
#include "cyclotome/mvalue.hpp"
#include "cyclotome/numtheory.hpp"

namespace cyclotome {

const char* status_name(HouseStatus s) {
  switch (s) {
    case HouseStatus::OnList:
      return "on-list";
    case HouseStatus::ProvedExceeds:
      return "proved-exceeds";
    case HouseStatus::StrictlyBetween:
      return "strictly-between";
    case HouseStatus::Unresolved:
      return "unresolved";
  }
  return "unresolved";
}

const mpq_class& house_sq_cutoff() {
  static const mpq_class cutoff(126, 25);  // 5 + 1/25
  return cutoff;
}

namespace {

long ceil_log2_ll(long long v) {
  long bits = 0;
  long long x = 1;
  while (x < v) {
    x <<= 1;
    ++bits;
  }
  return bits;
}

// Enclosure of the house at the given precision: sqrt of the max of the
// conjugate |.|^2 enclosures, clamped to be nonnegative.
BallReal house_ball(const RootSum& ar, long prec) {
  if (ar.structurally_zero()) return BallReal::exact_long(0, prec);
  std::vector<BallReal> sq = conjugate_abs_squares(ar, prec);
  BallReal m = sq[0];
  for (size_t i = 1; i < sq.size(); ++i) m = BallReal::max_iv(m, sq[i]);
  return BallReal::max_iv(m, BallReal::exact_long(0, prec)).sqrt_pos();
}

}  // namespace

HouseReport house_of(const RootSum& a, const PrecisionPolicy& p) {
  HouseReport rep;
  rep.input = a;
  RootSum ar = reduce_to_conductor(a);
  rep.conductor = ar.conductor();
  rep.degree = euler_phi(rep.conductor);

  long prec = std::max<long>(p.bits, 128);
  if (ar.structurally_zero()) {
    rep.house = BallReal::exact_long(0, prec);
    rep.witness_k = 1;
    return rep;
  }

  // Two conjugates of a*conj(a) are nonzero algebraic integers apart or
  // exactly equal; all their conjugates are below B^2 with B the term
  // count, so distinct ones differ by at least (2B^2)^-(degree-1). That
  // caps the precision ever needed to separate the top set.
  long long b = ar.term_count();
  long budget = rep.degree * ceil_log2_ll(2 * b * b + 2) + 320;

  RootSum bbbar = ar * ar.conjugate();
  std::vector<long> res = coprime_residues(rep.conductor);

  while (true) {
    std::vector<BallReal> sq = conjugate_abs_squares(ar, prec);
    BallReal m = sq[0];
    for (size_t i = 1; i < sq.size(); ++i) m = BallReal::max_iv(m, sq[i]);
    rep.house = BallReal::max_iv(m, BallReal::exact_long(0, prec)).sqrt_pos();

    // Every index that could still attain the maximum.
    std::vector<size_t> top;
    for (size_t i = 0; i < sq.size(); ++i)
      if (mpfr_cmp(sq[i].hi_raw(), m.lo_raw()) >= 0) top.push_back(i);

    if (top.size() == 1) {
      rep.witness_k = res[top[0]];
      return rep;
    }

    // |sigma_k(a)|^2 = sigma_k(a*conj(a)); exact equality of the top set
    // means the maximum is attained at its smallest index.
    bool all_equal = true;
    RootSum ref = bbbar.galois(res[top[0]]);
    for (size_t j = 1; j < top.size(); ++j) {
      if (!equal_values(ref, bbbar.galois(res[top[j]]))) {
        all_equal = false;
        break;
      }
    }
    if (all_equal) {
      rep.witness_k = res[top[0]];
      return rep;
    }
    if (prec >= budget) {
      rep.witness_k = 0;  // enclosure sound, attaining index not certified
      return rep;
    }
    prec = std::min(2 * prec, budget);
  }
}

HouseReport classify(const RootSum& a) {
  RootSum ar = reduce_to_conductor(a);

  // Mean square exactly 1 forces a root of unity (Kronecker), house 1.
  if (!ar.structurally_zero() && m_of(ar) == 1) {
    if (!is_root_of_unity(ar))
      throw std::logic_error("mean square 1 but not a root of unity: " +
                             ar.str());
    HouseReport rep;
    rep.input = a;
    rep.conductor = ar.conductor();
    rep.degree = euler_phi(rep.conductor);
    rep.house = BallReal::exact_long(1, 128);
    rep.status = HouseStatus::OnList;
    rep.list_value = form_a(3);
    rep.witness_k = 1;
    return rep;
  }

  HouseReport rep = house_of(ar, PrecisionPolicy{0, 0, 128});
  rep.input = a;

  RootSum bbbar = reduce_to_conductor(ar * ar.conjugate());
  long csq = bbbar.conductor();

  // Certified compare of house^2 against the cutoff. house^2 is an
  // algebraic integer and the cutoff is not an integer, so 25*house^2 - 126
  // is a nonzero algebraic integer; its norm bound caps the precision
  // needed until the comparison decides.
  long long b = std::max<long long>(ar.term_count(), 1);
  long cutoff_budget =
      euler_phi(csq) * ceil_log2_ll(25 * b * b + 126 + 2) + 320;
  long prec = rep.house.prec();
  BallReal h = rep.house;
  while (true) {
    CompareResult cr = certified_compare(
        h.sqr(), BallReal::from_mpq(house_sq_cutoff(), std::max(prec, 64L)));
    if (cr == CompareResult::Greater) {
      rep.house = h;
      rep.status = HouseStatus::ProvedExceeds;
      return rep;
    }
    if (cr == CompareResult::Less) break;
    if (prec >= cutoff_budget) {
      rep.house = h;
      rep.status = HouseStatus::Unresolved;
      return rep;
    }
    prec = std::min(2 * prec, cutoff_budget);
    h = house_ball(ar, prec);
  }
  rep.house = h;

  // Below the cutoff: decide equality against each admissible list value.
  bool any_precision_out = false;
  for (const ListValue& v : candidates_for(csq)) {
    long k = equality_degree(csq, v);
    PrecisionLadder ladder(k);
    long p2 = std::max(prec, ladder.start);
    BallReal hb = (p2 == prec) ? h : house_ball(ar, p2);
    while (true) {
      EqualityResult er = certify_equal_to_algebraic(hb, v, k);
      if (er == EqualityResult::Equal) {
        rep.house = hb;
        rep.status = HouseStatus::OnList;
        rep.list_value = v;
        return rep;
      }
      if (er == EqualityResult::NotEqual) break;
      long np = ladder.next(p2);
      if (np == 0 || np <= p2) {
        any_precision_out = true;
        break;
      }
      p2 = np;
      hb = house_ball(ar, p2);
    }
  }
  rep.status = any_precision_out ? HouseStatus::Unresolved
                                 : HouseStatus::StrictlyBetween;
  return rep;
}

long jones_form_M(long n) {
  if (n < 3) throw std::invalid_argument("jones_form_M needs n >= 3");
  if (n % 2 == 1) return 2 * n;
  if ((n / 2) % 2 == 1) return n;
  if ((n / 4) % 2 == 1) return n / 4;
  return n / 2;
}

}  // namespace cyclotome
