#pragma once

// Prime-power decompositions beta = sum_t zeta_{p^n}^t * eta_t with parts in
// the subfield of conductor N/p, the two exact mean-square identities they
// satisfy, and the certified conjugation lower bound for houses of sums
// alpha + zeta_{p^n} * gamma.

#include <vector>

#include <gmpxx.h>

#include "cyclotome/ball.hpp"
#include "cyclotome/rootsum.hpp"

namespace cyclotome {

struct Decomposition {
  RootSum base = RootSum::integer(0);
  long p = 2;
  // p^n exactly divides the written conductor of `base`.
  long n = 1;
  // Exactly p parts, each in the subfield of conductor N/p, with
  // base = sum_t zeta_{p^n}^t * parts[t].
  std::vector<RootSum> parts;
  // Number of parts with nonzero value.
  long x_count = 0;
};

// Split `a` along the prime p, which must divide a's written conductor.
// For n = 1 the representation is unique only up to adding a constant to
// every part; the canonical choice subtracts the most frequent part value
// (ties broken by smallest canonical form), which minimizes x_count.  For
// n >= 2 the representation is unique and no shift is applied.
Decomposition p_decompose(const RootSum& a, long p);

struct IdentityReport {
  mpq_class lhs;
  mpq_class rhs;
  bool equal = false;
};

// Exact identity for n = 1 splits, over the nonzero parts alpha_i:
//   (p-1) M(base) = (p-X) sum_i M(alpha_i) + sum_{i<j} M(alpha_i - alpha_j).
// Throws std::invalid_argument unless d.n == 1.
IdentityReport check_exact_eqn(const Decomposition& d);

// Exact identity for n >= 2 splits: M(base) = sum_i M(alpha_i).
// Throws std::invalid_argument unless d.n >= 2.
IdentityReport check_square_eqn(const Decomposition& d);

enum class BoundMode {
  // Bound uses |alpha|, |gamma| under the identity embedding.
  Magnitudes,
  // Bound uses houses of alpha and gamma; requires their minimal conductors
  // to be coprime.
  Houses,
};

// Certified lower bound for the squared house of alpha + zeta_{p^n} * gamma:
//
//   |alpha|^2 + |gamma|^2 + 2 |alpha| |gamma| cos(theta),
//
// where theta = 2*pi/p^n if no p-power root of unity beyond zeta_{p^0} lies
// in the fields of alpha and gamma, and pi/p^{n-m} with m maximal such that
// zeta_{p^m} lies in one of those fields otherwise.  m is derived from the
// minimal conductors; m < n is required (otherwise there is no conjugation
// freedom and std::invalid_argument is thrown).  The returned ball encloses
// the bound expression, so its lower endpoint is the certified bound.
BallReal conj_lower_bound(const RootSum& alpha, const RootSum& gamma, long p, long n,
                          BoundMode mode, long prec = 192);

}  // namespace cyclotome
