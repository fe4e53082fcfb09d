#pragma once
// Exact canonicalization of RootSums: reduction modulo the N-th cyclotomic
// polynomial to the power basis of Z[zeta_N], conductor minimization by
// prime-by-prime subfield descent, and the p-part splitting shared with the
// decomposition machinery.

#include <compare>
#include <vector>

#include <gmpxx.h>

#include "cyclotome/rootsum.hpp"

namespace cyclotome {

struct CanonicalForm {
  long conductor = 1;
  std::vector<long long> coeffs;  // length phi(conductor), power basis

  bool is_zero() const {
    for (long long c : coeffs)
      if (c) return false;
    return true;
  }
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Largest conductor accepted before canonicalization refuses (memory guard).
long max_conductor();
void set_max_conductor(long N);

// Phi_N as a monic integer polynomial, ascending coefficients; cached.
const std::vector<mpz_class>& cyclotomic_poly(long N);

// Reduce a to the power basis at its own conductor.
CanonicalForm canonicalize(const RootSum& a);

// Value predicates (exact).
bool is_zero_value(const RootSum& a);
bool equal_values(const RootSum& a, const RootSum& b);

// Split a (conductor N, p | N, p^n || N) into the p parts eta_0..eta_{p-1}
// of a = sum_t zeta_{p^n}^t eta_t with eta_t over conductor N/p.
std::vector<RootSum> p_split(const RootSum& a, long p);

// Smallest N' with a in Q(zeta_N'); never returns N' = 2 (mod 4).
long conductor_of(const RootSum& a);

// Equal-valued RootSum rewritten over conductor_of(a).
RootSum reduce_to_conductor(const RootSum& a);

// Exact test: a = sign * zeta_{N'}^e at the minimal conductor N'.
bool is_root_of_unity(const RootSum& a, long* exp_out = nullptr,
                      int* sign_out = nullptr);

}  // namespace cyclotome
