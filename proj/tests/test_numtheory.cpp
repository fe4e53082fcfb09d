#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "cyclotome/numtheory.hpp"

using namespace cyclotome;

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(360) ==
        std::vector<std::pair<long, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(97) == std::vector<std::pair<long, int>>{{97, 1}});
}

TEST_CASE("is_prime") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 2521L}) CHECK(is_prime(p));
  for (long n : {1L, 4L, 9L, 91L, 2520L}) CHECK_FALSE(is_prime(n));
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(70) == 24);
  CHECK(euler_phi(420) == 96);
  CHECK(euler_phi(2520) == 576);
  CHECK(euler_phi(10080) == 2304);
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(42) == -1);
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1680).size() == 40);
}

TEST_CASE("valuation and mod_norm") {
  CHECK(valuation(40, 2) == 3);
  CHECK(valuation(40, 5) == 1);
  CHECK(valuation(40, 3) == 0);
  CHECK(mod_norm(-3, 5) == 2);
  CHECK(mod_norm(7, 5) == 2);
  CHECK(mod_norm(0, 5) == 0);
}

TEST_CASE("inv_mod and crt") {
  CHECK(inv_mod(3, 7) == 5);
  CHECK(inv_mod(1, 1) == 0);
  CHECK_THROWS_AS(inv_mod(2, 4), std::invalid_argument);
  CHECK(crt(2, 3, 3, 5) == 8);
  CHECK(crt(0, 4, 1, 9) == 28);
}

TEST_CASE("trace_root") {
  // Tr(1) over Q(zeta_5) = phi(5).
  CHECK(trace_root(5, 0) == 4);
  // Tr(zeta_5) = mu(5) = -1.
  CHECK(trace_root(5, 1) == -1);
  // zeta_12^6 = -1 has trace -phi(12).
  CHECK(trace_root(12, 6) == -4);
  // zeta_9^3 = zeta_3: trace over Q(zeta_9) is 3 * (-1).
  CHECK(trace_root(9, 3) == -3);
  // Sum over all exponents telescopes to 0 for N > 1.
  for (long N : {5L, 12L, 30L}) {
    long s = 0;
    for (long j = 0; j < N; ++j) s += trace_root(N, j);
    CHECK(s == 0);
  }
}

TEST_CASE("coprime_residues") {
  CHECK(coprime_residues(1) == std::vector<long>{1});
  CHECK(coprime_residues(5) == std::vector<long>{1, 2, 3, 4});
  CHECK(coprime_residues(12) == std::vector<long>{1, 5, 7, 11});
  CHECK(coprime_residues(420).size() == 96);
}
