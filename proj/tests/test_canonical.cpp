#include "doctest.h"

#include <random>
#include <stdexcept>

#include "cyclotome/canonical.hpp"
#include "cyclotome/numtheory.hpp"
#include "cyclotome/rootsum.hpp"

using namespace cyclotome;

TEST_CASE("cyclotomic polynomials") {
  // Phi_1 = x - 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1.
  CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});
  // Phi_105 is the first with a coefficient of magnitude 2 (on x^7).
  CHECK(cyclotomic_poly(105)[7] == -2);
  for (long N : {2L, 12L, 420L}) {
    CHECK(cyclotomic_poly(N).size() == size_t(euler_phi(N) + 1));
    CHECK(cyclotomic_poly(N).back() == 1);
  }
}

TEST_CASE("canonicalize basics") {
  CHECK(canonicalize(RootSum::parse("3:0^1,1^1,2^1")).is_zero());
  CHECK(canonicalize(RootSum::parse("5:0^1,1^1,2^1,3^1,4^1")).is_zero());

  CanonicalForm minus_one = canonicalize(RootSum::root(4, 2));
  CHECK(minus_one.conductor == 4);
  CHECK(minus_one.coeffs == std::vector<long long>{-1, 0});

  CanonicalForm v = canonicalize(RootSum::parse("5:0^2,1^1"));
  CHECK(v.coeffs == std::vector<long long>{2, 1, 0, 0});

  // zeta_5^4 = -1 - zeta - zeta^2 - zeta^3 in the power basis.
  CHECK(canonicalize(RootSum::root(5, 4)).coeffs ==
        std::vector<long long>{-1, -1, -1, -1});
}

TEST_CASE("value equality across conductors") {
  CHECK(equal_values(RootSum::root(12, 4), RootSum::root(3, 1)));
  CHECK(equal_values(RootSum::root(6, 1), RootSum::root(3, 2) * RootSum::integer(-1)));
  CHECK_FALSE(equal_values(RootSum::root(5, 1), RootSum::root(5, 2)));
  CHECK(is_zero_value(RootSum::parse("15:0^1,5^1,10^1")));
}

TEST_CASE("canonicalize is additive") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    long N = 1 + long(rng() % 60);
    RootSum a(N), b(N);
    for (int i = 0; i < 4; ++i) {
      a.add_term(long(rng() % N), long(rng() % 5) - 2);
      b.add_term(long(rng() % N), long(rng() % 5) - 2);
    }
    CanonicalForm ca = canonicalize(a), cb = canonicalize(b), cs = canonicalize(a + b);
    for (size_t i = 0; i < cs.coeffs.size(); ++i) {
      CHECK(cs.coeffs[i] == ca.coeffs[i] + cb.coeffs[i]);
    }
  }
}

TEST_CASE("galois preserves zero") {
  RootSum zero = RootSum::parse("15:0^1,5^1,10^1") + RootSum::parse("15:3^1,6^1,9^1,12^1,0^1");
  CHECK(is_zero_value(zero));
  for (long k : coprime_residues(15)) {
    CHECK(is_zero_value(apply_galois(k, zero)));
  }
}

TEST_CASE("conductor_of") {
  CHECK(conductor_of(RootSum::root(6, 2)) == 3);
  CHECK(conductor_of(RootSum::parse("5:0^1,1^1")) == 5);
  CHECK(conductor_of(RootSum::root(4, 1) * RootSum::root(3, 1)) == 12);
  // Never 2 mod 4: zeta_6 itself lives in Q(zeta_3).
  CHECK(conductor_of(RootSum::root(6, 1)) == 3);
  CHECK(conductor_of(RootSum::integer(7)) == 1);
  CHECK(conductor_of(RootSum::parse("7:")) == 1);
  // 2 cos(2 pi / 7) needs the full field's real subfield... still conductor 7.
  CHECK(conductor_of(RootSum::parse("7:1^1,6^1")) == 7);
  // A sum accidentally rational: 1 + zeta_5 + ... + zeta_5^4 + 3 = 3.
  CHECK(conductor_of(RootSum::parse("5:0^4,1^1,2^1,3^1,4^1")) == 1);
}

TEST_CASE("reduce_to_conductor keeps the value") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    long N = 1 + long(rng() % 48);
    RootSum a(N);
    for (int i = 0; i < 3; ++i) a.add_term(long(rng() % N), long(rng() % 3) - 1);
    RootSum r = reduce_to_conductor(a);
    CHECK(r.conductor() == conductor_of(a));
    CHECK(equal_values(a, r));
  }
}

TEST_CASE("p_split reassembles") {
  // a = eta_0 + zeta_{p^n} eta_1 + ... with eta_t over N/p; check exactness.
  std::mt19937_64 rng(13);
  for (long N : {15L, 20L, 36L, 35L}) {
    for (auto& [p, n] : factorize(N)) {
      (void)n;
      for (int trial = 0; trial < 5; ++trial) {
        RootSum a(N);
        for (int i = 0; i < 4; ++i) a.add_term(long(rng() % N), long(rng() % 3) - 1);
        auto parts = p_split(a, p);
        REQUIRE(parts.size() == size_t(p));
        long P = 1;
        for (long q = N; q % p == 0; q /= p) P *= p;
        RootSum sum(N);
        for (long t = 0; t < p; ++t) {
          CHECK(parts[t].conductor() == N / p);
          sum = sum + RootSum::root(N, t * (N / P)) * parts[t];
        }
        CHECK(equal_values(sum, a));
      }
    }
  }
}

TEST_CASE("is_root_of_unity") {
  long e = -1;
  int sign = 0;
  CHECK(is_root_of_unity(RootSum::root(9, 4), &e, &sign));
  CHECK(e == 4);
  CHECK(sign == 1);
  // -zeta_7^3: minimal conductor of the value is 14 -> stored as sign -1, conductor 7.
  CHECK(is_root_of_unity(-RootSum::root(7, 3), &e, &sign));
  CHECK(sign == -1);
  CHECK(e == 3);
  CHECK_FALSE(is_root_of_unity(RootSum::parse("5:0^1,1^1")));
  CHECK_FALSE(is_root_of_unity(RootSum::parse("5:")));
  CHECK(is_root_of_unity(RootSum::integer(1), &e, &sign));
  CHECK(e == 0);
  CHECK(sign == 1);
}

TEST_CASE("large conductors use the division path") {
  // 5040 exceeds the dense-table limit; equality still exact.
  CHECK(equal_values(RootSum::root(5040, 1008), RootSum::root(5, 1)));
  CHECK(canonicalize(RootSum::parse("2521:") + RootSum::root(2521, 0) -
                     RootSum::root(2521, 0))
            .is_zero());
  RootSum big(2521);
  for (long j = 0; j < 2521; ++j) big.add_term(j, 1);
  CHECK(is_zero_value(big));
}

TEST_CASE("conductor ceiling enforced") {
  CHECK(max_conductor() == 10080);
  CHECK_THROWS_AS(canonicalize(RootSum::root(20160, 1)), std::invalid_argument);
}
