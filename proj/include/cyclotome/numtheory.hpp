#pragma once
// Elementary number theory helpers: factorization, totient, Moebius,
// divisors, CRT, and the exact trace of a root of unity (Ramanujan sum).

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclotome {

// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
std::vector<std::pair<long, int>> factorize(long n);

bool is_prime(long n);

// Euler totient.
long euler_phi(long n);

// Moebius function.
int mobius(long n);

// All positive divisors of n, ascending.
std::vector<long> divisors(long n);

// p-adic valuation of n (n != 0).
int valuation(long n, long p);

// Nonnegative representative of a mod m (m > 0).
long mod_norm(long a, long m);

// Modular inverse of a mod m; requires gcd(a, m) = 1.
long inv_mod(long a, long m);

// x with x = r1 (mod m1), x = r2 (mod m2); requires gcd(m1, m2) = 1.
long crt(long r1, long m1, long r2, long m2);

// Exact trace of zeta_N^j over Q(zeta_N)/Q: mu(N/d) * phi(N) / phi(N/d)
// with d = gcd(j, N).
long trace_root(long N, long j);

// Residues coprime to N in [1, N] ([1] for N = 1), ascending; length phi(N).
std::vector<long> coprime_residues(long N);

}  // namespace cyclotome
