#include "cyclotome/numtheory.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace cyclotome {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long euler_phi(long n) {
  long r = 1;
  for (auto [p, e] : factorize(n)) {
    long pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    r *= pe * (p - 1);
  }
  return r;
}

int mobius(long n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t m = out.size();
    long pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (size_t j = 0; j < m; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int valuation(long n, long p) {
  assert(n != 0 && p >= 2);
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long mod_norm(long a, long m) {
  assert(m > 0);
  long r = a % m;
  return r < 0 ? r + m : r;
}

long inv_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, a1 = mod_norm(a, m);
  while (a1) {
    long q = g / a1;
    g -= q * a1;
    std::swap(g, a1);
    x -= q * x1;
    std::swap(x, x1);
  }
  if (g != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
  return mod_norm(x, m);
}

long crt(long r1, long m1, long r2, long m2) {
  // x = r1 + m1 * t with t solving m1 * t = r2 - r1 (mod m2).
  long t = mod_norm((r2 - r1) % m2 * inv_mod(m1, m2) % m2, m2);
  return mod_norm(r1 + m1 * t, m1 * m2);
}

long trace_root(long N, long j) {
  long d = std::gcd(mod_norm(j, N), N);  // gcd(0, N) = N covers j = 0
  long Nd = N / d;
  return mobius(Nd) * (euler_phi(N) / euler_phi(Nd));
}

std::vector<long> coprime_residues(long N) {
  std::vector<long> out;
  if (N == 1) return {1};
  for (long k = 1; k < N; ++k)
    if (std::gcd(k, N) == 1) out.push_back(k);
  return out;
}

}  // namespace cyclotome
