#include "cyclotome/canonical.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cyclotome/numtheory.hpp"

namespace cyclotome {

namespace {

long g_max_conductor = 10080;

std::mutex g_poly_mutex;
std::map<long, std::vector<mpz_class>> g_poly_cache;

// x^N - 1 divided exactly by every Phi_d, d | N, d < N.
std::vector<mpz_class> compute_cyclotomic(long N) {
  std::vector<mpz_class> num(N + 1);
  num[0] = -1;
  num[N] = 1;
  for (long d : divisors(N)) {
    if (d == N) continue;
    const std::vector<mpz_class> den = cyclotomic_poly(d);
    // Exact long division by the monic polynomial den.
    std::vector<mpz_class> quot(num.size() - den.size() + 1);
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
      quot[i] = num[i + den.size() - 1];
      if (quot[i] == 0) continue;
      for (size_t j = 0; j + 1 < den.size(); ++j) num[i + j] -= quot[i] * den[j];
      num[i + den.size() - 1] = 0;
    }
    num = std::move(quot);
  }
  return num;
}

// Rows e -> coefficients of x^e mod Phi_N, for conductors small enough to
// cache; larger conductors take the one-shot division path.
constexpr long kTableLimit = 2520;

std::mutex g_table_mutex;
std::map<long, std::vector<std::vector<long long>>> g_table_cache;

const std::vector<std::vector<long long>>& reduction_table(long N) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto it = g_table_cache.find(N);
  if (it != g_table_cache.end()) return it->second;

  const std::vector<mpz_class>& phi_poly = cyclotomic_poly(N);
  long phi = static_cast<long>(phi_poly.size()) - 1;
  std::vector<std::vector<mpz_class>> rows(N, std::vector<mpz_class>(phi));
  for (long e = 0; e < std::min(phi, N); ++e) rows[e][e] = 1;
  for (long e = phi; e < N; ++e) {
    const std::vector<mpz_class>& prev = rows[e - 1];
    std::vector<mpz_class>& cur = rows[e];
    const mpz_class& top = prev[phi - 1];
    for (long j = 0; j < phi; ++j) {
      cur[j] = (j ? prev[j - 1] : 0) - top * phi_poly[j];
    }
  }
  std::vector<std::vector<long long>> fixed(N, std::vector<long long>(phi));
  for (long e = 0; e < N; ++e)
    for (long j = 0; j < phi; ++j) {
      if (!rows[e][j].fits_slong_p())
        throw std::overflow_error("reduction table entry exceeds long");
      fixed[e][j] = rows[e][j].get_si();
    }
  return g_table_cache.emplace(N, std::move(fixed)).first->second;
}

CanonicalForm canonicalize_division(const RootSum& a) {
  long N = a.conductor();
  const std::vector<mpz_class>& phi_poly = cyclotomic_poly(N);
  long phi = static_cast<long>(phi_poly.size()) - 1;
  std::vector<mpz_class> c(N);
  for (auto& [e, m] : a.terms()) c[e] += m;
  for (long i = N - 1; i >= phi; --i) {
    if (c[i] == 0) continue;
    mpz_class q = c[i];
    for (long j = 0; j <= phi; ++j) c[i - phi + j] -= q * phi_poly[j];
  }
  CanonicalForm out;
  out.conductor = N;
  out.coeffs.resize(phi);
  for (long j = 0; j < phi; ++j) {
    if (!c[j].fits_slong_p())
      throw std::overflow_error("canonical coefficient exceeds long");
    out.coeffs[j] = c[j].get_si();
  }
  return out;
}

}  // namespace

long max_conductor() { return g_max_conductor; }
void set_max_conductor(long N) { g_max_conductor = N; }

const std::vector<mpz_class>& cyclotomic_poly(long N) {
  {
    std::lock_guard<std::mutex> lock(g_poly_mutex);
    auto it = g_poly_cache.find(N);
    if (it != g_poly_cache.end()) return it->second;
  }
  std::vector<mpz_class> poly = compute_cyclotomic(N);
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  return g_poly_cache.emplace(N, std::move(poly)).first->second;
}

CanonicalForm canonicalize(const RootSum& a) {
  long N = a.conductor();
  if (N > g_max_conductor)
    throw std::invalid_argument("canonicalize: conductor exceeds the configured ceiling");
  if (N > kTableLimit) return canonicalize_division(a);
  const auto& table = reduction_table(N);
  CanonicalForm out;
  out.conductor = N;
  out.coeffs.assign(table[0].size(), 0);
  for (auto& [e, m] : a.terms()) {
    const std::vector<long long>& row = table[e];
    for (size_t j = 0; j < row.size(); ++j) out.coeffs[j] += m * row[j];
  }
  return out;
}

bool is_zero_value(const RootSum& a) {
  if (a.structurally_zero()) return true;
  return canonicalize(a).is_zero();
}

bool equal_values(const RootSum& a, const RootSum& b) {
  return is_zero_value(a - b);
}

std::vector<RootSum> p_split(const RootSum& a, long p) {
  long N = a.conductor();
  if (N % p) throw std::invalid_argument("p_split: p does not divide the conductor");
  int n = valuation(N, p);
  long P = 1;
  for (int i = 0; i < n; ++i) P *= p;
  long M = N / P;
  long Pp = P / p;           // p^(n-1)
  long sub = Pp * M;         // conductor N/p of the parts
  long d = inv_mod(M % P, P);              // M inverse mod P (M=1 -> 1)
  long c = M == 1 ? 0 : inv_mod(P % M, M);  // P inverse mod M
  std::vector<RootSum> parts(p, RootSum(sub));
  for (auto& [e, m] : a.terms()) {
    // zeta_N^e = zeta_P^s * zeta_M^b with s = d*e mod P, b = c*e mod M.
    long s = mod_norm(d * (e % P), P);
    long b = M == 1 ? 0 : mod_norm(c * (e % M), M);
    long t = s % p;
    long q = s / p;
    // zeta_P^s = zeta_P^t * zeta_{Pp}^q, and zeta_{Pp}^q * zeta_M^b =
    // zeta_sub^(M*q + Pp*b) since zeta_sub^M = zeta_{Pp}, zeta_sub^{Pp} = zeta_M.
    parts[t].add_term(M * q + Pp * b, m);
  }
  return parts;
}

long conductor_of(const RootSum& a) { return reduce_to_conductor(a).conductor(); }

RootSum reduce_to_conductor(const RootSum& a) {
  RootSum cur = a;
  if (is_zero_value(cur)) return RootSum(1);
  bool descended = true;
  while (descended && cur.conductor() > 1) {
    descended = false;
    for (auto [p, n] : factorize(cur.conductor())) {
      std::vector<RootSum> parts = p_split(cur, p);
      if (n >= 2) {
        bool flat = true;
        for (long t = 1; t < p && flat; ++t) flat = is_zero_value(parts[t]);
        if (flat) {
          cur = parts[0];
          descended = true;
          break;
        }
      } else {
        bool flat = true;
        for (long t = 2; t < p && flat; ++t) flat = equal_values(parts[t], parts[1]);
        if (flat) {
          // All eta_t (t >= 1) equal: beta = eta_0 + eta_1 * (sum of the
          // nontrivial p-th roots) = eta_0 - eta_1.
          cur = parts[0] - parts[1];
          descended = true;
          break;
        }
      }
    }
  }
  return cur;
}

bool is_root_of_unity(const RootSum& a, long* exp_out, int* sign_out) {
  RootSum r = reduce_to_conductor(a);
  long N = r.conductor();
  CanonicalForm cv = canonicalize(r);
  if (cv.is_zero()) return false;
  for (long e = 0; e < N; ++e) {
    for (int sign : {1, -1}) {
      if (canonicalize(r - RootSum::root(N, e, sign)).is_zero()) {
        if (exp_out) *exp_out = e;
        if (sign_out) *sign_out = sign;
        return true;
      }
    }
  }
  return false;
}

}  // namespace cyclotome
