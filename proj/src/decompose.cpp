#include "cyclotome/decompose.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "cyclotome/canonical.hpp"
#include "cyclotome/eval.hpp"
#include "cyclotome/house.hpp"
#include "cyclotome/mvalue.hpp"
#include "cyclotome/numtheory.hpp"

namespace cyclotome {

Decomposition p_decompose(const RootSum& a, long p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
  long n_cond = a.conductor();
  if (n_cond % p != 0) throw std::invalid_argument("p must divide the conductor");

  Decomposition d;
  d.base = a;
  d.p = p;
  d.n = valuation(n_cond, p);
  d.parts = p_split(a, p);

  if (d.n == 1) {
    // The split is unique only up to adding a constant to all parts; subtract
    // the most frequent value (smallest canonical form on ties) so x_count is
    // minimal and the representative deterministic.
    std::vector<CanonicalForm> forms;
    forms.reserve(d.parts.size());
    for (const RootSum& part : d.parts) forms.push_back(canonicalize(part));
    std::size_t best = 0;
    long best_count = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      long count = 0;
      for (const CanonicalForm& f : forms) {
        if (f == forms[i]) ++count;
      }
      if (count > best_count || (count == best_count && forms[i] < forms[best])) {
        best = i;
        best_count = count;
      }
    }
    if (!forms[best].is_zero()) {
      RootSum shift = d.parts[best];
      for (RootSum& part : d.parts) part = part - shift;
    }
  }

  for (const RootSum& part : d.parts) {
    if (!is_zero_value(part)) ++d.x_count;
  }
  return d;
}

namespace {

std::vector<const RootSum*> nonzero_parts(const Decomposition& d) {
  std::vector<const RootSum*> nz;
  for (const RootSum& part : d.parts) {
    if (!is_zero_value(part)) nz.push_back(&part);
  }
  return nz;
}

}  // namespace

IdentityReport check_exact_eqn(const Decomposition& d) {
  if (d.n != 1) throw std::invalid_argument("exact identity requires n == 1");
  std::vector<const RootSum*> nz = nonzero_parts(d);

  IdentityReport rep;
  rep.lhs = mpq_class(d.p - 1) * m_of(d.base);
  mpq_class part_sum = 0;
  for (const RootSum* ai : nz) part_sum += m_of(*ai);
  mpq_class pair_sum = 0;
  for (std::size_t i = 0; i < nz.size(); ++i) {
    for (std::size_t j = i + 1; j < nz.size(); ++j) {
      pair_sum += m_of(*nz[i] - *nz[j]);
    }
  }
  rep.rhs = mpq_class(d.p - static_cast<long>(nz.size())) * part_sum + pair_sum;
  rep.equal = (rep.lhs == rep.rhs);
  return rep;
}

IdentityReport check_square_eqn(const Decomposition& d) {
  if (d.n < 2) throw std::invalid_argument("square identity requires n >= 2");
  IdentityReport rep;
  rep.lhs = m_of(d.base);
  rep.rhs = 0;
  for (const RootSum* ai : nonzero_parts(d)) rep.rhs += m_of(*ai);
  rep.equal = (rep.lhs == rep.rhs);
  return rep;
}

BallReal conj_lower_bound(const RootSum& alpha, const RootSum& gamma, long p, long n,
                          BoundMode mode, long prec) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n < 1) throw std::invalid_argument("n must be >= 1");

  long cond_a = conductor_of(alpha);
  long cond_g = conductor_of(gamma);

  // Largest m with zeta_{p^m} in one of the two fields.  Minimal conductors
  // are never 2 mod 4, so for p = 2 the floor is m = 1 (as -1 is rational).
  long m = std::max(valuation(cond_a, p), valuation(cond_g, p));
  if (p == 2 && m < 1) m = 1;
  if (m >= n) {
    throw std::invalid_argument("fields already contain zeta_{p^n}: no conjugation freedom");
  }
  if (mode == BoundMode::Houses && std::gcd(cond_a, cond_g) != 1) {
    throw std::invalid_argument("houses mode requires coprime conductors");
  }

  mpz_class power = 1;
  long reps = (m == 0) ? n : n - m;
  for (long i = 0; i < reps; ++i) power *= p;
  // 2/p^n with p odd when m = 0, else 1/p^{n-m}: both already canonical.
  mpq_class frac = (m == 0) ? mpq_class(mpz_class(2)) / mpq_class(power)
                            : mpq_class(mpz_class(1)) / mpq_class(power);
  BallReal theta = BallReal::pi(prec) * BallReal::from_mpq(frac, prec);
  BallReal cos_theta = theta.cos();

  BallReal a2(prec), g2(prec);
  PrecisionPolicy policy{0, 0, prec};
  if (mode == BoundMode::Magnitudes) {
    a2 = eval(alpha, 1, policy).abs2();
    g2 = eval(gamma, 1, policy).abs2();
  } else {
    a2 = house_of(alpha, policy).house.sqr();
    g2 = house_of(gamma, policy).house.sqr();
  }
  BallReal two = BallReal::exact_long(2, prec);
  return a2 + g2 + two * a2.sqrt_pos() * g2.sqrt_pos() * cos_theta;
}

}  // namespace cyclotome
