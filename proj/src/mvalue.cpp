#include "cyclotome/mvalue.hpp"

#include "cyclotome/numtheory.hpp"

namespace cyclotome {

mpq_class m_of(const RootSum& a) {
  RootSum prod = a * a.conjugate();
  long N = prod.conductor();
  mpz_class trace = 0;
  for (const auto& [e, m] : prod.terms()) {
    trace += mpz_class(m) * trace_root(N, e);
  }
  mpq_class result(trace, euler_phi(N));
  result.canonicalize();
  return result;
}

mpq_class m_of_two_term(long N) {
  mpq_class frac(mobius(N), euler_phi(N));
  frac.canonicalize();
  return 2 * (frac + 1);
}

std::vector<long> conjugates(const RootSum& a) {
  return coprime_residues(a.conductor());
}

}  // namespace cyclotome
