#pragma once
// Exact M (Cassels' mean square of conjugate magnitudes) as a rational,
// computed through exact traces of roots of unity so that no floating
// arithmetic is involved.

#include <vector>

#include <gmpxx.h>

#include "cyclotome/rootsum.hpp"

namespace cyclotome {

// Exact rational value of M(a) = Tr(a * conj(a)) / phi(N). M(0) = 0.
mpq_class m_of(const RootSum& a);

// M(1 + zeta_N) = 2 * (1 + mu(N)/phi(N)), exact.
mpq_class m_of_two_term(long N);

// All Galois elements of Q(zeta_N)/Q for N = a's conductor, ascending.
std::vector<long> conjugates(const RootSum& a);

}  // namespace cyclotome
