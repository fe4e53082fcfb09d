#pragma once
// Certified numerical evaluation of root sums under Galois embeddings.
// Roots of unity come from a cached table of enclosures of e^(2*pi*i*j/N),
// built once per (conductor, precision) and shared read-only afterwards.

#include <memory>
#include <vector>

#include "cyclotome/ball.hpp"
#include "cyclotome/rootsum.hpp"

namespace cyclotome {

// Enclosures of cos(2*pi*j/N) and sin(2*pi*j/N) for j = 0..N-1.
class RootTable {
 public:
  RootTable(long N, long prec);

  long conductor() const { return N_; }
  long prec() const { return prec_; }
  const BallReal& cos_at(long j) const { return cos_[j]; }
  const BallReal& sin_at(long j) const { return sin_[j]; }

 private:
  long N_;
  long prec_;
  std::vector<BallReal> cos_, sin_;
};

// Shared cache, keyed by (N, precision); thread-safe.
std::shared_ptr<const RootTable> root_table(long N, long prec);

// sigma_g(a) where sigma_g: zeta_N -> zeta_N^g; g need not be reduced but
// must be coprime to the conductor for a genuine embedding (g = 1 always
// meaningful). The table's conductor must equal a's.
BallComplex eval_conjugate(const RootSum& a, long g, const RootTable& table);

// Enclosure of sigma_g(a) at the policy's working precision.
BallComplex eval(const RootSum& a, long g, const PrecisionPolicy& p);

// |sigma_g(a)|^2 for every g in coprime_residues(conductor), in that order.
std::vector<BallReal> conjugate_abs_squares(const RootSum& a, long prec);

}  // namespace cyclotome
