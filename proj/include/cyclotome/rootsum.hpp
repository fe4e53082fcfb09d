#pragma once
// RootSum: a cyclotomic integer written as an integer combination of roots
// of unity, sum of m_e * zeta_N^e. Exponents live in Z/N; multiplicities are
// integers and may be negative. Text form: "N:e1^m1,e2^m2,...".

#include <map>
#include <string>

namespace cyclotome {

class RootSum {
 public:
  RootSum() : conductor_(1) {}
  explicit RootSum(long conductor);

  // zeta_N^e with multiplicity m.
  static RootSum root(long N, long e, long m = 1);
  // The rational integer c (conductor 1).
  static RootSum integer(long c);
  // Parse the "N:e1^m1,e2^m2,..." text form; "N:" is the zero sum.
  static RootSum parse(const std::string& text);

  long conductor() const { return conductor_; }
  const std::map<long, long>& terms() const { return terms_; }

  // No stored terms (stronger than being zero as a number).
  bool structurally_zero() const { return terms_.empty(); }
  // Sum of |multiplicity|; upper bound for the minimal number of roots.
  long term_count() const;

  void add_term(long e, long m);

  // Rewrite over conductor M (requires N | M); value unchanged.
  RootSum lifted(long M) const;

  RootSum operator+(const RootSum& o) const;
  RootSum operator-() const;
  RootSum operator-(const RootSum& o) const;
  RootSum operator*(const RootSum& o) const;

  // Complex conjugate: zeta -> zeta^-1.
  RootSum conjugate() const;
  // Galois action zeta_N -> zeta_N^k; requires gcd(k, N) = 1.
  RootSum galois(long k) const;
  // Multiply by zeta_N^t.
  RootSum rotated(long t) const;

  std::string str() const;

  bool operator==(const RootSum& o) const {
    return conductor_ == o.conductor_ && terms_ == o.terms_;
  }

 private:
  long conductor_;
  std::map<long, long> terms_;  // exponent -> nonzero multiplicity
};

// apply_galois(g, a): free-function form of a.galois(g).
RootSum apply_galois(long g, const RootSum& a);

}  // namespace cyclotome
