#pragma once
// The target list of houses: two parametric families FormA(N) = 2 cos(pi/N)
// and FormB(N) = sqrt(1 + 4 cos^2(pi/N)), two exceptional quadratic
// constants, and the one exceptional value of conductor 70. Each value is
// carried exactly through a RootSum equal to its square.

#include <string>
#include <vector>

#include "cyclotome/ball.hpp"
#include "cyclotome/rootsum.hpp"

namespace cyclotome {

enum class ListKind { FormA, FormB, ExcSqrt13, ExcSqrt7Sqrt3, Exc70 };

struct ListValue {
  ListKind kind;
  long n = 0;  // family parameter; 0 for the exceptional constants

  std::string str() const;
  friend bool operator==(const ListValue&, const ListValue&) = default;
};

ListValue form_a(long n);
ListValue form_b(long n);

// The exact cyclotomic integer equal to the squared value:
//   FormA(N)^2 = 2 + zeta_N + zeta_N^-1      (4 cos^2(pi/N))
//   FormB(N)^2 = 3 + zeta_N + zeta_N^-1      (1 + 4 cos^2(pi/N))
//   ExcSqrt13^2 = (5+sqrt(13))/2, ExcSqrt7Sqrt3^2 = (5+sqrt(21))/2,
//   Exc70^2 = beta * conj(beta) for the conductor-70 witness.
RootSum list_value_squared(const ListValue& v);

// Enclosure of the (nonnegative) value itself.
BallReal list_value_ball(const ListValue& v, long prec);

// Minimal conductor of the squared value.
long list_value_conductor(const ListValue& v);

// Every list value that can equal the house of a beta whose squared house
// has minimal conductor C (house^2 is a conjugate of beta*conj(beta), so
// the squared list value must generate the same field). Ordered by
// classification priority: FormA ascending N, FormB ascending N, then the
// exceptional constants; exact value collisions keep the earliest entry.
std::vector<ListValue> candidates_for(long C);

// Witnesses attaining the values ("these values do actually occur").
RootSum witness_form_a(long N);           // zeta_N + zeta_N^-1
RootSum witness_form_b(long N);           // zeta_4 + zeta_N + zeta_N^-1
RootSum witness_exc_sqrt13();             // 1 + zeta_13 + zeta_13^4
RootSum witness_exc_sqrt7_sqrt3();        // zeta_84^-9 + zeta_84^-7 + zeta_84^3 + zeta_84^27
RootSum witness_exc70();                  // 1 + zeta_70 + zeta_70^10 + zeta_70^29

}  // namespace cyclotome
