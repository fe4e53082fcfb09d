#pragma once
// Certified house computation (max |conjugate|) and classification against
// the target list: below the cutoff every house must match a list value,
// and a certified non-match is a counterexample alarm.

#include "cyclotome/ball.hpp"
#include "cyclotome/forms.hpp"
#include "cyclotome/rootsum.hpp"

#include <gmpxx.h>

namespace cyclotome {

enum class HouseStatus { OnList, ProvedExceeds, StrictlyBetween, Unresolved };

const char* status_name(HouseStatus s);

// The classification cutoff: houses with square above 5 + 1/25 are out of
// scope and reported as ProvedExceeds.
const mpq_class& house_sq_cutoff();

struct HouseReport {
  RootSum input;
  long conductor = 1;  // minimal conductor of the value
  long degree = 1;     // phi(conductor)
  BallReal house;      // certified enclosure of the house
  HouseStatus status = HouseStatus::Unresolved;
  ListValue list_value{ListKind::FormA, 0};  // meaningful when status == OnList
  long witness_k = 0;  // smallest conjugate index attaining the house; 0 = uncertified
};

// Certified maximum of |sigma_k(a)| over all conjugates, with the smallest
// attaining index as witness (ties broken by exact value equality). The
// enclosure is always sound; witness_k stays 0 and status Unresolved only
// if the precision budget cannot separate distinct near-maximal conjugates.
HouseReport house_of(const RootSum& a, const PrecisionPolicy& p);

// house_of plus status: ProvedExceeds past the cutoff, otherwise certified
// equality against every admissible list value (OnList on a match,
// StrictlyBetween if everything is certifiably unequal, Unresolved only on
// precision exhaustion).
HouseReport classify(const RootSum& a);

// Index M with house(1 + zeta_n - zeta_n^-1) = FormB(M), n >= 3.
long jones_form_M(long n);

}  // namespace cyclotome
