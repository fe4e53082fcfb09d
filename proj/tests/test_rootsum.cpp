#include "doctest.h"

#include <map>
#include <stdexcept>

#include "cyclotome/rootsum.hpp"

using namespace cyclotome;

TEST_CASE("construction and text round-trip") {
  RootSum a = RootSum::parse("5:0^1,1^1");
  CHECK(a.conductor() == 5);
  CHECK(a.str() == "5:0^1,1^1");
  CHECK(RootSum::parse("7:").structurally_zero());
  CHECK(RootSum::parse("7:").str() == "7:");
  CHECK(RootSum::parse("3:1^-2").str() == "3:1^-2");
  // Exponents reduce mod N on entry.
  CHECK(RootSum::root(5, 7).str() == "5:2^1");
  CHECK(RootSum::root(5, -1).str() == "5:4^1");
  CHECK(RootSum::integer(-3).str() == "1:0^-3");
  CHECK(RootSum::integer(0).structurally_zero());
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "x", "5", "5:0", "5:0^", "5:^1", "0:0^1",
                          "5:0^1,", "5:0^1 junk", "-5:0^1"}) {
    CHECK_THROWS_AS(RootSum::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("addition") {
  CHECK((RootSum::integer(1) + RootSum::integer(-1)).structurally_zero());

  RootSum a = RootSum::parse("5:0^1,1^1") + RootSum::root(5, 2);
  CHECK(a.str() == "5:0^1,1^1,2^1");

  RootSum b = RootSum::parse("7:0^1,1^1");
  CHECK((b + b).str() == "7:0^2,1^2");
}

TEST_CASE("multiplication") {
  CHECK((RootSum::root(5, 1) * RootSum::root(5, 4)).str() == "5:0^1");

  RootSum a = RootSum::parse("5:0^1,1^1");
  RootSum b = RootSum::parse("5:0^1,4^1");
  CHECK((a * b).str() == "5:0^2,1^1,4^1");

  // Conductors lift to the lcm.
  RootSum c = RootSum::root(4, 1) * RootSum::root(3, 1);
  CHECK(c.conductor() == 12);
  CHECK(c.str() == "12:7^1");
}

TEST_CASE("lifting preserves terms") {
  RootSum a = RootSum::parse("5:0^1,2^3");
  RootSum lifted = a.lifted(15);
  CHECK(lifted.conductor() == 15);
  CHECK(lifted.str() == "15:0^1,6^3");
  CHECK_THROWS_AS(a.lifted(7), std::invalid_argument);
}

TEST_CASE("conjugate, galois, rotation") {
  RootSum a = RootSum::parse("7:0^1,1^1,3^1");
  CHECK(a.conjugate().str() == "7:0^1,4^1,6^1");
  CHECK(a.galois(2).str() == "7:0^1,2^1,6^1");
  CHECK(apply_galois(1, a) == a);
  // Conjugation is galois(N-1) and is an involution.
  CHECK(a.galois(6) == a.conjugate());
  CHECK(a.conjugate().conjugate() == a);
  CHECK_THROWS_AS(a.galois(7), std::invalid_argument);
  CHECK(a.rotated(2).str() == "7:2^1,3^1,5^1");
  CHECK(a.rotated(7) == a);
}

TEST_CASE("term_count sums absolute multiplicities") {
  CHECK(RootSum::parse("5:0^2,1^-3").term_count() == 5);
  CHECK(RootSum::parse("5:").term_count() == 0);
}
