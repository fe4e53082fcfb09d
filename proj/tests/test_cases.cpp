// Reproduction registry: the cheap cases run end to end here; the
// conductor-420 sweep case is exercised by the acceptance binary.

#include <algorithm>
#include <stdexcept>

#include "doctest.h"

#include "cyclotome/case_registry.hpp"
#include "cyclotome/cases.hpp"

using namespace cyclotome;

TEST_CASE("registry lists every case once and rejects unknown ids") {
  const auto& ids = case_ids();
  CHECK(ids.size() == 10);
  for (const char* want :
       {"p9-gamma5", "p8-gamma57", "p11x3", "p13x3-53", "p17x3", "p19x3",
        "jones-1pmi", "p11x4-table", "lemma31", "q420-k-small"}) {
    CAPTURE(want);
    CHECK(std::count(ids.begin(), ids.end(), std::string(want)) == 1);
  }
  CHECK_THROWS_AS(run_case("no-such-case"), std::invalid_argument);
}

TEST_CASE("single-witness bounds certify with the expected squared houses") {
  struct Row {
    const char* id;
    double min_sq;
  };
  for (const Row& row : {Row{"p11x3", 5.761136}, Row{"p13x3-53", 12.643677},
                         Row{"p17x3", 9.838749}, Row{"p19x3", 10.675688}}) {
    CAPTURE(row.id);
    CaseResult r = run_case(row.id);
    CHECK(r.pass);
    CHECK(r.candidate_count == 1);
    CHECK(r.min_house_sq == doctest::Approx(row.min_sq).epsilon(1e-5));
  }
}

TEST_CASE("the 384-candidate sweep: tight quoted minimum") {
  CaseResult r = run_case("p9-gamma5");
  CHECK(r.pass);
  CHECK(r.candidate_count == 384);
  CHECK(r.min_house_sq > 5.094);
  CHECK(r.min_house_sq == doctest::Approx(5.094026).epsilon(1e-5));
}

TEST_CASE("the 672-candidate sweep: quoted bound holds with slack") {
  CaseResult r = run_case("p8-gamma57");
  CHECK(r.pass);
  CHECK(r.candidate_count == 672);
  CHECK(r.min_house_sq > 5.0489);
  CHECK(r.min_house_sq == doctest::Approx(5.577935).epsilon(1e-5));
}

TEST_CASE("the 40-divisor sweep: every survivor on the list") {
  CaseResult r = run_case("jones-1pmi");
  CHECK(r.pass);
  CHECK(r.candidate_count == 80);  // both signs per divisor
  CHECK(r.min_house_sq == doctest::Approx(1.0));
  CHECK(r.max_house_sq == doctest::Approx(5.828427).epsilon(1e-5));
}

TEST_CASE("the four-term survivor table maps to its FormB values") {
  CaseResult r = run_case("p11x4-table");
  CHECK(r.pass);
  CHECK(r.candidate_count == 3);
}

TEST_CASE("the positivity certificate case reports the certified zero count") {
  CaseResult r = run_case("lemma31");
  CHECK(r.pass);
  // The registry records the quoted derivative-zero count (14); the case
  // reports the certified Sturm count next to it.
  CHECK(r.candidate_count == 20);
  CHECK(registry::kQuotedDerivativeZeros == 14);
  CHECK(r.details.find("quoted zero count: 14") != std::string::npos);
  CHECK(r.details.find("certified Sturm count is 20") != std::string::npos);
}
