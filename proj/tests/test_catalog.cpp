#include "mcfsol/catalog.hpp"

#include <cmath>
#include <set>

#include "doctest.h"

using namespace mcfsol;

TEST_CASE("catalog contains the expected entries") {
  std::set<std::string> names;
  for (const auto& e : catalog_entries()) names.insert(e.name);
  for (const char* want : {"plane", "helicoid", "catenoid", "cylinder", "grim-reaper",
                           "sol2", "sol1-exp32", "sol1-exp34"})
    CHECK(names.count(want) == 1);

  const ExactSolution* grim = find_entry("grim-reaper");
  REQUIRE(grim != nullptr);
  CHECK(grim->gens.b == 1.0);
  CHECK(grim->gens.a == 0.0);
  CHECK(grim->gens.c == 0.0);
  CHECK(grim->gens.axis == Axis::X);
  const auto& gw = std::get<CylindricalSolution>(grim->geometry).w;
  CHECK(gw.x() == 1.0);
  CHECK(gw.y() == 0.0);
  CHECK(gw.z() == 0.5);

  const ExactSolution* sol2 = find_entry("sol2");
  REQUIRE(sol2 != nullptr);
  CHECK(sol2->gens.b == 0.5);
  const auto& sw = std::get<CylindricalSolution>(sol2->geometry).w;
  CHECK(sw.x() == -1.0);
  CHECK(sw.y() == 1.0);
  CHECK(sw.z() == 0.0);

  const ExactSolution* cyl = find_entry("cylinder");
  REQUIRE(cyl != nullptr);
  CHECK(cyl->gens.c == -0.5);

  CHECK(find_entry("sol1-exp32")->disputed);
  CHECK(find_entry("sol1-exp34")->disputed);
  CHECK(find_entry("nosuch") == nullptr);
}

TEST_CASE("every non-disputed entry verifies below its tolerance") {
  const auto outcomes = verify_all();
  for (const auto& o : outcomes) {
    CAPTURE(o.name);
    if (!o.disputed) CHECK(o.pass);
  }
  CHECK(all_verified(outcomes));
}

TEST_CASE("pinned verification tolerances") {
  SUBCASE("grim reaper stays below 1e-9 between the log singularities") {
    const VerifyOutcome o = verify(*find_entry("grim-reaper"));
    CHECK(o.report.max_abs <= 1e-9);
    CHECK(!o.report.samples.empty());
    // the grid avoided the interior singularity
    for (const auto& smp : o.report.samples)
      CHECK(std::abs(smp.s - M_PI / (2 * std::sqrt(3.0))) > 5e-3);
  }
  SUBCASE("sol2 is exact to rounding") {
    const VerifyOutcome o = verify(*find_entry("sol2"));
    CHECK(o.report.max_abs <= 1e-12);
    // scale-free reporting divides by 1 + sum of |terms|
    CHECK(o.report.max_abs_normalized <= o.report.max_abs);
  }
  SUBCASE("trivial entries are exact") {
    CHECK(verify(*find_entry("plane")).report.max_abs <= 1e-12);
    CHECK(verify(*find_entry("helicoid")).report.max_abs <= 1e-12);
    CHECK(verify(*find_entry("catenoid")).report.max_abs <= 1e-12);
    CHECK(verify(*find_entry("cylinder")).report.max_abs <= 1e-12);
  }
}

TEST_CASE("disputed sol1 variants adjudicate as expected") {
  // the displayed e^{3s/4} variant solves the reduced equation, the inline
  // e^{3s/2} variant does not
  const VerifyOutcome a = verify(*find_entry("sol1-exp32"));
  const VerifyOutcome b = verify(*find_entry("sol1-exp34"));
  CHECK(!a.pass);
  CHECK(b.pass);

  const Sol1Report rep = adjudicate_sol1();
  CHECK(rep.variant_half_exponent.solves_ode);
  CHECK(!rep.variant_full_exponent.solves_ode);
  CHECK(rep.variant_half_exponent.ode_sup_residual <= 1e-10);
  CHECK(rep.variant_half_exponent.sup_deviation_from_reference <= 1e-6);
  CHECK(rep.variant_full_exponent.ode_sup_residual > 1e-2);
  CHECK(rep.variant_full_exponent.sup_deviation_from_reference > 1e-2);
  CHECK(rep.reference_self_residual <= 1e-10);
  CHECK(rep.verdict.find("3s/4") != std::string::npos);
}
