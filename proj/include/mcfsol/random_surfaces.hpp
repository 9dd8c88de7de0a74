#pragma once

// Seeded generators of random admissible surfaces for property sweeps and the
// oracle cross-checks. All derivative closures are exact (trig polynomials).

#include <random>

#include "mcfsol/geom_kernel.hpp"
#include "mcfsol/soliton.hpp"

namespace mcfsol {

using Rng = std::mt19937_64;

// Noncylindrical ruled surface on a striction line: w is a unit-speed circle
// on S^2 (|w| = |w'| = 1) and beta' = F(s) w + lambda(s) w^w' with smooth
// nonvanishing lambda, so lambda' != 0 generically.
RuledSurface random_noncylindrical(Rng& rng);

// Cylindrical surface: trig-polynomial space directrix, constant unit w,
// beta' kept away from parallel to w on |s| <= 3.
RuledSurface random_cylindrical(Rng& rng);

// Cone over a random spherical circle, random apex.
RuledSurface random_conical(Rng& rng);

// phi bounded away from 0, generating curve regular on |s| <= 3.
RevolutionSurface random_revolution(Rng& rng);

MotionGenerators random_generators(Rng& rng, Axis axis);

}  // namespace mcfsol
