#pragma once

#include "subadd/model.hpp"

namespace subadd::surface {

/// A1 minimal resolution (one -2 curve "F") blown up once at a general
/// point of F; the new curve is "E1".
ResolutionModel a1_blown_up_once();

/// Minimal resolution of C[X^5, XY^3, X^2Y, Y^5]: F1 (-2) meeting F2 (-3),
/// then E1 at F1 ∩ F2 and E2 at E1 ∩ F2. Final chain F1, E1, E2, F2 with
/// self-intersections -3, -2, -1, -5.
ResolutionModel quotient_five_two_blown_up_twice();

/// One exceptional curve "E2" with E2^2 = -k, blown up at a general point;
/// the new curve is "E1".
ResolutionModel single_curve_blown_up_once(int k);

/// A1 minimal resolution "E" with two marked curves "D1", "D2" (strict
/// transforms of the rulings x = z = 0 and y = z = 0), each meeting E once.
ResolutionModel a1_with_two_rulings();

}  // namespace subadd::surface
