#pragma once

// Ready-made restriction/Gysin data for the standard model embeddings: a
// point in a space with a fundamental class, a linear P^k inside P^n, and a
// factor A x {pt} inside a product A x B.

#include "gysin/blowup.hpp"

namespace gysin {

// Center = point. Restriction kills positive degrees; the Gysin map sends 1
// to the fundamental class (zero in the closed flavor when the top component
// is missing, as for affine space). r defaults to the complex dimension read
// off the fundamental degree.
BlowupDatum point_center(const SpaceModel& ambient);

// Center = P^k inside P^n. The normal Chern classes default to the geometric
// ones, c(N) = (1+H)^{n-k}; pass `chern` to override (any data passing the
// datum validation gives a consistent model).
BlowupDatum linear_center(int n, int k, GradingMode mode);
BlowupDatum linear_center(int n, int k, GradingMode mode, const std::vector<Element>& chern);

// Center = A x {pt_B} inside A x B, via B's fundamental class. The product
// model must be exactly product(a, b).
BlowupDatum factor_center(const SpaceModel& a, const SpaceModel& b);

// Complex dimension of a model, read off the fundamental degree.
int complex_dimension(const SpaceModel& m);

}  // namespace gysin
