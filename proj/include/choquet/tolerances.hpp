#pragma once

namespace choquet::tol {

// Global geometric tolerance: sphere membership, atom coincidence, entrywise
// measure comparisons. CLI --tol overrides it process-wide before any compute.
double geo();
void set_geo(double eps);

// LP feasibility tolerance (fixed).
inline constexpr double lp = 1e-9;
// Objective agreement expected from the solver on small rational data.
inline constexpr double lp_obj = 1e-8;
// Tolerance for cross-validation comparisons (sampled function checks).
inline constexpr double check = 1e-7;
// Atom coordinates are canonicalized to this many decimal digits; atoms whose
// rounded coordinates coincide are merged.
inline constexpr int round_digits = 12;

// Canonical coordinate rounding, idempotent, maps -0.0 to +0.0.
double round_coord(double x);

}  // namespace choquet::tol
