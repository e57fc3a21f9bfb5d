#pragma once

#include <string>
#include <vector>

#include "chambers/orders.hpp"

namespace chambers {

struct CheckReport {
  std::string name;
  std::string grid;
  bool pass = false;
  std::string witness;  // empty iff pass
  std::string notes;    // informational only
  double millis = 0.0;
};

std::string check_json(const CheckReport& r);

// Points inside one G.I.T. chamber, all of them also off every c-wall.
struct ChamberSample {
  std::vector<ParamPoint> points;
};

// Deterministic exact sampling: one group per G.I.T. chamber of the (ell,n)
// arrangement, with `points_per_chamber` c-regular interior points each.
// Supported for ell <= 3.
std::vector<ChamberSample> chamber_representatives(Int ell, Int n, int points_per_chamber);

// Rejects grids past desk scale (|P(ell,n)| > 10^4).
void ensure_desk_scale(Int ell, Int n);
Int count_multipartitions(Int ell, Int n);

CheckReport check_refinement_thm44(Int ell, Int n);
CheckReport check_f_eq_c(const ParamPoint& p, Int n);
CheckReport check_a_eq_A(const ParamPoint& p, Int n);
CheckReport check_order_refinements(const ParamPoint& p, Int n, bool inject_mutant = false);
CheckReport check_asymptotic(Int ell, Int n);
CheckReport check_bar_duality(const ParamPoint& p, Int n);
CheckReport check_equivariance(const ParamPoint& p, Int n);

// The two candidate readings of a transposed multipartition.
enum class TransposeReading { Componentwise, Bar };
MultiPartition apply_reading(TransposeReading r, const MultiPartition& m);
CheckReport check_broue_michel(Int n, TransposeReading reading);
// Evaluates both readings at ell = 2, n in {2,3}; returns the one that holds
// identically (exactly one must).
TransposeReading resolve_broue_michel_reading();

CheckReport check_wall_monotonicity(const ParamPoint& p, Int n);
CheckReport check_wall_alcove_modes(const ParamPoint& p, Int n);

// The fixed default grid the CLI runs.
std::vector<CheckReport> run_default_checks();

}  // namespace chambers
