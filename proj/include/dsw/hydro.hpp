#pragma once

#include "dsw/types.hpp"

// Classification of the step into the six cases by the ordering of the four
// Riemann invariants, and the resulting five-region layout in xi = x/t.

namespace dsw::hydro {

Invariants invariants(const StepData& s);

// Strictly ordered invariants pick one of the six cases; any tie (or a
// non-positive amplitude) is degenerate.
Case classify(const Invariants& v);

RegionLayout region_layout(const Invariants& v);

// Half-open dispatch: xi in [xi_k, xi_{k+1}) belongs to region k+1, exact
// boundary hits go right.
int region_index(const RegionLayout& lay, double xi);
RegionKind region_at(const RegionLayout& lay, double xi);

// the mirrored step x -> -x: (Ar, -mur, Al, -mul)
StepData mirrored(const StepData& s);

}  // namespace dsw::hydro
