#pragma once

// Exact local invariants of moduli of semistable bundles on curves: tangent
// spaces, tangent-cone presentations, multiplicities, and the invariant-ring
// presentations behind them, all over exact rational arithmetic.

#include "modcone/combinatorics.hpp"
#include "modcone/cone.hpp"
#include "modcone/determinantal.hpp"
#include "modcone/invariant_rings.hpp"
#include "modcone/matrix.hpp"
#include "modcone/moduli_local.hpp"
#include "modcone/polynomial.hpp"
#include "modcone/rational.hpp"
#include "modcone/rng.hpp"
#include "modcone/special_models.hpp"
#include "modcone/verify.hpp"
#include "modcone/version.hpp"
