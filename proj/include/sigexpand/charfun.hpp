#pragma once

#include "sigexpand/expansion.hpp"
#include "sigexpand/fderiv.hpp"
#include "sigexpand/process.hpp"

namespace sigx {

// Standing shape conditions for the characteristic function expansions:
// zero start value, no bare drift word, every populated word ends in a
// time or first-Brownian letter with a bounded second-to-last letter, the
// first Brownian coefficient is present (it normalizes everything), and
// jump letters appear only as a loading word (-q) or a jump-volatility
// word (-q, 1) when they are allowed at all.
void validate_condition(const ProcessSpec& p, bool allow_jump);

// Standardized characteristic function of X_t / (c_1 sqrt(t)) through
// order t^(m/2): exp(-u^2/2) times a polynomial series in sqrt(t) whose
// coefficients collect (iu)-powers of normalized characteristics. Word
// tuples are prefiltered by an exact lower bound on the sqrt(t) exponent
// they can reach; computed terms past the order go to the audit list.
Expansion standardized_cf_expansion(const ProcessSpec& p, int order);

// E[f(X_t)] for zero start value through order t^(m/2), by pairing star
// products of populated word tuples with plain expected signatures.
Expansion regular_moment_via_startransform(const ProcessSpec& p, const FDerivatives& f, int order);

// Order-2 standardized characteristic function with compound Poisson
// jumps: the continuous series, plus the expanded jump prefactor at order
// t (kept as opaque atom exponentials in jump_extra), plus mechanically
// computed jump-volatility terms flagged in notes. Supports up to two
// jump drivers.
Expansion jump_cf_expansion(const ProcessSpec& p);

}  // namespace sigx
