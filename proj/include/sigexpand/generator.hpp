#pragma once

#include <span>

#include "sigexpand/expansion.hpp"
#include "sigexpand/fderiv.hpp"
#include "sigexpand/process.hpp"
#include "sigexpand/star.hpp"

namespace sigx {

using PolyWordCombination = BasicWordCombination<Poly>;

// Populated words (extended alphabet) with their coefficient polys. Keyed
// symbols stay on the base word the user wrote.
using CoeffMap = std::map<Word, Poly>;

CoeffMap extended_coeffs(const ProcessSpec& p);

// Slot operators of the word-space generator. g0 is the time advance,
// g1 pairs one characteristic word against the state word (drift part plus
// the Brownian bracket of the outer letters), g2 is the second-derivative
// bracket of two characteristic words. Brackets contract equal positive
// letters only; jump interactions never enter here.
RatWordCombination g0(const Word& H);
RatWordCombination g1(const Word& I, const Word& H);
RatWordCombination g2(const Word& I, const Word& J, const Word& H);

// Same operators over the merge product, for states whose words carry jump
// letters. The contraction rule is unchanged.
RatWordCombination g1_merge(const Word& I, const Word& H, const AlphabetConfig& cfg);
RatWordCombination g2_merge(const Word& I, const Word& J, const Word& H, const AlphabetConfig& cfg);

// One generator slot applied to a state combination, k in {0,1,2}:
// sums the matching g-operator over the populated words. k counts the
// f-derivatives the slot consumes.
PolyWordCombination calG(const CoeffMap& c, int k, const PolyWordCombination& d);

// Composition: ks.front() is applied first, ks.back() outermost.
PolyWordCombination calG_compose(const CoeffMap& c, std::span<const int> ks,
                                 const PolyWordCombination& d);

// E[f(X_t)] for a continuous spec, through order L:
//   sum_l (t^l / l!) sum over slot tuples in {0,1,2}^l of
//       f^(sum k)(X_0) * <empty word, slot composition applied to unit>,
// remainder o(t^L). Branches whose state combination dies are pruned.
Expansion regular_moment_expansion(const ProcessSpec& p, const FDerivatives& f, int L);

// E[X_t^k]; dispatches to the jump engine when the alphabet has jump
// drivers. Needs k < 2N.
Expansion kth_moment_expansion(const ProcessSpec& p, int k, int L);

// Jump-aware slot application. Slots run over {-e,...,2}: a negative slot
// -j applies the atom shift of driver j at jump size xi to both the
// characteristics and the state (weight lambda_j * w_a is the caller's
// business), slot 0 adds the time advance minus the sum-of-intensities
// compensation, slots 1 and 2 are the merge-product brackets.
struct JumpStep {
    CoeffMap c;
    PolyWordCombination d;
};
JumpStep jump_calG(const CoeffMap& c, int k, const Rational& xi, const PolyWordCombination& d,
                   const AlphabetConfig& cfg);

// E[f(X_t)] for a spec with jump drivers: slot tuples over {-e,...,2}^l,
// atom choices expanded per negative slot, f evaluated at the shifted
// start value. Every driver needs an atom measure. The tuple count grows
// like (3 + total atoms)^L; past the budget this throws ResourceError
// with the estimate in the message.
Expansion jump_regular_moment_expansion(const ProcessSpec& p, const FDerivatives& f, int L,
                                        long budget = 2000000);

}  // namespace sigx
