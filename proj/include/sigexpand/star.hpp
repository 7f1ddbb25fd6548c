#pragma once

#include <span>
#include <vector>

#include "sigexpand/combination.hpp"
#include "sigexpand/word.hpp"

namespace sigx {

// Ito star product of signature words. With i = last(I), j = last(J):
//
//   I * J = (I' * J)i + (I * J')j + [i == j > 0] (I' * J')0
//
// and the empty word is the unit. The bracket term is the quadratic
// covariation of the two outer integrators; time and independent Brownian
// components never contract. Only letters >= 0 are legal here; anything
// with jump letters must go through bar_star.
WordCombination star(const Word& I, const Word& J);

// Star product on the jump-extended alphabet. Same recursion plus a
// fourth term contracting two jump letters of a common driver:
//
//   [drv(i) == drv(j)] (I' *~ J')(i o j)
//
// where i o j adds the powers. Powers above cfg.m throw DepthError before
// any work happens; retry with a larger m re-encodes nothing because
// driver/power pairs, not raw letters, determine the result.
WordCombination bar_star(const Word& I, const Word& J, const AlphabetConfig& cfg);

enum class ProductMode { Continuous, Jump };

// Left fold of star (or bar_star) over several words, extended bilinearly
// to the intermediate combinations. Empty input gives the unit.
WordCombination star_multi(std::span<const Word> words, const AlphabetConfig& cfg,
                           ProductMode mode = ProductMode::Continuous);

// Bilinear extension helpers used by the fold and by operator calculus.
WordCombination star(const WordCombination& A, const Word& J);
WordCombination bar_star(const WordCombination& A, const Word& J, const AlphabetConfig& cfg);

}  // namespace sigx
