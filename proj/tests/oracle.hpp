#pragma once

#include <sigexpand/poly.hpp>
#include <sigexpand/word.hpp>

namespace sigx::test {

// Independent closed form for E[<I,sig><J,sig>] over words in time and
// Brownian letters, bypassing the star product entirely. The product of
// two iterated integrals has expectation
//
//     N(I,J) * t^T / T!
//
// where a derivation consumes letters from the front: a time letter of
// either word advances alone, equal Brownian letters at both fronts pair
// up, and anything else stalls. N counts complete derivations, T is the
// number of steps any complete derivation takes (zeros of both words plus
// the matched pairs). Unpaired Brownian letters kill the expectation.
Poly expected_pair(const Word& I, const Word& J);

// Number of complete front-first derivations.
Int pair_paths(const Word& I, const Word& J);

}  // namespace sigx::test
