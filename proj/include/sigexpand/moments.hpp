#pragma once

#include <vector>

#include "sigexpand/combination.hpp"
#include "sigexpand/measure.hpp"
#include "sigexpand/poly.hpp"
#include "sigexpand/word.hpp"

namespace sigx {

// Plain expected value of one signature component at horizon t, as a
// polynomial in sqrt_t (and lambda_j, m_{j,k} when jump letters appear).
// Zero as soon as a Brownian letter shows up; otherwise
//   t^{|I|}/|I|! * prod over jump letters of lambda_drv * m_{drv,pow}.
Poly expected_sig(const Word& I, const AlphabetConfig& cfg);
Poly expected_sig(const WordCombination& K, const AlphabetConfig& cfg);

// What multiplies the polynomial part of a transform.
struct CfPrefactor {
    enum class Kind { None, Gauss, GaussJump };
    Kind kind = Kind::None;
    // Standardized transforms carry exp(-u^2/2) and atom exponents scaled
    // by 1/(c_1 sqrt(t)); raw ones carry exp(-u^2 c_1^2 t / 2) and raw xi.
    bool standardized = false;
    std::vector<int> jump_loaded;  // drivers whose compensated CF sits in the exponent

    bool operator==(const CfPrefactor&) const = default;
};

struct TransformResult {
    CfPrefactor prefactor;
    Poly poly;
};

// Fourier-weighted expectation E[ <I, sig> exp(i u W^1_t) ] (raw) or with
// u replaced by u/sqrt(t) (standardized). Nonzero only for words over
// {0,1}: value (iu)^{I(1)} t^{|I|}/|I|! times the Gaussian prefactor.
TransformResult w_transform(const Word& I, bool standardized);
TransformResult w_transform(const WordCombination& K, bool standardized);

// Exponent loadings of the characteristic function argument
//   u * (c1 W^1 + cm1 N^1 + cm2 N^2),
// each slot a polynomial (symbol or exact number); an empty slot means the
// component is not loaded. Standardization divides the argument by c1 sqrt(t).
struct TransformLoading {
    Poly c1;
    Poly cm1;
    Poly cm2;

    bool loaded(int driver) const {
        if (driver == 1) return !cm1.empty();
        if (driver == 2) return !cm2.empty();
        return false;
    }
};

// Jump analogue on the extended alphabet. Per-letter factors:
//   letter 1          iu*c1 (raw) or iu/sqrt(t) (standardized)
//   letter 0          1
//   letter >= 2       kills the whole expectation
//   jump (drv,pow)    lambda_drv * sum_a w_a xi_a^pow * exp-atom   if loaded
//                     lambda_drv * m_{drv,pow}                     otherwise
// times t^{|I|}/|I|!. Atom exponents stay opaque JumpAtom symbols so the
// result is still a polynomial; the eval layer knows their closed form.
TransformResult jump_fourier_transform(const Word& I, const AlphabetConfig& cfg,
                                       const std::vector<LevyAtomMeasure>& measures,
                                       const TransformLoading& loading, bool standardized);
TransformResult jump_fourier_transform(const WordCombination& K, const AlphabetConfig& cfg,
                                       const std::vector<LevyAtomMeasure>& measures,
                                       const TransformLoading& loading, bool standardized);

// Exact exponent of t in the standardized transform of a word: |I| - I(1)/2.
Rational transform_order(const Word& I);

enum class ErrorMode { Continuous, Jump };

// Exponent of t in the remainder bound after truncating at depth n, for
// the m-th moment of the error under declared integrability N. Continuous
// remainders decay like t^{m(n+1)/2}, jump remainders like t^{m(n+1)/(2N)}.
Rational error_order(int n, ErrorMode mode, int m, const Rational& N);

// Per-word m-th moment exponents behind those bounds.
Rational word_moment_exponent(const Word& I, int m);       // continuous: m(|I|+I(0))/2
Rational jump_word_moment_exponent(const Word& I, int m);  // (m/2)I(>0) + m I(0) + I(<0)

}  // namespace sigx
