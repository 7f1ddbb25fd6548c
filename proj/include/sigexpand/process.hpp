#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sigexpand/measure.hpp"
#include "sigexpand/poly.hpp"
#include "sigexpand/word.hpp"

namespace sigx {

// A characteristic is either the formal symbol c_I or an exact number.
struct CoeffValue {
    bool symbolic = true;
    Rational num = Rational(0);

    static CoeffValue sym() { return {true, Rational(0)}; }
    static CoeffValue val(Rational r) { return {false, std::move(r)}; }
    bool known_zero() const { return !symbolic && num == 0; }

    Poly to_poly(const Word& w) const {
        if (symbolic) return Poly::symbol(SymbolId::characteristic(w));
        return Poly::constant(num);
    }
};

// Truncated signature representation of one scalar Ito semimartingale:
// the word-indexed characteristics up to the declared depth, the alphabet
// they live on, and the driving jump measures.
//
// Spec words use the base alphabet: letter -j means driver j itself. The
// powered letters (-(j-1)*m-p for power p) exist only inside products; use
// extend() to map a spec word into that alphabet. Keeping specs in base
// letters means a retry with a larger m never re-encodes user input.
struct ProcessSpec {
    AlphabetConfig cfg;
    int depth = 1;                      // truncation depth n of the representation
    Rational integrability = Rational(1);  // declared N; echoed in reports, never verified
    std::map<Word, CoeffValue> coeffs;  // base-alphabet words; empty word is the start value
    std::vector<LevyAtomMeasure> levy;

    void validate() const;

    bool has(const Word& w) const { return coeffs.count(w) && !coeffs.at(w).known_zero(); }
    CoeffValue coeff(const Word& w) const {
        auto it = coeffs.find(w);
        return it == coeffs.end() ? CoeffValue::val(Rational(0)) : it->second;
    }
    Poly coeff_poly(const Word& w) const { return coeff(w).to_poly(w); }
    Poly x0_poly() const { return coeff_poly(Word{}); }

    bool base_letter_ok(Letter l) const { return l <= cfg.d && l >= -cfg.e; }
    Word extend(const Word& base) const;
    bool has_jump_content() const;

    // Numeric values for every symbol this spec can bring into play; u, t
    // and the opaque atom exponents are layered on top by the eval code.
    void fill_assignment(Assignment& a) const;
    double numeric_coeff(const Word& w) const;  // throws EvalError on symbolic entries

    json to_json() const;
    static ProcessSpec from_json(const json& j);
};

}  // namespace sigx
