#pragma once

#include <compare>
#include <string>

#include "sigexpand/word.hpp"

namespace sigx {

// The symbol universe the coefficient ring is built over.
//
//   Characteristic  c_I, one per word (the empty word is the start value x0)
//   InvC1           formal inverse of c_1; c_1 * inv_c1 cancels to 1
//   Intensity       lambda_j, jump arrival rate of driver j
//   JumpMoment      m_{j,k} = integral of xi^k against the size law of driver j
//   JumpAtom        exp(i u c_{-j} xi_a) for atom a of driver j, kept opaque so
//                   transforms stay polynomial; the eval layer knows the formula
//   Iu              the combination i*u, always appearing as a power of it
//   SqrtT           sqrt(t); time enters in half powers throughout
//   ImagUnit        bare i, used only when numeric callbacks inject complex values
enum class SymbolKind : int {
    Characteristic = 0,
    InvC1 = 1,
    Intensity = 2,
    JumpMoment = 3,
    JumpAtom = 4,
    ImagUnit = 5,
    Iu = 6,
    SqrtT = 7,
};

struct SymbolId {
    SymbolKind kind = SymbolKind::Iu;
    Word word;      // Characteristic only
    int j = 0;      // Intensity/JumpMoment/JumpAtom: driver index
    int k = 0;      // JumpMoment: power; JumpAtom: atom index

    auto operator<=>(const SymbolId&) const = default;

    static SymbolId characteristic(const Word& w) { return {SymbolKind::Characteristic, w, 0, 0}; }
    static SymbolId inv_c1() { return {SymbolKind::InvC1, Word{}, 0, 0}; }
    static SymbolId intensity(int j) { return {SymbolKind::Intensity, Word{}, j, 0}; }
    static SymbolId jump_moment(int j, int k) { return {SymbolKind::JumpMoment, Word{}, j, k}; }
    static SymbolId jump_atom(int j, int atom) { return {SymbolKind::JumpAtom, Word{}, j, atom}; }
    static SymbolId imag_unit() { return {SymbolKind::ImagUnit, Word{}, 0, 0}; }
    static SymbolId iu() { return {SymbolKind::Iu, Word{}, 0, 0}; }
    static SymbolId sqrt_t() { return {SymbolKind::SqrtT, Word{}, 0, 0}; }
};

// Stable serialization names: "c_11", "x0", "c(-2,1)", "lambda_1", "m_1_2",
// "E_1_0", "i", "iu", "sqrt_t", "inv_c1".
std::string symbol_name(const SymbolId& s);
SymbolId symbol_from_name(const std::string& name);

// LaTeX fragment for one symbol (no exponent).
std::string symbol_latex(const SymbolId& s);

}  // namespace sigx
