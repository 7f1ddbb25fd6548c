#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "sigexpand/moments.hpp"
#include "sigexpand/process.hpp"

namespace sigx {

// One collected power of sqrt(t) with its sqrt_t-free coefficient poly.
struct TermAtPower {
    int half_power = 0;
    Poly poly;
    bool operator==(const TermAtPower&) const = default;
};

// A truncated local expansion: prefactor * sum_k terms[k] * t^(k/2) plus,
// for jump characteristic functions, extra terms carrying jump atoms that
// do not reduce to plain polynomials in (iu, c_I).
struct Expansion {
    CfPrefactor prefactor;
    std::map<int, Poly> terms;           // key: exponent of sqrt(t); polys sqrt_t-free
    std::vector<TermAtPower> jump_extra;
    Rational remainder_order = Rational(0);  // o(t^remainder_order)
    std::vector<TermAtPower> discarded;      // truncation audit, same layout as terms
    std::vector<std::string> notes;

    // Fold a poly that still carries sqrt_t powers into terms.
    void add_poly(const Poly& p);
    void add_at(int half_power, const Poly& p);

    // Everything in terms re-assembled with its sqrt_t powers.
    Poly total_poly() const;
    bool plain() const { return jump_extra.empty(); }

    std::complex<double> eval(const ProcessSpec& spec, double u, double t) const;

    std::string str() const;
    std::string latex() const;
    json to_json() const;
    static Expansion from_json(const json& j);
};

// Compare the mathematical content (prefactor, terms, jump extras), ignoring
// audit trails and notes.
bool same_series(const Expansion& a, const Expansion& b);

// Numeric values for every symbol reachable from the spec at (u, t).
// Standardized mode scales jump atoms by 1/(c_1 sqrt(t)).
Assignment make_assignment(const ProcessSpec& spec, double u, double t, bool standardized);

std::complex<double> prefactor_value(const CfPrefactor& pf, const ProcessSpec& spec, double u, double t);

std::string prefactor_display(const CfPrefactor& pf);
std::string prefactor_latex(const CfPrefactor& pf);
std::string tpow_latex(int half_power);

}  // namespace sigx
