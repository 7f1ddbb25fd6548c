#include "sigexpand/charfun.hpp"

#include <algorithm>
#include <functional>

#include "sigexpand/error.hpp"
#include "sigexpand/moments.hpp"
#include "sigexpand/star.hpp"

namespace sigx {

namespace {

bool has_negative(const Word& w) {
    for (Letter l : w.letters())
        if (l < 0) return true;
    return false;
}

// Exact lower bound for the sqrt_t exponent a tuple word can reach in the
// standardized series: |I| + zeros(I) - 1. Nonnegative for every admissible
// word except (1), which never enters a tuple, so partial sums only grow.
int floor_exponent_std(const Word& w) {
    return (int)w.size() + letter_stats(w).zero - 1;
}

// Same bound for the plain expected-signature pairing: |I| + zeros(I).
int floor_exponent_raw(const Word& w) {
    return (int)w.size() + letter_stats(w).zero;
}

void stash(Expansion& out, std::map<int, Poly>& disc, const Poly& term, int keep_up_to) {
    for (const auto& [k, q] : term.split_sqrt_t()) {
        if (k <= keep_up_to)
            out.add_at(k, q);
        else
            disc[k] += q;
    }
}

void flush_discarded(Expansion& out, const std::map<int, Poly>& disc) {
    for (const auto& [k, q] : disc)
        if (!q.empty()) out.discarded.push_back({k, q});
}

}  // namespace

void validate_condition(const ProcessSpec& p, bool allow_jump) {
    p.validate();
    if (!p.coeff(Word{}).known_zero())
        throw ValidationError("characteristic function expansions need a zero start value");
    bool has_c1 = false;
    for (const auto& [w, v] : p.coeffs) {
        if (v.known_zero() || w.empty()) continue;
        if (w == Word({1})) {
            has_c1 = true;
            continue;
        }
        if (has_negative(w)) {
            if (!allow_jump)
                throw ValidationError("word " + w.str() + " carries jump letters; use the jump expansion");
            bool loading = w.size() == 1 && w[0] < 0;
            bool jumpvol = w.size() == 2 && w[0] < 0 && w[1] == 1;
            if (!loading && !jumpvol)
                throw ValidationError("jump letters may only appear as (-q) or (-q,1), got " + w.str());
            continue;
        }
        if (w.size() == 1)
            throw ValidationError("populated length-one word " + w.str() +
                                  " breaks the standing condition; only (1) may be populated");
        Letter last = w.last();
        Letter prev = w[w.size() - 2];
        if (last != 0 && last != 1)
            throw ValidationError("word " + w.str() + " must end in a time or first-Brownian letter");
        if (last == 1 && prev > 2)
            throw ValidationError("word " + w.str() + " has second-to-last letter > 2 before a Brownian letter");
        if (last == 0 && prev > 3)
            throw ValidationError("word " + w.str() + " has second-to-last letter > 3 before a time letter");
    }
    if (!has_c1)
        throw ValidationError("the first Brownian coefficient c_1 must be populated and nonzero");
}

Expansion standardized_cf_expansion(const ProcessSpec& p, int order) {
    if (order < 1) throw ConfigError("expansion order must be >= 1");
    validate_condition(p, false);
    const int m = order;

    struct TupleWord {
        Word w;
        Poly cbar;
        int floor_exp;
    };
    std::vector<TupleWord> words;
    Poly inv = Poly::symbol(SymbolId::inv_c1());
    for (const auto& [w, v] : p.coeffs) {
        if (w.empty() || v.known_zero() || w == Word({1})) continue;
        if ((int)w.size() > m + 1) continue;  // cannot reach the kept orders
        words.push_back({w, v.to_poly(w) * inv, floor_exponent_std(w)});
    }

    Expansion out;
    out.prefactor = {CfPrefactor::Kind::Gauss, true, {}};
    out.remainder_order = Rational(m, 2);
    out.add_at(0, Poly(1L));
    std::map<int, Poly> disc;

    // Ordered tuples, depth-first; every prefix is itself a tuple. The star
    // product is grown one word at a time.
    std::function<void(int, int, const Poly&, const WordCombination&)> rec =
        [&](int len, int bound, const Poly& prod, const WordCombination& sc) {
            for (const auto& tw : words) {
                int nb = bound + tw.floor_exp;
                if (nb > m) continue;
                int l = len + 1;
                WordCombination sc2 = star(sc, tw.w);
                Poly np = prod * tw.cbar;
                TransformResult tr = w_transform(sc2, true);
                if (!tr.poly.empty()) {
                    Poly term = np * tr.poly * Poly::symbol(SymbolId::iu(), l);
                    term = term.shifted_sqrt_t(-l);
                    term.scale(Rational(1, factorial(l)));
                    stash(out, disc, term, m);
                }
                if (l < m) rec(l, nb, np, sc2);
            }
        };
    rec(0, 0, Poly(1L), WordCombination(Word{}));
    flush_discarded(out, disc);
    return out;
}

Expansion regular_moment_via_startransform(const ProcessSpec& p, const FDerivatives& f, int order) {
    p.validate();
    if (order < 0) throw ConfigError("expansion order must be >= 0");
    if (!p.coeff(Word{}).known_zero())
        throw ValidationError("the star-transform moment route needs a zero start value");
    const int m = order;
    const bool jump = p.cfg.e > 0;

    struct TupleWord {
        Word w;
        Poly c;
        int floor_exp;
    };
    std::vector<TupleWord> words;
    for (const auto& [w, v] : p.coeffs) {
        if (w.empty() || v.known_zero()) continue;
        if ((int)w.size() > m) continue;
        words.push_back({p.extend(w), v.to_poly(w), floor_exponent_raw(w)});
    }

    bool sym = f.symbolic();
    auto fat = [&](int k) -> Poly {
        if (sym) return f.deriv_poly(k, Poly());
        return poly_from_complex(f.deriv_num(k, 0.0));
    };

    Expansion out;
    out.remainder_order = Rational(m, 2);
    out.add_at(0, fat(0));
    std::map<int, Poly> disc;

    std::function<void(int, int, const Poly&, const WordCombination&)> rec =
        [&](int len, int bound, const Poly& prod, const WordCombination& sc) {
            for (const auto& tw : words) {
                int nb = bound + tw.floor_exp;
                if (nb > m) continue;
                int l = len + 1;
                WordCombination sc2 =
                    jump ? bar_star(sc, tw.w, p.cfg) : star(sc, tw.w);
                Poly np = prod * tw.c;
                Poly es = expected_sig(sc2, p.cfg);
                if (!es.empty()) {
                    Poly term = np * es * fat(l);
                    term.scale(Rational(1, factorial(l)));
                    stash(out, disc, term, m);
                }
                if (l < m) rec(l, nb, np, sc2);
            }
        };
    rec(0, 0, Poly(1L), WordCombination(Word{}));
    flush_discarded(out, disc);
    return out;
}

Expansion jump_cf_expansion(const ProcessSpec& p) {
    validate_condition(p, true);
    if (p.cfg.e > 2)
        throw ConfigError("the order-2 jump expansion supports at most two jump drivers");
    if (p.integrability < 1)
        throw IntegrabilityError("the order-2 jump expansion needs declared integrability N >= 1");

    ProcessSpec sub = p;
    sub.coeffs.clear();
    std::vector<std::pair<Word, CoeffValue>> jumpvol;
    std::vector<int> loaded;
    for (const auto& [w, v] : p.coeffs) {
        if (v.known_zero()) continue;
        if (!has_negative(w)) {
            sub.coeffs[w] = v;
            continue;
        }
        if (w.size() == 1)
            loaded.push_back(-w[0]);
        else
            jumpvol.push_back({w, v});
    }
    std::sort(loaded.begin(), loaded.end());

    Expansion out = standardized_cf_expansion(sub, 2);

    // exp(A t) prefactor, expanded: the order-t slice lands on the series'
    // leading 1; the cross term with the sqrt(t) slice is order t^(3/2).
    Poly a_poly;
    for (int q : loaded) {
        const LevyAtomMeasure* nu = find_measure(p.levy, q);
        if (!nu)
            throw ConfigError("driver " + std::to_string(q) + " loads the process but has no atom measure");
        Poly mean;
        for (size_t a = 0; a < nu->atoms.size(); ++a)
            mean += nu->atoms[a].w * Poly::symbol(SymbolId::jump_atom(q, (int)a));
        mean -= Poly(1L);
        a_poly += Poly::symbol(SymbolId::intensity(q)) * mean;
    }
    std::map<int, Poly> extra;
    if (!a_poly.empty()) {
        extra[2] += a_poly;
        auto half = out.terms.find(1);
        if (half != out.terms.end()) out.discarded.push_back({3, a_poly * half->second});
        out.notes.push_back("jump prefactor expanded: exp(A t) = 1 + A t + o(t)");
        out.prefactor.jump_loaded = loaded;  // informational; the exponential itself is expanded
    }

    if (!jumpvol.empty()) {
        TransformLoading loading;
        loading.c1 = p.coeff_poly(Word({1}));
        for (int q : loaded) {
            if (q == 1) loading.cm1 = p.coeff_poly(Word({-1}));
            if (q == 2) loading.cm2 = p.coeff_poly(Word({-2}));
        }
        Poly inv = Poly::symbol(SymbolId::inv_c1());
        for (const auto& [w, v] : jumpvol) {
            Word ew = p.extend(w);
            TransformResult tr = jump_fourier_transform(ew, p.cfg, p.levy, loading, true);
            if (tr.poly.empty()) continue;
            Poly term = v.to_poly(w) * inv * tr.poly * Poly::symbol(SymbolId::iu());
            term = term.shifted_sqrt_t(-1);
            for (const auto& [k, q2] : term.split_sqrt_t()) {
                if (k > 2) {
                    out.discarded.push_back({k, q2});
                    continue;
                }
                if (q2.contains_kind(SymbolKind::JumpAtom))
                    extra[k] += q2;
                else
                    out.add_at(k, q2);
            }
            out.notes.push_back("jump-volatility word " + w.str() +
                                " first contributes at order t; kept alongside the base terms");
        }
    }
    for (const auto& [k, q] : extra)
        if (!q.empty()) out.jump_extra.push_back({k, q});
    return out;
}

}  // namespace sigx
