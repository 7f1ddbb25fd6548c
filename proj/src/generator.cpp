#include "sigexpand/generator.hpp"

#include <functional>

#include "sigexpand/error.hpp"

namespace sigx {

namespace {

void add_scaled(PolyWordCombination& out, const RatWordCombination& rc, const Poly& coeff) {
    for (const auto& [w, r] : rc.terms()) out.add(w, r * coeff);
}

RatWordCombination g1_impl(const Word& I, const Word& H, bool merge, const AlphabetConfig& cfg) {
    RatWordCombination out;
    if (I.empty()) return out;
    Letter i = I.last();
    Word ip = I.parent();
    auto addprod = [&](const Word& rhs) {
        WordCombination prod = merge ? bar_star(ip, rhs, cfg) : star(ip, rhs);
        for (const auto& [w, n] : prod.terms()) out.add(w, Rational(n));
    };
    if (i == 0) addprod(H);
    if (!H.empty() && i == H.last() && i > 0) addprod(H.parent());
    return out;
}

RatWordCombination g2_impl(const Word& I, const Word& J, const Word& H, bool merge,
                           const AlphabetConfig& cfg) {
    RatWordCombination out;
    if (I.empty() || J.empty()) return out;
    Letter i = I.last();
    if (i != J.last() || i <= 0) return out;
    WordCombination inner = merge ? bar_star(I.parent(), J.parent(), cfg) : star(I.parent(), J.parent());
    for (const auto& [w, n] : inner.terms()) {
        WordCombination prod = merge ? bar_star(w, H, cfg) : star(w, H);
        for (const auto& [w2, n2] : prod.terms()) out.add(w2, Rational(n * n2) / 2);
    }
    return out;
}

// Shared single-slot application; jump mode switches the product and k<0.
PolyWordCombination apply_slot(const CoeffMap& c, int k, const PolyWordCombination& d, bool merge,
                               const AlphabetConfig& cfg) {
    PolyWordCombination out;
    if (k == 0) {
        for (const auto& [h, dh] : d.terms()) add_scaled(out, g0(h), dh);
        if (merge && cfg.e > 0) {
            Poly lam;
            for (int j = 1; j <= cfg.e; ++j) lam += Poly::symbol(SymbolId::intensity(j));
            for (const auto& [h, dh] : d.terms()) out.add(h, Rational(-1) * (lam * dh));
        }
        return out;
    }
    if (k == 1) {
        for (const auto& [i, ci] : c) {
            if (i.empty()) continue;
            for (const auto& [h, dh] : d.terms())
                add_scaled(out, g1_impl(i, h, merge, cfg), ci * dh);
        }
        return out;
    }
    if (k == 2) {
        for (const auto& [i, ci] : c) {
            if (i.empty()) continue;
            for (const auto& [j, cj] : c) {
                if (j.empty()) continue;
                Poly cc = ci * cj;
                for (const auto& [h, dh] : d.terms())
                    add_scaled(out, g2_impl(i, j, h, merge, cfg), cc * dh);
            }
        }
        return out;
    }
    throw ConfigError("slot k = " + std::to_string(k) + " outside {0,1,2}");
}

CoeffMap shift_coeffs(const CoeffMap& c, int j, const Rational& xi, const AlphabetConfig& cfg) {
    CoeffMap out = c;
    for (const auto& [w, poly] : c) {
        if (w.empty() || w.last() >= 0) continue;
        LetterPair lp = letter_decode(w.last(), cfg);
        if (lp.driver != j) continue;
        Rational xp = 1;
        for (int q = 0; q < lp.power; ++q) xp *= xi;
        Word par = w.parent();
        Poly& slot = out[par];
        slot += xp * poly;
        if (slot.empty()) out.erase(par);
    }
    return out;
}

PolyWordCombination shift_state(const PolyWordCombination& d, int j, const Rational& xi,
                                const AlphabetConfig& cfg) {
    PolyWordCombination out = d;
    for (const auto& [w, poly] : d.terms()) {
        if (w.empty() || w.last() >= 0) continue;
        LetterPair lp = letter_decode(w.last(), cfg);
        if (lp.driver != j) continue;
        Rational xp = 1;
        for (int q = 0; q < lp.power; ++q) xp *= xi;
        out.add(w.parent(), xp * poly);
    }
    return out;
}

void check_order(const ProcessSpec& p, int L) {
    if (L < 0) throw ConfigError("expansion order must be >= 0");
    if (L > (p.depth + 1) / 2)
        throw ValidationError("expansion order " + std::to_string(L) + " exceeds what depth " +
                              std::to_string(p.depth) + " supports; declare a deeper representation");
}

// Both moment engines: enumerate slot tuples depth-first, sharing prefix
// states. Jump mode adds the negative slots with their atom fan-out.
Expansion moment_engine(const ProcessSpec& p, const FDerivatives& f, int L, bool jump, long budget) {
    p.validate();
    check_order(p, L);
    if (!jump && p.cfg.e > 0)
        throw ValidationError("spec has jump drivers; use the jump route");
    long branch = 3;
    if (jump) {
        for (int j = 1; j <= p.cfg.e; ++j) {
            const LevyAtomMeasure* nu = find_measure(p.levy, j);
            if (!nu) throw ConfigError("driver " + std::to_string(j) + " has no atom measure");
            branch += (long)nu->atoms.size();
        }
        Int total = 0, powl = 1;
        for (int l = 1; l <= L; ++l) {
            powl *= branch;
            total += powl;
        }
        if (total > budget)
            throw ResourceError("jump slot enumeration needs about " + total.str() +
                                " tuples, budget is " + std::to_string(budget));
    }

    CoeffMap c0 = extended_coeffs(p);
    bool sym = f.symbolic();
    Word empty;
    auto fat = [&](const CoeffMap& c, int k) -> Poly {
        auto it = c.find(empty);
        Poly arg = it == c.end() ? Poly() : it->second;
        if (sym) return f.deriv_poly(k, arg);
        return poly_from_complex(f.deriv_num(k, arg.eval(Assignment{})));
    };

    Expansion out;
    out.remainder_order = Rational(L);
    out.add_at(0, fat(c0, 0));

    for (int l = 1; l <= L; ++l) {
        Poly acc;
        std::function<void(int, const CoeffMap&, const PolyWordCombination&, int, const Poly&)> rec =
            [&](int lvl, const CoeffMap& c, const PolyWordCombination& d, int deriv, const Poly& weight) {
                if (lvl == l) {
                    Poly v = d.coeff(empty);
                    if (v.empty()) return;
                    acc += weight * fat(c, deriv) * v;
                    return;
                }
                int kmin = jump ? -p.cfg.e : 0;
                for (int k = kmin; k <= 2; ++k) {
                    if (k < 0) {
                        const LevyAtomMeasure* nu = find_measure(p.levy, -k);
                        for (size_t a = 0; a < nu->atoms.size(); ++a) {
                            CoeffMap c2 = shift_coeffs(c, -k, nu->atoms[a].xi, p.cfg);
                            PolyWordCombination d2 = shift_state(d, -k, nu->atoms[a].xi, p.cfg);
                            Poly w2 = weight * (nu->atoms[a].w * Poly::symbol(SymbolId::intensity(-k)));
                            rec(lvl + 1, c2, d2, deriv, w2);
                        }
                        continue;
                    }
                    PolyWordCombination d2 = apply_slot(c, k, d, jump, p.cfg);
                    if (d2.empty()) continue;
                    rec(lvl + 1, c, d2, deriv + k, weight);
                }
            };
        rec(0, c0, PolyWordCombination(empty), 0, Poly(1L));
        if (!acc.empty()) out.add_at(2 * l, (Rational(1) / Rational(factorial(l))) * acc);
    }
    return out;
}

}  // namespace

CoeffMap extended_coeffs(const ProcessSpec& p) {
    CoeffMap out;
    for (const auto& [w, v] : p.coeffs) {
        if (v.known_zero()) continue;
        out[p.extend(w)] = v.to_poly(w);
    }
    return out;
}

RatWordCombination g0(const Word& H) {
    RatWordCombination r;
    if (!H.empty() && H.last() == 0) r.add(H.parent(), Rational(1));
    return r;
}

RatWordCombination g1(const Word& I, const Word& H) { return g1_impl(I, H, false, {}); }

RatWordCombination g2(const Word& I, const Word& J, const Word& H) {
    return g2_impl(I, J, H, false, {});
}

RatWordCombination g1_merge(const Word& I, const Word& H, const AlphabetConfig& cfg) {
    return g1_impl(I, H, true, cfg);
}

RatWordCombination g2_merge(const Word& I, const Word& J, const Word& H, const AlphabetConfig& cfg) {
    return g2_impl(I, J, H, true, cfg);
}

PolyWordCombination calG(const CoeffMap& c, int k, const PolyWordCombination& d) {
    return apply_slot(c, k, d, false, {});
}

PolyWordCombination calG_compose(const CoeffMap& c, std::span<const int> ks,
                                 const PolyWordCombination& d) {
    PolyWordCombination cur = d;
    for (int k : ks) cur = calG(c, k, cur);
    return cur;
}

JumpStep jump_calG(const CoeffMap& c, int k, const Rational& xi, const PolyWordCombination& d,
                   const AlphabetConfig& cfg) {
    if (k < -cfg.e || k > 2)
        throw ConfigError("jump slot k = " + std::to_string(k) + " outside {-e,...,2}");
    if (k < 0) return {shift_coeffs(c, -k, xi, cfg), shift_state(d, -k, xi, cfg)};
    return {c, apply_slot(c, k, d, true, cfg)};
}

Expansion regular_moment_expansion(const ProcessSpec& p, const FDerivatives& f, int L) {
    return moment_engine(p, f, L, false, 0);
}

Expansion jump_regular_moment_expansion(const ProcessSpec& p, const FDerivatives& f, int L,
                                        long budget) {
    return moment_engine(p, f, L, true, budget);
}

Expansion kth_moment_expansion(const ProcessSpec& p, int k, int L) {
    if (k < 0) throw ConfigError("moment order must be >= 0");
    if (Rational(k) >= 2 * p.integrability)
        throw IntegrabilityError("moment of order " + std::to_string(k) +
                                 " needs k < 2N, declared N = " + to_string(p.integrability));
    PolynomialF f = PolynomialF::monomial(k);
    if (p.cfg.e > 0) return jump_regular_moment_expansion(p, f, L);
    return regular_moment_expansion(p, f, L);
}

}  // namespace sigx
