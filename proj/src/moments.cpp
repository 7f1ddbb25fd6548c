#include "sigexpand/moments.hpp"

#include <algorithm>

namespace sigx {

namespace {

Poly t_power_over_factorial(int k) {
    Poly p = Poly::symbol(SymbolId::sqrt_t(), 2 * k);
    p.scale(Rational(1, factorial(k)));
    return p;
}

int count_letter(const Word& I, Letter l) {
    int n = 0;
    for (Letter x : I.letters()) n += x == l;
    return n;
}

}  // namespace

Poly expected_sig(const Word& I, const AlphabetConfig& cfg) {
    validate_word(I, cfg);
    Poly p = t_power_over_factorial(I.size());
    for (Letter l : I.letters()) {
        if (l > 0) return Poly();
        if (l < 0) {
            const LetterPair lp = letter_decode(l, cfg);
            p *= Poly::symbol(SymbolId::intensity(lp.driver));
            p *= Poly::symbol(SymbolId::jump_moment(lp.driver, lp.power));
        }
    }
    return p;
}

Poly expected_sig(const WordCombination& K, const AlphabetConfig& cfg) {
    Poly out;
    for (const auto& [w, c] : K.terms()) {
        Poly p = expected_sig(w, cfg);
        p.scale(Rational(c));
        out += p;
    }
    return out;
}

TransformResult w_transform(const Word& I, bool standardized) {
    TransformResult r;
    r.prefactor = {CfPrefactor::Kind::Gauss, standardized, {}};
    for (Letter l : I.letters())
        if (l != 0 && l != 1) return r;  // poly stays zero
    const int ones = count_letter(I, 1);
    Poly p = t_power_over_factorial(I.size());
    if (ones > 0) p *= Poly::symbol(SymbolId::iu(), ones);
    if (standardized && ones > 0) p = p.shifted_sqrt_t(-ones);
    r.poly = std::move(p);
    return r;
}

TransformResult w_transform(const WordCombination& K, bool standardized) {
    TransformResult r;
    r.prefactor = {CfPrefactor::Kind::Gauss, standardized, {}};
    for (const auto& [w, c] : K.terms()) {
        TransformResult one = w_transform(w, standardized);
        one.poly.scale(Rational(c));
        r.poly += one.poly;
    }
    return r;
}

TransformResult jump_fourier_transform(const Word& I, const AlphabetConfig& cfg,
                                       const std::vector<LevyAtomMeasure>& measures,
                                       const TransformLoading& loading, bool standardized) {
    validate_word(I, cfg);
    TransformResult r;
    std::vector<int> loaded;
    for (int drv : {1, 2}) {
        if (!loading.loaded(drv)) continue;
        if (find_measure(measures, drv) == nullptr)
            throw ConfigError("driver " + std::to_string(drv) +
                              " loads the characteristic function but has no atom measure");
        loaded.push_back(drv);
    }
    r.prefactor = {loaded.empty() ? CfPrefactor::Kind::Gauss : CfPrefactor::Kind::GaussJump,
                   standardized, loaded};

    for (Letter l : I.letters())
        if (l > 1) return r;  // independent Brownian factor integrates to zero

    Poly p = t_power_over_factorial(I.size());
    for (Letter l : I.letters()) {
        if (l == 0) continue;
        if (l == 1) {
            if (standardized) {
                p *= Poly::symbol(SymbolId::iu()).shifted_sqrt_t(-1);
            } else {
                p *= Poly::symbol(SymbolId::iu()) * loading.c1;
            }
            continue;
        }
        const LetterPair lp = letter_decode(l, cfg);
        Poly factor;
        if (loading.loaded(lp.driver)) {
            const LevyAtomMeasure* meas = find_measure(measures, lp.driver);
            // lambda * sum_a w_a xi_a^pow * exp(i u c_{-drv} xi_a ...)
            for (size_t a = 0; a < meas->atoms.size(); ++a) {
                Rational xw = meas->atoms[a].w;
                for (int q = 0; q < lp.power; ++q) xw *= meas->atoms[a].xi;
                Poly atom = Poly::symbol(SymbolId::jump_atom(lp.driver, static_cast<int>(a)));
                atom.scale(xw);
                factor += atom;
            }
            factor *= Poly::symbol(SymbolId::intensity(lp.driver));
        } else {
            factor = Poly::symbol(SymbolId::intensity(lp.driver)) *
                     Poly::symbol(SymbolId::jump_moment(lp.driver, lp.power));
        }
        p *= factor;
    }
    r.poly = std::move(p);
    return r;
}

TransformResult jump_fourier_transform(const WordCombination& K, const AlphabetConfig& cfg,
                                       const std::vector<LevyAtomMeasure>& measures,
                                       const TransformLoading& loading, bool standardized) {
    TransformResult r;
    bool first = true;
    for (const auto& [w, c] : K.terms()) {
        TransformResult one = jump_fourier_transform(w, cfg, measures, loading, standardized);
        if (first) {
            r.prefactor = one.prefactor;
            first = false;
        }
        one.poly.scale(Rational(c));
        r.poly += one.poly;
    }
    if (first)  // empty combination: still report the prefactor shape
        r = jump_fourier_transform(Word{}, cfg, measures, loading, standardized);
    return r;
}

Rational transform_order(const Word& I) {
    return Rational(I.size()) - Rational(count_letter(I, 1), 2);
}

Rational error_order(int n, ErrorMode mode, int m, const Rational& N) {
    if (n < 0 || m < 1) throw ConfigError("error_order needs n >= 0 and m >= 1");
    if (Rational(m) > 2 * N)
        throw IntegrabilityError("moment order m=" + std::to_string(m) +
                                 " exceeds declared integrability (need m <= 2N, N=" +
                                 to_string(N) + ")");
    if (mode == ErrorMode::Continuous) return Rational(m * (n + 1), 2);
    return Rational(m * (n + 1)) / (2 * N);
}

Rational word_moment_exponent(const Word& I, int m) {
    for (Letter l : I.letters())
        if (l < 0)
            throw ConfigError("continuous moment exponent asked for jump word " + I.str());
    const LetterStats st = letter_stats(I);
    return Rational(m * (I.size() + st.zero), 2);
}

Rational jump_word_moment_exponent(const Word& I, int m) {
    const LetterStats st = letter_stats(I);
    return Rational(m * st.positive, 2) + Rational(m * st.zero) + Rational(st.negative);
}

}  // namespace sigx
