#pragma once

#include <string>
#include <vector>

#include "sigexpand/rational.hpp"

namespace sigx {

// One atom of a discrete jump-size law: mass w at location xi. Everything
// is rational so that moments and transforms stay inside the exact ring.
struct LevyAtom {
    Rational xi;
    Rational w;
};

// Compound Poisson driver: arrival intensity lambda, jump sizes drawn from
// the normalized atom list. Finite atom support is the whole point; size
// integrals reduce to finite sums and nothing needs quadrature.
struct LevyAtomMeasure {
    int j = 0;  // driver index, 1-based
    Rational lambda = Rational(0);
    std::vector<LevyAtom> atoms;

    void validate() const {
        if (j < 1) throw ConfigError("jump driver index must be >= 1");
        if (lambda <= 0) throw ConfigError("jump intensity must be positive");
        if (atoms.empty()) throw ConfigError("atom measure without atoms");
        Rational total(0);
        for (const auto& a : atoms) {
            if (a.w <= 0) throw ConfigError("atom weights must be positive");
            total += a.w;
        }
        if (total != 1)
            throw ConfigError("atom weights of driver " + std::to_string(j) + " sum to " +
                              to_string(total) + ", expected 1");
    }

    // integral of xi^k against the size law (no lambda factor)
    Rational moment(int k) const {
        Rational s(0);
        for (const auto& a : atoms) {
            Rational p(1);
            for (int i = 0; i < k; ++i) p *= a.xi;
            s += a.w * p;
        }
        return s;
    }
};

inline const LevyAtomMeasure* find_measure(const std::vector<LevyAtomMeasure>& ms, int j) {
    for (const auto& m : ms)
        if (m.j == j) return &m;
    return nullptr;
}

}  // namespace sigx
