#pragma once

#include <map>
#include <string>
#include <utility>

#include "sigexpand/rational.hpp"
#include "sigexpand/word.hpp"

namespace sigx {

// Finite formal sum of words. Kept normalized: no zero coefficients, so
// equality of the underlying maps is equality of the combinations.
// Coeff is Int for star products, Rational or Poly for operator calculus.
template <class Coeff>
class BasicWordCombination {
  public:
    using Map = std::map<Word, Coeff>;

    BasicWordCombination() = default;
    explicit BasicWordCombination(const Word& w) { terms_[w] = Coeff(1); }
    BasicWordCombination(const Word& w, Coeff c) { add(w, std::move(c)); }

    void add(const Word& w, const Coeff& c) {
        if (is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }
    void add(const BasicWordCombination& other) {
        for (const auto& [w, c] : other.terms_) add(w, c);
    }
    void scale(const Coeff& c) {
        if (is_zero(c)) {
            terms_.clear();
            return;
        }
        for (auto& [w, v] : terms_) v *= c;
    }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Coeff coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    bool operator==(const BasicWordCombination&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += coeff_str(c) + "*" + w.str();
        }
        return s;
    }

  private:
    static bool is_zero(const Int& c) { return c == 0; }
    static bool is_zero(const Rational& c) { return c == 0; }
    template <class C>
    static bool is_zero(const C& c) { return c.empty(); }

    static std::string coeff_str(const Int& c) { return c.str(); }
    static std::string coeff_str(const Rational& c) { return to_string(c); }
    template <class C>
    static std::string coeff_str(const C& c) { return c.str(); }

    Map terms_;
};

using WordCombination = BasicWordCombination<Int>;
using RatWordCombination = BasicWordCombination<Rational>;

inline RatWordCombination to_rational(const WordCombination& wc) {
    RatWordCombination r;
    for (const auto& [w, c] : wc.terms()) r.add(w, Rational(c));
    return r;
}

}  // namespace sigx
