#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "sigexpand/error.hpp"

namespace sigx {

// Letter conventions for words indexing iterated Ito integrals:
//   0        the time component
//   1..d     Brownian components, letter 1 is the one the process loads
//   -1..-e*m powered jump components; negative letter -a stands for the
//            process summing (jump size)^power over the jumps of one
//            compound Poisson driver.
// The (driver, power) pair packs into -a column-major in the power:
//   a = (driver-1)*m + power,  driver in 1..e, power in 1..m.
// Hence driver j at power 1 sits at letter -((j-1)*m+1), and driver 1
// power 1 is always letter -1 no matter what m is.
using Letter = int;

struct AlphabetConfig {
    int d = 1;  // Brownian components
    int e = 0;  // jump drivers
    int m = 1;  // highest tracked jump power

    void validate() const {
        if (d < 0 || e < 0 || m < 1)
            throw ConfigError("alphabet requires d >= 0, e >= 0, m >= 1");
    }
    bool valid_letter(Letter l) const { return l <= d && l >= -e * m; }
    bool operator==(const AlphabetConfig&) const = default;
};

struct LetterPair {
    int driver = 0;
    int power = 0;
};

inline LetterPair letter_decode(Letter l, const AlphabetConfig& cfg) {
    if (l >= 0 || l < -cfg.e * cfg.m)
        throw ConfigError("letter " + std::to_string(l) + " is not a jump letter of this alphabet");
    const int a = -l - 1;  // 0-based
    return {a / cfg.m + 1, a % cfg.m + 1};
}

inline Letter letter_encode(int driver, int power, const AlphabetConfig& cfg) {
    if (driver < 1 || driver > cfg.e || power < 1 || power > cfg.m)
        throw ConfigError("jump pair (" + std::to_string(driver) + "," + std::to_string(power) +
                          ") outside alphabet with e=" + std::to_string(cfg.e) +
                          ", m=" + std::to_string(cfg.m));
    return -((driver - 1) * cfg.m + power);
}

// Merge of two jump letters of the same driver: powers add. Overflow past
// m is not representable, the caller has to rebuild with a larger m.
inline Letter letter_circ(Letter i, Letter j, const AlphabetConfig& cfg) {
    const LetterPair a = letter_decode(i, cfg);
    const LetterPair b = letter_decode(j, cfg);
    if (a.driver != b.driver)
        throw ConfigError("cannot merge jump letters of different drivers");
    if (a.power + b.power > cfg.m)
        throw DepthError("jump power " + std::to_string(a.power + b.power) + " exceeds m=" +
                         std::to_string(cfg.m) + "; rebuild the alphabet with a larger m and retry");
    return letter_encode(a.driver, a.power + b.power, cfg);
}

// Immutable letter sequence. Words are value types and are used as cache
// and map keys throughout, so ordering and hashing are part of the deal.
class Word {
  public:
    Word() = default;
    Word(std::initializer_list<Letter> ls) : ls_(ls) {}
    explicit Word(std::vector<Letter> ls) : ls_(std::move(ls)) {}

    int size() const { return static_cast<int>(ls_.size()); }
    bool empty() const { return ls_.empty(); }
    Letter operator[](int i) const { return ls_[static_cast<size_t>(i)]; }
    Letter last() const { return ls_.back(); }
    const std::vector<Letter>& letters() const { return ls_; }

    // All letters but the last; the backward step of every star recursion.
    Word parent() const {
        Word w;
        w.ls_.assign(ls_.begin(), ls_.end() - 1);
        return w;
    }
    Word append(Letter l) const {
        Word w = *this;
        w.ls_.push_back(l);
        return w;
    }
    friend Word concat(const Word& a, const Word& b) {
        Word w = a;
        w.ls_.insert(w.ls_.end(), b.ls_.begin(), b.ls_.end());
        return w;
    }

    auto operator<=>(const Word&) const = default;

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < ls_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(ls_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<Letter> ls_;
};

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (Letter l : w.letters())
            h = h * 0x100000001b3ull ^ static_cast<size_t>(static_cast<unsigned>(l) + 0x7fff);
        return h;
    }
};

struct LetterStats {
    int zero = 0;      // occurrences of the time letter
    int negative = 0;  // jump letters
    int positive = 0;  // Brownian letters
    std::vector<std::pair<Letter, int>> counts;  // per distinct letter, ascending

    int count(Letter l) const {
        for (const auto& [k, n] : counts)
            if (k == l) return n;
        return 0;
    }
};

inline LetterStats letter_stats(const Word& w) {
    LetterStats st;
    std::vector<Letter> sorted = w.letters();
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        st.counts.emplace_back(sorted[i], static_cast<int>(j - i));
        i = j;
    }
    for (Letter l : w.letters()) {
        if (l == 0)
            ++st.zero;
        else if (l < 0)
            ++st.negative;
        else
            ++st.positive;
    }
    return st;
}

inline void validate_word(const Word& w, const AlphabetConfig& cfg) {
    cfg.validate();
    for (Letter l : w.letters())
        if (!cfg.valid_letter(l))
            throw ConfigError("letter " + std::to_string(l) + " outside alphabet d=" +
                              std::to_string(cfg.d) + ", e=" + std::to_string(cfg.e) +
                              ", m=" + std::to_string(cfg.m) + " in word " + w.str());
}

}  // namespace sigx
