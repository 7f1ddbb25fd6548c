#include "sigexpand/star.hpp"

#include <unordered_map>
#include <utility>

namespace sigx {

namespace {

struct PairKey {
    Word a, b;
    int m;  // only bar_star results depend on it; 0 tags the continuous cache
    bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
        WordHash h;
        return h(k.a) * 1315423911u ^ h(k.b) + static_cast<size_t>(k.m);
    }
};

// Per-thread memo tables; the recursion is symmetric so keys store the
// smaller word first. Entries are immutable once inserted.
using Memo = std::unordered_map<PairKey, WordCombination, PairKeyHash>;

Memo& memo() {
    thread_local Memo tbl;
    return tbl;
}

WordCombination star_rec(const Word& I, const Word& J);

WordCombination star_core(const Word& I, const Word& J) {
    WordCombination out;
    const Letter i = I.last();
    const Letter j = J.last();
    {
        WordCombination left = star_rec(I.parent(), J);
        for (const auto& [w, c] : left.terms()) out.add(w.append(i), c);
    }
    {
        WordCombination right = star_rec(I, J.parent());
        for (const auto& [w, c] : right.terms()) out.add(w.append(j), c);
    }
    if (i == j && i > 0) {
        WordCombination bracket = star_rec(I.parent(), J.parent());
        for (const auto& [w, c] : bracket.terms()) out.add(w.append(0), c);
    }
    return out;
}

WordCombination star_rec(const Word& I, const Word& J) {
    if (I.empty()) return WordCombination(J);
    if (J.empty()) return WordCombination(I);
    PairKey key{std::min(I, J), std::max(I, J), 0};
    if (auto it = memo().find(key); it != memo().end()) return it->second;
    WordCombination out = star_core(key.a, key.b);
    return memo().emplace(key, std::move(out)).first->second;
}

WordCombination bar_star_rec(const Word& I, const Word& J, const AlphabetConfig& cfg) {
    if (I.empty()) return WordCombination(J);
    if (J.empty()) return WordCombination(I);
    PairKey key{std::min(I, J), std::max(I, J), cfg.m};
    if (auto it = memo().find(key); it != memo().end()) return it->second;

    const Word& A = key.a;
    const Word& B = key.b;
    WordCombination out;
    const Letter i = A.last();
    const Letter j = B.last();
    {
        WordCombination left = bar_star_rec(A.parent(), B, cfg);
        for (const auto& [w, c] : left.terms()) out.add(w.append(i), c);
    }
    {
        WordCombination right = bar_star_rec(A, B.parent(), cfg);
        for (const auto& [w, c] : right.terms()) out.add(w.append(j), c);
    }
    if (i == j && i > 0) {
        WordCombination bracket = bar_star_rec(A.parent(), B.parent(), cfg);
        for (const auto& [w, c] : bracket.terms()) out.add(w.append(0), c);
    }
    if (i < 0 && j < 0 && letter_decode(i, cfg).driver == letter_decode(j, cfg).driver) {
        const Letter merged = letter_circ(i, j, cfg);
        WordCombination bracket = bar_star_rec(A.parent(), B.parent(), cfg);
        for (const auto& [w, c] : bracket.terms()) out.add(w.append(merged), c);
    }
    return memo().emplace(key, std::move(out)).first->second;
}

void require_continuous(const Word& w) {
    for (Letter l : w.letters())
        if (l < 0)
            throw ConfigError("star is defined on the continuous alphabet only; word " + w.str() +
                              " has jump letters, use bar_star");
}

// Every contraction the recursion can ever perform pairs one letter of I
// with one letter of J, so checking all cross pairs up front covers every
// power sum that can arise. This keeps DepthError ahead of partial work.
void require_mergeable(const Word& I, const Word& J, const AlphabetConfig& cfg) {
    for (Letter a : I.letters()) {
        if (a >= 0) continue;
        const LetterPair pa = letter_decode(a, cfg);
        for (Letter b : J.letters()) {
            if (b >= 0) continue;
            const LetterPair pb = letter_decode(b, cfg);
            if (pa.driver == pb.driver && pa.power + pb.power > cfg.m)
                throw DepthError("jump power " + std::to_string(pa.power + pb.power) +
                                 " needed by " + I.str() + " and " + J.str() + " exceeds m=" +
                                 std::to_string(cfg.m) +
                                 "; rebuild the alphabet with a larger m and retry");
        }
    }
}

}  // namespace

WordCombination star(const Word& I, const Word& J) {
    require_continuous(I);
    require_continuous(J);
    return star_rec(I, J);
}

WordCombination bar_star(const Word& I, const Word& J, const AlphabetConfig& cfg) {
    validate_word(I, cfg);
    validate_word(J, cfg);
    require_mergeable(I, J, cfg);
    return bar_star_rec(I, J, cfg);
}

WordCombination star(const WordCombination& A, const Word& J) {
    require_continuous(J);
    WordCombination out;
    for (const auto& [w, c] : A.terms()) {
        WordCombination p = star(w, J);
        p.scale(c);
        out.add(p);
    }
    return out;
}

WordCombination bar_star(const WordCombination& A, const Word& J, const AlphabetConfig& cfg) {
    WordCombination out;
    for (const auto& [w, c] : A.terms()) {
        WordCombination p = bar_star(w, J, cfg);
        p.scale(c);
        out.add(p);
    }
    return out;
}

WordCombination star_multi(std::span<const Word> words, const AlphabetConfig& cfg,
                           ProductMode mode) {
    WordCombination acc(Word{});
    for (const Word& w : words) {
        acc = mode == ProductMode::Continuous ? star(acc, w) : bar_star(acc, w, cfg);
    }
    return acc;
}

}  // namespace sigx
