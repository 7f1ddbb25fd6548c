#include <doctest.h>

#include <random>
#include <vector>

#include <sigexpand/moments.hpp>
#include <sigexpand/star.hpp>
#include <sigexpand/word.hpp>

#include "oracle.hpp"

using namespace sigx;

namespace {

WordCombination unit_of(const Word& w) { return WordCombination(w); }

// bilinear right factor: A * (sum of B's terms)
WordCombination star_cc(const WordCombination& A, const WordCombination& B) {
    WordCombination out;
    for (const auto& [w, c] : B.terms()) {
        WordCombination piece = star(A, w);
        piece.scale(c);
        out.add(piece);
    }
    return out;
}

WordCombination bar_star_cc(const WordCombination& A, const WordCombination& B,
                            const AlphabetConfig& cfg) {
    WordCombination out;
    for (const auto& [w, c] : B.terms()) {
        WordCombination piece = bar_star(A, w, cfg);
        piece.scale(c);
        out.add(piece);
    }
    return out;
}

Word random_word(std::mt19937& rng, int max_len, int max_letter) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, max_letter);
    std::vector<Letter> ls;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) ls.push_back(letter(rng));
    return Word(std::move(ls));
}

// words over the extended jump alphabet, mild powers so products stay legal
Word random_jump_word(std::mt19937& rng, const AlphabetConfig& cfg, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, cfg.d + cfg.e);
    std::vector<Letter> ls;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        const int v = pick(rng);
        if (v <= cfg.d)
            ls.push_back(v);
        else
            ls.push_back(letter_encode(v - cfg.d, 1, cfg));
    }
    return Word(std::move(ls));
}

int zeros_of(const Word& w) {
    int z = 0;
    for (Letter l : w.letters()) z += (l == 0);
    return z;
}

}  // namespace

TEST_CASE("letter codec round trips and rejects out-of-range pairs") {
    AlphabetConfig cfg{1, 3, 2};
    CHECK(letter_encode(1, 1, cfg) == -1);
    CHECK(letter_encode(1, 2, cfg) == -2);
    CHECK(letter_encode(2, 1, cfg) == -3);
    CHECK(letter_encode(3, 1, cfg) == -5);
    const LetterPair p = letter_decode(-5, cfg);
    CHECK(p.driver == 3);
    CHECK(p.power == 1);
    for (int j = 1; j <= cfg.e; ++j)
        for (int q = 1; q <= cfg.m; ++q) {
            const Letter l = letter_encode(j, q, cfg);
            const LetterPair back = letter_decode(l, cfg);
            CHECK(back.driver == j);
            CHECK(back.power == q);
        }
    CHECK_THROWS_AS(letter_encode(4, 1, cfg), ConfigError);
    CHECK_THROWS_AS(letter_encode(1, 3, cfg), ConfigError);
    CHECK_THROWS_AS(letter_decode(0, cfg), ConfigError);
    CHECK_THROWS_AS(letter_decode(-7, cfg), ConfigError);
}

TEST_CASE("letter merge adds powers and overflows into DepthError") {
    AlphabetConfig cfg{1, 1, 3};
    CHECK(letter_circ(-1, -2, cfg) == -3);  // powers 1 + 2
    CHECK(letter_circ(-1, -1, cfg) == -2);
    CHECK_THROWS_AS(letter_circ(-2, -2, cfg), DepthError);
    AlphabetConfig two{1, 2, 2};
    // different drivers never merge
    CHECK_THROWS_AS(letter_circ(-1, -3, two), ConfigError);
}

TEST_CASE("star product golden values") {
    WordCombination r = star(Word{0}, Word{0});
    CHECK(r.size() == 1);
    CHECK(r.coeff(Word{0, 0}) == 2);

    r = star(Word{1}, Word{1});
    CHECK(r.size() == 2);
    CHECK(r.coeff(Word{1, 1}) == 2);
    CHECK(r.coeff(Word{0}) == 1);

    r = star(Word{1, 1}, Word{1});
    CHECK(r.size() == 3);
    CHECK(r.coeff(Word{1, 1, 1}) == 3);
    CHECK(r.coeff(Word{0, 1}) == 1);
    CHECK(r.coeff(Word{1, 0}) == 1);

    r = star(Word{1, 1}, Word{1, 1});
    CHECK(r.size() == 5);
    CHECK(r.coeff(Word{1, 1, 1, 1}) == 6);
    CHECK(r.coeff(Word{0, 1, 1}) == 2);
    CHECK(r.coeff(Word{1, 0, 1}) == 2);
    CHECK(r.coeff(Word{1, 1, 0}) == 2);
    CHECK(r.coeff(Word{0, 0}) == 1);

    // independent Brownian components never contract
    r = star(Word{1}, Word{2});
    CHECK(r.size() == 2);
    CHECK(r.coeff(Word{1, 2}) == 1);
    CHECK(r.coeff(Word{2, 1}) == 1);

    AlphabetConfig cfg{1, 0, 1};
    std::vector<Word> ws{Word{1}, Word{1}, Word{1}};
    r = star_multi(ws, cfg);
    CHECK(r.size() == 3);
    CHECK(r.coeff(Word{1, 1, 1}) == 6);
    CHECK(r.coeff(Word{0, 1}) == 3);
    CHECK(r.coeff(Word{1, 0}) == 3);
}

TEST_CASE("merge product golden values") {
    AlphabetConfig cfg{1, 1, 2};
    WordCombination r = bar_star(Word{-1}, Word{-1}, cfg);
    CHECK(r.size() == 2);
    CHECK(r.coeff(Word{-1, -1}) == 2);
    CHECK(r.coeff(Word{-2}) == 1);

    // jump against Brownian: plain interleave, no bracket
    r = bar_star(Word{-1}, Word{1}, cfg);
    CHECK(r.size() == 2);
    CHECK(r.coeff(Word{-1, 1}) == 1);
    CHECK(r.coeff(Word{1, -1}) == 1);

    AlphabetConfig two{0, 2, 2};
    // distinct drivers interleave without merging
    r = bar_star(Word{-1}, Word{-3}, two);
    CHECK(r.size() == 2);
    CHECK(r.coeff(Word{-1, -3}) == 1);
    CHECK(r.coeff(Word{-3, -1}) == 1);
}

TEST_CASE("merge product power overflow throws before any work") {
    AlphabetConfig cfg{1, 1, 2};
    CHECK_THROWS_AS(bar_star(Word{-2}, Word{-2}, cfg), DepthError);
    AlphabetConfig tight{1, 1, 1};
    CHECK_THROWS_AS(bar_star(Word{-1}, Word{-1}, tight), DepthError);
    // deep letters that would only meet after recursion still trip the
    // upfront check
    CHECK_THROWS_AS(bar_star(Word{-2, 0}, Word{0, -1}, cfg), DepthError);
}

TEST_CASE("empty word is the unit on both sides") {
    std::mt19937 rng(11);
    for (int i = 0; i < 250; ++i) {
        const Word w = random_word(rng, 5, 2);
        CHECK(star(w, Word{}) == unit_of(w));
        CHECK(star(Word{}, w) == unit_of(w));
    }
    AlphabetConfig cfg{2, 2, 3};
    std::mt19937 rng2(12);
    for (int i = 0; i < 250; ++i) {
        const Word w = random_jump_word(rng2, cfg, 5);
        CHECK(bar_star(w, Word{}, cfg) == unit_of(w));
        CHECK(bar_star(Word{}, w, cfg) == unit_of(w));
    }
}

TEST_CASE("star product is symmetric") {
    std::mt19937 rng(21);
    for (int i = 0; i < 250; ++i) {
        const Word a = random_word(rng, 4, 2);
        const Word b = random_word(rng, 4, 2);
        CHECK(star(a, b) == star(b, a));
    }
    AlphabetConfig cfg{1, 2, 4};
    std::mt19937 rng2(22);
    for (int i = 0; i < 250; ++i) {
        const Word a = random_jump_word(rng2, cfg, 4);
        const Word b = random_jump_word(rng2, cfg, 4);
        CHECK(bar_star(a, b, cfg) == bar_star(b, a, cfg));
    }
}

TEST_CASE("star product is associative") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        const Word a = random_word(rng, 3, 2);
        const Word b = random_word(rng, 3, 2);
        const Word c = random_word(rng, 3, 2);
        const WordCombination left = star_cc(star(a, b), unit_of(c));
        const WordCombination right = star_cc(unit_of(a), star(b, c));
        CHECK(left == right);
    }
    // jump alphabet with ample power headroom so nothing overflows
    AlphabetConfig cfg{1, 1, 16};
    std::mt19937 rng2(32);
    for (int i = 0; i < 200; ++i) {
        const Word a = random_jump_word(rng2, cfg, 3);
        const Word b = random_jump_word(rng2, cfg, 3);
        const Word c = random_jump_word(rng2, cfg, 3);
        const WordCombination left = bar_star_cc(bar_star(a, b, cfg), unit_of(c), cfg);
        const WordCombination right = bar_star_cc(unit_of(a), bar_star(b, c, cfg), cfg);
        CHECK(left == right);
    }
}

TEST_CASE("product words obey length and letter-count bounds") {
    std::mt19937 rng(41);
    for (int i = 0; i < 300; ++i) {
        const Word a = random_word(rng, 4, 2);
        const Word b = random_word(rng, 4, 2);
        const WordCombination r = star(a, b);
        const int lo = std::max(a.size(), b.size());
        const int hi = a.size() + b.size();
        for (const auto& [w, c] : r.terms()) {
            CHECK(c > 0);
            CHECK(w.size() >= lo);
            CHECK(w.size() <= hi);
            // each contraction trades two Brownian letters for one zero
            const int contractions = hi - w.size();
            CHECK(zeros_of(w) == zeros_of(a) + zeros_of(b) + contractions);
        }
    }
}

TEST_CASE("merge product equals star product away from jump letters") {
    AlphabetConfig cfg{2, 3, 2};
    std::mt19937 rng(51);
    for (int i = 0; i < 250; ++i) {
        const Word a = random_word(rng, 4, 2);
        const Word b = random_word(rng, 4, 2);
        CHECK(bar_star(a, b, cfg) == star(a, b));
    }
}

TEST_CASE("expected signature of a star product matches the pairing oracle") {
    AlphabetConfig cfg{2, 0, 1};
    // exhaustive over {0,1,2} words with |I| + |J| <= 4
    std::vector<Word> pool{Word{}};
    for (int len = 1; len <= 3; ++len) {
        std::vector<Word> next;
        for (const auto& w : pool)
            if (w.size() == len - 1)
                for (Letter l = 0; l <= 2; ++l) next.push_back(w.append(l));
        pool.insert(pool.end(), next.begin(), next.end());
    }
    int checked = 0;
    for (const auto& a : pool)
        for (const auto& b : pool) {
            if (a.size() + b.size() > 4) continue;
            CHECK(expected_sig(star(a, b), cfg) == test::expected_pair(a, b));
            ++checked;
        }
    CHECK(checked > 200);
}

TEST_CASE("pairing oracle spot values") {
    const SymbolId st = SymbolId::sqrt_t();
    CHECK(test::expected_pair(Word{1}, Word{1}) == Poly::symbol(st, 2));
    CHECK(test::expected_pair(Word{0}, Word{0}) == Poly::symbol(st, 4));
    CHECK(test::expected_pair(Word{1}, Word{2}) == Poly());
    CHECK(test::expected_pair(Word{1, 1}, Word{1, 1}) ==
          Rational(1, 2) * Poly::symbol(st, 4));
    CHECK(test::expected_pair(Word{0, 1}, Word{1}) ==
          Rational(1, 2) * Poly::symbol(st, 4));
    CHECK(test::pair_paths(Word{1, 1}, Word{1, 1}) == 1);
    CHECK(test::pair_paths(Word{0}, Word{0}) == 2);
}
