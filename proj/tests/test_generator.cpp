#include <doctest.h>

#include <random>
#include <vector>

#include <sigexpand/charfun.hpp>
#include <sigexpand/generator.hpp>

using namespace sigx;

namespace {

Poly csym(const Word& w) { return Poly::symbol(SymbolId::characteristic(w)); }

RatWordCombination rc(const Word& w, Rational c = Rational(1)) {
    return RatWordCombination(w, std::move(c));
}

ProcessSpec numeric_spec(std::mt19937& rng, int d) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> letter(0, d);
    std::uniform_int_distribution<int> nwords(1, 4);
    ProcessSpec p;
    p.cfg = {d, 0, 1};
    p.depth = 3;
    p.integrability = Rational(8);
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    const int k = nwords(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<Letter> ls{letter(rng)};
        if (i % 2 == 0) ls.push_back(letter(rng));
        p.coeffs[Word{std::vector<Letter>(ls)}] = CoeffValue::val(Rational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("time-advance operator strips a trailing zero") {
    CHECK(g0(Word{1, 0}) == rc(Word{1}));
    CHECK(g0(Word{0}) == rc(Word{}));
    CHECK(g0(Word{0, 1}) == RatWordCombination());
    CHECK(g0(Word{}) == RatWordCombination());
}

TEST_CASE("first-order slot pairs characteristic against state") {
    // drift word acts by plain star with the state
    CHECK(g1(Word{0}, Word{}) == rc(Word{}));
    CHECK(g1(Word{0, 0}, Word{}) == rc(Word{0}));
    // Brownian word needs a matching state letter to contract
    CHECK(g1(Word{1}, Word{1}) == rc(Word{}));
    CHECK(g1(Word{1}, Word{0}) == RatWordCombination());
    CHECK(g1(Word{1}, Word{}) == RatWordCombination());
    CHECK(g1(Word{2}, Word{1}) == RatWordCombination());
    // drift and bracket pieces combine
    RatWordCombination r = g1(Word{0}, Word{1});
    CHECK(r == rc(Word{1}));
}

TEST_CASE("second-order slot brackets two characteristic words") {
    CHECK(g2(Word{1}, Word{1}, Word{}) == rc(Word{}, Rational(1, 2)));
    CHECK(g2(Word{1}, Word{2}, Word{}) == RatWordCombination());
    CHECK(g2(Word{0}, Word{1}, Word{}) == RatWordCombination());
    RatWordCombination r = g2(Word{1, 1}, Word{1, 1}, Word{});
    CHECK(r.size() == 2);
    CHECK(r.coeff(Word{1, 1}) == Rational(1));
    CHECK(r.coeff(Word{0}) == Rational(1, 2));
}

TEST_CASE("slot application sums over populated words") {
    CoeffMap c;
    c[Word{1}] = csym(Word{1});

    PolyWordCombination unit(Word{});
    PolyWordCombination r = calG(c, 2, unit);
    CHECK(r.size() == 1);
    CHECK(r.coeff(Word{}) == Rational(1, 2) * (csym(Word{1}) * csym(Word{1})));

    CHECK(calG(c, 0, unit) == PolyWordCombination());
    CHECK(calG(c, 1, unit) == PolyWordCombination());

    CoeffMap drift;
    drift[Word{0}] = csym(Word{0});
    drift[Word{0, 0}] = csym(Word{0, 0});
    r = calG(drift, 1, unit);
    CHECK(r.coeff(Word{}) == csym(Word{0}));
    CHECK(r.coeff(Word{0}) == csym(Word{0, 0}));
    // then the time slot collapses the leftover zero
    PolyWordCombination s = calG(drift, 0, r);
    CHECK(s.size() == 1);
    CHECK(s.coeff(Word{}) == csym(Word{0, 0}));
}

TEST_CASE("slot composition applies front first") {
    CoeffMap drift;
    drift[Word{0}] = csym(Word{0});
    drift[Word{0, 0}] = csym(Word{0, 0});
    PolyWordCombination unit(Word{});
    const std::vector<int> ks{1, 0};
    CHECK(calG_compose(drift, ks, unit) == calG(drift, 0, calG(drift, 1, unit)));
    // the reversed tuple dies: slot 0 kills the unit before slot 1 runs
    const std::vector<int> sk{0, 1};
    CHECK(calG_compose(drift, sk, unit) == PolyWordCombination());
}

TEST_CASE("slot operators are additive in the state") {
    std::mt19937 rng(301);
    std::uniform_int_distribution<int> letter(0, 2);
    std::uniform_int_distribution<int> len(0, 3);
    std::uniform_int_distribution<long> num(-3, 3);
    CoeffMap c;
    c[Word{0}] = csym(Word{0});
    c[Word{1}] = csym(Word{1});
    c[Word{1, 1}] = csym(Word{1, 1});
    for (int i = 0; i < 200; ++i) {
        auto rand_state = [&] {
            PolyWordCombination d;
            for (int w = 0; w < 2; ++w) {
                std::vector<Letter> ls;
                for (int k = len(rng); k > 0; --k) ls.push_back(letter(rng));
                d.add(Word{std::vector<Letter>(ls)}, Poly(num(rng)));
            }
            return d;
        };
        const PolyWordCombination d1 = rand_state();
        const PolyWordCombination d2 = rand_state();
        for (int k = 0; k <= 2; ++k) {
            PolyWordCombination sum = d1;
            sum.add(d2);
            PolyWordCombination expect = calG(c, k, d1);
            expect.add(calG(c, k, d2));
            CHECK(calG(c, k, sum) == expect);
        }
    }
}

TEST_CASE("moment expansion golden values") {
    SUBCASE("drift only, identity observable") {
        ProcessSpec p;
        p.cfg = {1, 0, 1};
        p.depth = 1;
        p.coeffs[Word{}] = CoeffValue::sym();
        p.coeffs[Word{0}] = CoeffValue::sym();
        const Expansion ex = regular_moment_expansion(p, PolynomialF::monomial(1), 1);
        CHECK(ex.terms.size() == 2);
        CHECK(ex.terms.at(0) == csym(Word{}));
        CHECK(ex.terms.at(2) == csym(Word{0}));
        CHECK(ex.remainder_order == Rational(1));
        CHECK(ex.jump_extra.empty());
    }
    SUBCASE("squared Brownian exposure") {
        ProcessSpec p;
        p.cfg = {1, 0, 1};
        p.depth = 1;
        p.coeffs[Word{}] = CoeffValue::val(Rational(0));
        p.coeffs[Word{1}] = CoeffValue::sym();
        const Expansion ex = regular_moment_expansion(p, PolynomialF::monomial(2), 1);
        CHECK(ex.terms.count(0) == 0);
        CHECK(ex.terms.at(2) == csym(Word{1}) * csym(Word{1}));
    }
    SUBCASE("first moment picks up the drift of the drift") {
        ProcessSpec p;
        p.cfg = {1, 0, 1};
        p.depth = 3;
        p.integrability = Rational(4);
        p.coeffs[Word{}] = CoeffValue::sym();
        p.coeffs[Word{0}] = CoeffValue::sym();
        p.coeffs[Word{0, 0}] = CoeffValue::sym();
        const Expansion ex = kth_moment_expansion(p, 1, 2);
        CHECK(ex.terms.at(0) == csym(Word{}));
        CHECK(ex.terms.at(2) == csym(Word{0}));
        CHECK(ex.terms.at(4) == Rational(1, 2) * csym(Word{0, 0}));
    }
    SUBCASE("second moment of a Brownian exposure") {
        ProcessSpec p;
        p.cfg = {1, 0, 1};
        p.depth = 1;
        p.integrability = Rational(2);
        p.coeffs[Word{}] = CoeffValue::val(Rational(0));
        p.coeffs[Word{1}] = CoeffValue::sym();
        const Expansion ex = kth_moment_expansion(p, 2, 1);
        CHECK(ex.terms.at(2) == csym(Word{1}) * csym(Word{1}));
        CHECK(ex.terms.count(0) == 0);
    }
}

TEST_CASE("moment order past the declared integrability throws") {
    ProcessSpec p;
    p.cfg = {1, 0, 1};
    p.depth = 1;
    p.integrability = Rational(1);
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    p.coeffs[Word{1}] = CoeffValue::sym();
    CHECK_THROWS_AS(kth_moment_expansion(p, 2, 1), IntegrabilityError);
    CHECK_THROWS_AS(kth_moment_expansion(p, 3, 1), IntegrabilityError);
    CHECK_NOTHROW(kth_moment_expansion(p, 1, 1));
}

TEST_CASE("expansion order is capped by the representation depth") {
    ProcessSpec p;
    p.cfg = {1, 0, 1};
    p.depth = 1;
    p.coeffs[Word{}] = CoeffValue::sym();
    p.coeffs[Word{0}] = CoeffValue::sym();
    CHECK_THROWS_AS(regular_moment_expansion(p, PolynomialF::monomial(1), 2), ValidationError);
    CHECK_THROWS_AS(regular_moment_expansion(p, PolynomialF::monomial(1), -1), ConfigError);
}

TEST_CASE("jump slot calculus golden values") {
    AlphabetConfig cfg{1, 1, 2};
    CoeffMap c;
    c[Word{-1}] = csym(Word{-1});

    SUBCASE("time slot carries the intensity compensation") {
        const JumpStep step = jump_calG(c, 0, Rational(0), PolyWordCombination(Word{}), cfg);
        CHECK(step.c == c);
        CHECK(step.d.size() == 1);
        Poly want;
        want -= Poly::symbol(SymbolId::intensity(1));
        CHECK(step.d.coeff(Word{}) == want);
    }
    SUBCASE("jump slot shifts both characteristics and state") {
        CoeffMap c2 = c;
        c2[Word{}] = csym(Word{});
        const JumpStep step =
            jump_calG(c2, -1, Rational(1, 2), PolyWordCombination(Word{-1}), cfg);
        // start value absorbs xi * c_{-1}
        CHECK(step.c.at(Word{}) == csym(Word{}) + Rational(1, 2) * csym(Word{-1}));
        CHECK(step.c.at(Word{-1}) == csym(Word{-1}));
        // state word (-1) drops to the empty word at weight xi
        CHECK(step.d.coeff(Word{}) == Poly(Rational(1, 2)));
        CHECK(step.d.coeff(Word{-1}) == Poly(1));
    }
}

TEST_CASE("jump engine reproduces compensated first and second moments") {
    ProcessSpec p;
    p.cfg = {1, 1, 2};
    p.depth = 1;
    p.integrability = Rational(4);
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    p.coeffs[Word{-1}] = CoeffValue::sym();
    p.levy = {{1, Rational(2), {{Rational(1, 2), Rational(1)}}}};

    // E[c N_t] = lambda xi c t with the single atom at 1/2
    Expansion ex = jump_regular_moment_expansion(p, PolynomialF::monomial(1), 1);
    Poly want = Rational(1, 2) * (Poly::symbol(SymbolId::intensity(1)) * csym(Word{-1}));
    CHECK(ex.terms.at(2) == want);
    CHECK(ex.terms.count(0) == 0);

    // E[(c N_t)^2] = lambda xi^2 c^2 t + o(t)
    ex = jump_regular_moment_expansion(p, PolynomialF::monomial(2), 1);
    Poly want2 = Rational(1, 4) *
                 (Poly::symbol(SymbolId::intensity(1)) * csym(Word{-1}) * csym(Word{-1}));
    CHECK(ex.terms.at(2) == want2);
}

TEST_CASE("jump engine with no jump drivers matches the continuous engine") {
    std::mt19937 rng(302);
    for (int i = 0; i < 40; ++i) {
        ProcessSpec p = numeric_spec(rng, 2);
        const PolynomialF f({Rational(1), Rational(-2), Rational(1, 3), Rational(2, 5)});
        const Expansion a = regular_moment_expansion(p, f, 1);
        const Expansion b = jump_regular_moment_expansion(p, f, 1);
        CHECK(same_series(a, b));
        CHECK(a.remainder_order == b.remainder_order);
    }
}

TEST_CASE("generator route agrees with the star-transform route at first order") {
    std::mt19937 rng(303);
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    for (int i = 0; i < 60; ++i) {
        ProcessSpec p = numeric_spec(rng, 2);
        const PolynomialF f(
            {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
             Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
        const Expansion gen = regular_moment_expansion(p, f, 1);
        const Expansion star = regular_moment_via_startransform(p, f, 2);
        CHECK(same_series(gen, star));
        CHECK(gen.remainder_order == star.remainder_order);
    }
}

TEST_CASE("jump tuple enumeration respects its budget") {
    ProcessSpec p;
    p.cfg = {1, 2, 4};
    p.depth = 4;
    p.integrability = Rational(8);
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    p.coeffs[Word{-1}] = CoeffValue::sym();
    p.coeffs[Word{-2}] = CoeffValue::sym();
    p.levy = {
        {1, Rational(1), {{Rational(1), Rational(1, 2)}, {Rational(2), Rational(1, 2)}}},
        {2, Rational(1), {{Rational(1), Rational(1, 3)}, {Rational(2), Rational(1, 3)},
                          {Rational(3), Rational(1, 3)}}},
    };
    CHECK_THROWS_AS(jump_regular_moment_expansion(p, PolynomialF::monomial(1), 2, 10),
                    ResourceError);
    try {
        jump_regular_moment_expansion(p, PolynomialF::monomial(1), 2, 10);
    } catch (const ResourceError& e) {
        // the message carries the estimate so callers can rescale
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
    CHECK_NOTHROW(jump_regular_moment_expansion(p, PolynomialF::monomial(1), 2, 1000));
}

TEST_CASE("every jump driver needs an atom measure") {
    ProcessSpec p;
    p.cfg = {1, 2, 2};
    p.depth = 1;
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    p.coeffs[Word{-1}] = CoeffValue::sym();
    p.levy = {{1, Rational(1), {{Rational(1), Rational(1)}}}};  // driver 2 missing
    CHECK_THROWS_AS(jump_regular_moment_expansion(p, PolynomialF::monomial(1), 1), ConfigError);
}
