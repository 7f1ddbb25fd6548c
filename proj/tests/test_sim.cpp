#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdlib>

#include <sigexpand/rng.hpp>
#include <sigexpand/sim.hpp>

using namespace sigx;

namespace {

ProcessSpec brownian_spec() {
    ProcessSpec p;
    p.cfg = {1, 0, 1};
    p.depth = 3;
    p.integrability = Rational(8);
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    p.coeffs[Word{1}] = CoeffValue::val(Rational(1, 5));
    p.coeffs[Word{1, 1}] = CoeffValue::val(Rational(-1, 10));
    return p;
}

ProcessSpec jump_spec() {
    ProcessSpec p;
    p.cfg = {1, 1, 2};
    p.depth = 2;
    p.integrability = Rational(4);
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    p.coeffs[Word{1}] = CoeffValue::val(Rational(1, 5));
    p.coeffs[Word{-1}] = CoeffValue::val(Rational(1, 10));
    p.levy = {{1, Rational(2), {{Rational(1, 2), Rational(1)}}}};
    return p;
}

}  // namespace

TEST_CASE("philox 4x32-10 matches the reference known-answer vectors") {
    // counter {0,0,0,0} key {0,0}; all-ones; and the pi-digit vector
    const std::array<uint32_t, 4> zero = philox4x32({0, 0, 0, 0}, 0, 0);
    CHECK(zero == std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    const uint32_t ff = 0xffffffffu;
    const std::array<uint32_t, 4> ones = philox4x32({ff, ff, ff, ff}, ff, ff);
    CHECK(ones == std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    const std::array<uint32_t, 4> pi =
        philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, 0xa4093822u, 0x299f31d0u);
    CHECK(pi == std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("simulation is bit-identical for a fixed seed") {
    const ProcessSpec p = brownian_spec();
    const SimConfig cfg{2000, 50, 0.5, 42};
    const std::vector<Word> req{Word{1, 1}, Word{0}};
    const SignatureSamples a = simulate_signature_samples(p, req, cfg);
    const SignatureSamples b = simulate_signature_samples(p, req, cfg);
    REQUIRE(a.words() == b.words());
    for (const auto& w : a.words()) CHECK(a.column(w) == b.column(w));
    // a different seed moves every Brownian column
    SimConfig other = cfg;
    other.seed = 43;
    const SignatureSamples c = simulate_signature_samples(p, req, other);
    CHECK(c.column(Word{1}) != a.column(Word{1}));
}

TEST_CASE("thread splitting does not change the sample") {
    const ProcessSpec p = jump_spec();
    const SimConfig cfg{1000, 40, 0.5, 7};
    const std::vector<Word> req{Word{1, 1}, Word{-1}};
    setenv("SIGEXPAND_THREADS", "1", 1);
    const SignatureSamples a = simulate_signature_samples(p, req, cfg);
    setenv("SIGEXPAND_THREADS", "3", 1);
    const SignatureSamples b = simulate_signature_samples(p, req, cfg);
    unsetenv("SIGEXPAND_THREADS");
    REQUIRE(a.words() == b.words());
    for (const auto& w : a.words()) CHECK(a.column(w) == b.column(w));
}

TEST_CASE("requested words are closed under prefixes, longest first") {
    const ProcessSpec p = brownian_spec();
    const SimConfig cfg{100, 10, 1.0, 1};
    const SignatureSamples s = simulate_signature_samples(p, {Word{0, 1, 1}}, cfg);
    // closure: (0,1,1), (0,1), (0), ()
    REQUIRE(s.words().size() == 4);
    CHECK(s.words()[0] == Word{0, 1, 1});
    for (size_t i = 1; i < s.words().size(); ++i)
        CHECK(s.words()[i - 1].size() >= s.words()[i].size());
    CHECK_THROWS_AS(s.column(Word{1, 0}), ConfigError);
}

TEST_CASE("deterministic time coordinates are exact") {
    const ProcessSpec p = brownian_spec();
    const double t = 0.75;
    const SimConfig cfg{500, 60, t, 3};
    const SignatureSamples s = simulate_signature_samples(p, {Word{0, 0}}, cfg);
    for (double v : s.column(Word{0})) CHECK(v == doctest::Approx(t).epsilon(1e-12));
    // left-endpoint rule: sum of k dt^2 over k < n is t^2 (1 - 1/n) / 2
    const double want = t * t * (1.0 - 1.0 / cfg.n_steps) / 2;
    for (double v : s.column(Word{0, 0})) CHECK(v == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("sample means land on the expected signature values") {
    const ProcessSpec p = brownian_spec();
    const SimConfig cfg{40000, 100, 0.5, 11};
    const SignatureSamples s =
        simulate_signature_samples(p, {Word{1, 1}, Word{0, 1}}, cfg);
    for (const Word& w : {Word{1}, Word{1, 1}, Word{0, 1}}) {
        const MeanSE st = column_stats(s, w);
        CAPTURE(w.str());
        CHECK(std::abs(st.mean) <= 4 * st.se);
        CHECK(st.se > 0);
    }
}

TEST_CASE("poisson coordinate matches its intensity") {
    const ProcessSpec p = jump_spec();
    const double t = 0.5;
    const SimConfig cfg{40000, 50, t, 13};
    const SignatureSamples s = simulate_signature_samples(p, {Word{-1}, Word{-2}}, cfg);
    // <(-1)> sums jump sizes: mean lambda E[xi] t = 2 * 1/2 * 1/2
    const MeanSE st = column_stats(s, Word{-1});
    CHECK(std::abs(st.mean - 0.5) <= 4 * st.se);

    // the squared-jump coordinate is the pathwise square sum: with a single
    // atom at 1/2 it is exactly half the size sum, path by path
    const auto& c1 = s.column(Word{-1});
    const auto& c2 = s.column(Word{-2});
    for (size_t i = 0; i < c1.size(); ++i) CHECK(c2[i] == c1[i] * 0.5);
}

TEST_CASE("empirical characteristic function of a pure Brownian exposure") {
    ProcessSpec p;
    p.cfg = {1, 0, 1};
    p.depth = 1;
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    p.coeffs[Word{1}] = CoeffValue::val(Rational(1, 5));
    const SimConfig cfg{60000, 20, 0.25, 17};
    const SignatureSamples s = simulate_signature_samples(p, {Word{1}}, cfg);
    for (double u : {0.5, 1.0, 2.0}) {
        const CfEstimate est = empirical_cf(s, p, u, true);
        const double want = std::exp(-u * u / 2);  // exactly Gaussian when standardized
        CAPTURE(u);
        CHECK(std::abs(est.mean - want) <= 4 * est.se());
    }
    // raw mode keeps the c_1^2 t scaling
    const CfEstimate raw = empirical_cf(s, p, 1.0, false);
    CHECK(std::abs(raw.mean - std::exp(-0.04 * 0.25 / 2)) <= 4 * raw.se());
}

TEST_CASE("simulation rejects symbolic specs and missing measures") {
    ProcessSpec p = brownian_spec();
    p.coeffs[Word{1}] = CoeffValue::sym();
    const SimConfig cfg{100, 10, 1.0, 1};
    const SignatureSamples s = simulate_signature_samples(p, {Word{1}}, cfg);
    CHECK_THROWS_AS(empirical_cf(s, p, 1.0, true), EvalError);

    ProcessSpec q = jump_spec();
    q.levy.clear();
    CHECK_THROWS_AS(simulate_signature_samples(q, {Word{-1}}, cfg), ConfigError);
}

TEST_CASE("verification report wires expansion, truth and slope together") {
    ProcessSpec p;
    p.cfg = {1, 0, 1};
    p.depth = 2;
    p.coeffs[Word{}] = CoeffValue::val(Rational(0));
    p.coeffs[Word{1}] = CoeffValue::val(Rational(1, 5));
    Expansion ex;
    ex.prefactor = {CfPrefactor::Kind::Gauss, true, {}};
    ex.add_at(0, Poly(1));
    ex.remainder_order = Rational(1);

    // truth with a deliberate t^2 defect: slope should come out near 2
    TruthFn truth = [](double u, double t) {
        return std::exp(-u * u / 2) * (1.0 + t * t);
    };
    const VerifyReport rep =
        verify_expansion(p, ex, {0.5, 1.0}, {0.2, 0.1, 0.05}, nullptr, truth);
    REQUIRE(rep.points.size() == 6);
    CHECK(rep.has_slope);
    CHECK(rep.min_slope == doctest::Approx(2.0).epsilon(0.05));
    for (const auto& pt : rep.points) {
        CHECK(pt.has_truth);
        CHECK_FALSE(pt.has_mc);
    }

    // with mc attached the gap column fills in
    const SimConfig mc{5000, 20, 1.0, 5};
    const VerifyReport rep2 = verify_expansion(p, ex, {1.0}, {0.1}, &mc, nullptr);
    REQUIRE(rep2.points.size() == 1);
    CHECK(rep2.points[0].has_mc);
    CHECK(rep2.points[0].se > 0);
    CHECK(rep2.points[0].mc_gap <= 6 * rep2.points[0].se);
    CHECK_FALSE(rep2.has_slope);
}
