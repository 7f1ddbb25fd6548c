#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "sigexpand/expansion.hpp"
#include "sigexpand/process.hpp"

namespace sigx {

// Monte Carlo settings. n_steps is the total Euler step count across the
// horizon, not a per-unit-time rate. Thread count is taken from the
// machine, capped by the SIGEXPAND_THREADS environment variable; results
// are bit-identical for any thread count because every (path, step)
// stream is addressed by counter.
struct SimConfig {
    long n_paths = 10000;
    int n_steps = 500;
    double horizon = 1.0;
    uint64_t seed = 1;
};

// Per-path terminal values of signature coordinates, one column per word
// of the prefix closure of the requested set. Words use the extended
// (powered) jump alphabet.
class SignatureSamples {
  public:
    const std::vector<Word>& words() const { return words_; }
    const std::vector<double>& column(const Word& w) const;
    long n_paths() const { return n_paths_; }
    double horizon() const { return horizon_; }

  private:
    friend SignatureSamples simulate_signature_samples(const ProcessSpec&, std::vector<Word>,
                                                       const SimConfig&);
    std::vector<Word> words_;           // descending length; update order
    std::vector<std::vector<double>> cols_;
    long n_paths_ = 0;
    double horizon_ = 0;
};

SignatureSamples simulate_signature_samples(const ProcessSpec& spec, std::vector<Word> words,
                                            const SimConfig& cfg);

struct MeanSE {
    double mean = 0;
    double se = 0;
};
MeanSE column_stats(const SignatureSamples& s, const Word& w);

struct CfEstimate {
    std::complex<double> mean;
    double se_re = 0;
    double se_im = 0;
    double se() const { return std::sqrt(se_re * se_re + se_im * se_im); }
};

// Empirical E[exp(i u X_t)] (or of X_t / (c_1 sqrt(t)) when standardized)
// with X_t rebuilt from the populated words' columns; the spec must be
// fully numeric.
CfEstimate empirical_cf(const SignatureSamples& s, const ProcessSpec& spec, double u,
                        bool standardized);

struct VerifyPoint {
    double u = 0;
    double t = 0;
    std::complex<double> expansion;
    bool has_mc = false;
    std::complex<double> empirical;
    double se = 0;
    double mc_gap = 0;  // |empirical - expansion|
    bool has_truth = false;
    std::complex<double> truth;
    double err_vs_truth = 0;  // |expansion - truth|
};

struct VerifyReport {
    std::vector<VerifyPoint> points;
    bool has_slope = false;
    double min_slope = 0;  // smallest per-u log-log slope of err_vs_truth
    json to_json() const;
};

using TruthFn = std::function<std::complex<double>(double u, double t)>;

// Evaluate an expansion on a (u, t) grid against Monte Carlo (when mc is
// given; one simulation per t, reused across u) and/or an analytic truth.
// The slope diagnostic fits log|error| against log t per u and reports
// the weakest fit; a truncation at o(t^r) should show slope > r.
VerifyReport verify_expansion(const ProcessSpec& spec, const Expansion& ex,
                              const std::vector<double>& us, const std::vector<double>& ts,
                              const SimConfig* mc, TruthFn truth = nullptr);

}  // namespace sigx
