#include "sigexpand/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "sigexpand/error.hpp"
#include "sigexpand/rng.hpp"

namespace sigx {

namespace {

int thread_count(long n_paths) {
    unsigned hw = std::thread::hardware_concurrency();
    long n = hw == 0 ? 1 : (long)hw;
    if (const char* env = std::getenv("SIGEXPAND_THREADS")) {
        long cap = std::atol(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return (int)std::max(1L, std::min(n, n_paths));
}

struct WordPlan {
    int parent = -1;  // index into the plan, -1 for the empty word
    Letter last = 0;
    int driver = 0;   // decoded jump driver, 0 if none
    int power = 0;
};

}  // namespace

const std::vector<double>& SignatureSamples::column(const Word& w) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] == w) return cols_[i];
    throw ConfigError("no simulated column for word " + w.str());
}

SignatureSamples simulate_signature_samples(const ProcessSpec& spec, std::vector<Word> words,
                                            const SimConfig& cfg) {
    spec.validate();
    if (cfg.n_paths < 1 || cfg.n_steps < 1 || !(cfg.horizon > 0))
        throw ConfigError("simulation needs n_paths >= 1, n_steps >= 1 and a positive horizon");
    for (int j = 1; j <= spec.cfg.e; ++j)
        if (!find_measure(spec.levy, j))
            throw ConfigError("driver " + std::to_string(j) + " has no atom measure to simulate");

    // prefix closure, longest first so every update reads pre-update parents
    std::set<Word> closure;
    closure.insert(Word{});
    for (const Word& w : words) {
        validate_word(w, spec.cfg);
        for (Word p = w; !p.empty(); p = p.parent()) closure.insert(p);
    }
    std::vector<Word> order(closure.begin(), closure.end());
    std::sort(order.begin(), order.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });

    std::map<Word, int> index;
    for (size_t i = 0; i < order.size(); ++i) index[order[i]] = (int)i;
    std::vector<WordPlan> plan(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        const Word& w = order[i];
        if (w.empty()) continue;
        plan[i].parent = index.at(w.parent());
        plan[i].last = w.last();
        if (w.last() < 0) {
            LetterPair lp = letter_decode(w.last(), spec.cfg);
            plan[i].driver = lp.driver;
            plan[i].power = lp.power;
        }
    }

    const int nw = (int)order.size();
    const double dt = cfg.horizon / cfg.n_steps;
    const double sdt = std::sqrt(dt);
    const int d = spec.cfg.d, e = spec.cfg.e;

    std::vector<double> lam(e + 1, 0.0);
    std::vector<std::vector<double>> axi(e + 1), acw(e + 1);  // atom sizes, cumulative weights
    for (int j = 1; j <= e; ++j) {
        const LevyAtomMeasure* nu = find_measure(spec.levy, j);
        lam[j] = to_double(nu->lambda);
        double cum = 0;
        for (const auto& at : nu->atoms) {
            axi[j].push_back(to_double(at.xi));
            cum += to_double(at.w);
            acw[j].push_back(cum);
        }
        acw[j].back() = 1.0;  // guard against rounding in the last bucket
    }

    SignatureSamples out;
    out.words_ = order;
    out.n_paths_ = cfg.n_paths;
    out.horizon_ = cfg.horizon;
    out.cols_.assign(nw, std::vector<double>(cfg.n_paths, 0.0));

    auto run_range = [&](long lo, long hi) {
        std::vector<double> val(nw), dz(d + 1);
        for (long path = lo; path < hi; ++path) {
            for (int i = 0; i < nw; ++i) val[i] = 0.0;
            val[index.at(Word{})] = 1.0;
            for (int step = 0; step < cfg.n_steps; ++step) {
                NormalStream ns(UniformStream(cfg.seed, (uint32_t)path, (uint32_t)step, 0));
                dz[0] = dt;
                for (int l = 1; l <= d; ++l) dz[l] = ns.next() * sdt;
                for (int i = 0; i < nw; ++i) {
                    const WordPlan& wp = plan[i];
                    if (wp.parent >= 0 && wp.last >= 0) val[i] += val[wp.parent] * dz[wp.last];
                }
                for (int j = 1; j <= e; ++j) {
                    UniformStream us(cfg.seed, (uint32_t)path, (uint32_t)step, (uint32_t)j);
                    int njump = poisson_knuth(us, lam[j] * dt);
                    for (int ev = 0; ev < njump; ++ev) {
                        double u = us.next();
                        size_t a = 0;
                        while (a + 1 < acw[j].size() && u > acw[j][a]) ++a;
                        double xi = axi[j][a];
                        for (int i = 0; i < nw; ++i) {
                            const WordPlan& wp = plan[i];
                            if (wp.driver == j)
                                val[i] += val[wp.parent] * std::pow(xi, wp.power);
                        }
                    }
                }
            }
            for (int i = 0; i < nw; ++i) out.cols_[i][path] = val[i];
        }
    };

    int nt = thread_count(cfg.n_paths);
    if (nt == 1) {
        run_range(0, cfg.n_paths);
    } else {
        std::vector<std::thread> pool;
        long chunk = (cfg.n_paths + nt - 1) / nt;
        for (int k = 0; k < nt; ++k) {
            long lo = k * chunk, hi = std::min(cfg.n_paths, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

MeanSE column_stats(const SignatureSamples& s, const Word& w) {
    const std::vector<double>& col = s.column(w);
    const long n = (long)col.size();
    double sum = 0;
    for (double x : col) sum += x;
    double mean = sum / n;
    double ss = 0;
    for (double x : col) ss += (x - mean) * (x - mean);
    double var = n > 1 ? ss / (n - 1) : 0.0;
    return {mean, std::sqrt(var / n)};
}

CfEstimate empirical_cf(const SignatureSamples& s, const ProcessSpec& spec, double u,
                        bool standardized) {
    std::vector<const std::vector<double>*> cols;
    std::vector<double> cs;
    for (const auto& [w, v] : spec.coeffs) {
        if (w.empty() || v.known_zero()) continue;
        if (v.symbolic)
            throw EvalError("empirical CF needs numeric coefficients, got symbol for " + w.str());
        cols.push_back(&s.column(spec.extend(w)));
        cs.push_back(to_double(v.num));
    }
    double x0 = spec.numeric_coeff(Word{});
    double scale = 1.0;
    if (standardized) {
        double c1 = spec.numeric_coeff(Word({1}));
        if (c1 == 0.0) throw EvalError("standardized empirical CF needs c_1 != 0");
        scale = 1.0 / (c1 * std::sqrt(s.horizon()));
    }
    const long n = s.n_paths();
    double sr = 0, si = 0, sr2 = 0, si2 = 0;
    for (long p = 0; p < n; ++p) {
        double x = x0;
        for (size_t k = 0; k < cols.size(); ++k) x += cs[k] * (*cols[k])[p];
        x *= scale;
        double re = std::cos(u * x), im = std::sin(u * x);
        sr += re;
        si += im;
        sr2 += re * re;
        si2 += im * im;
    }
    CfEstimate est;
    est.mean = {sr / n, si / n};
    auto se = [n](double s2, double mean) {
        double var = (s2 / n - mean * mean) * ((double)n / std::max<long>(n - 1, 1));
        return std::sqrt(std::max(var, 0.0) / n);
    };
    est.se_re = se(sr2, est.mean.real());
    est.se_im = se(si2, est.mean.imag());
    return est;
}

VerifyReport verify_expansion(const ProcessSpec& spec, const Expansion& ex,
                              const std::vector<double>& us, const std::vector<double>& ts,
                              const SimConfig* mc, TruthFn truth) {
    VerifyReport rep;
    std::vector<Word> pw;
    for (const auto& [w, v] : spec.coeffs)
        if (!w.empty() && !v.known_zero()) pw.push_back(spec.extend(w));

    for (double t : ts) {
        SignatureSamples sims;
        bool have_mc = mc != nullptr;
        if (have_mc) {
            SimConfig c = *mc;
            c.horizon = t;
            sims = simulate_signature_samples(spec, pw, c);
        }
        for (double u : us) {
            VerifyPoint pt;
            pt.u = u;
            pt.t = t;
            pt.expansion = ex.eval(spec, u, t);
            if (have_mc) {
                CfEstimate est = empirical_cf(sims, spec, u, ex.prefactor.standardized);
                pt.has_mc = true;
                pt.empirical = est.mean;
                pt.se = est.se();
                pt.mc_gap = std::abs(est.mean - pt.expansion);
            }
            if (truth) {
                pt.has_truth = true;
                pt.truth = truth(u, t);
                pt.err_vs_truth = std::abs(pt.expansion - pt.truth);
            }
            rep.points.push_back(pt);
        }
    }

    if (truth && ts.size() >= 2) {
        double worst = 1e300;
        for (double u : us) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            int n = 0;
            for (const auto& pt : rep.points) {
                if (pt.u != u || !(pt.err_vs_truth > 0)) continue;
                double x = std::log(pt.t), y = std::log(pt.err_vs_truth);
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
                ++n;
            }
            if (n >= 2) {
                double denom = n * sxx - sx * sx;
                if (denom != 0) worst = std::min(worst, (n * sxy - sx * sy) / denom);
            }
        }
        if (worst < 1e300) {
            rep.has_slope = true;
            rep.min_slope = worst;
        }
    }
    return rep;
}

json VerifyReport::to_json() const {
    json j;
    json pts = json::array();
    for (const auto& p : points) {
        json e;
        e["u"] = p.u;
        e["t"] = p.t;
        e["expansion_re"] = p.expansion.real();
        e["expansion_im"] = p.expansion.imag();
        if (p.has_mc) {
            e["empirical_re"] = p.empirical.real();
            e["empirical_im"] = p.empirical.imag();
            e["se"] = p.se;
            e["mc_gap"] = p.mc_gap;
        }
        if (p.has_truth) {
            e["truth_re"] = p.truth.real();
            e["truth_im"] = p.truth.imag();
            e["err_vs_truth"] = p.err_vs_truth;
        }
        pts.push_back(e);
    }
    j["points"] = pts;
    if (has_slope) j["min_slope"] = min_slope;
    return j;
}

}  // namespace sigx
