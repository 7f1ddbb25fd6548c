#include "sigexpand/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "sigexpand/charfun.hpp"
#include "sigexpand/error.hpp"
#include "sigexpand/generator.hpp"
#include "sigexpand/sim.hpp"
#include "sigexpand/star.hpp"

namespace sigx {

namespace {

void emit_error(const std::string& type, const std::string& message) {
    json e;
    e["error"] = {{"type", type}, {"message", message}};
    std::cerr << e.dump() << "\n";
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

// Words on the command line are m-independent: a nonnegative integer is
// itself, a negative integer -j is driver j at power 1, and a [driver,
// power] pair addresses higher powers. Encoding to raw powered letters
// happens against the current alphabet, so a depth retry re-encodes
// safely.
Word word_from_json(const json& arr, const AlphabetConfig& cfg) {
    if (!arr.is_array()) throw ConfigError("word must be a JSON array");
    std::vector<Letter> ls;
    for (const auto& el : arr) {
        if (el.is_number_integer()) {
            int v = el.get<int>();
            ls.push_back(v < 0 ? letter_encode(-v, 1, cfg) : v);
        } else if (el.is_array() && el.size() == 2) {
            ls.push_back(letter_encode(el[0].get<int>(), el[1].get<int>(), cfg));
        } else {
            throw ConfigError("word letters must be integers or [driver,power] pairs");
        }
    }
    return Word(std::move(ls));
}

json word_to_json(const Word& w, const AlphabetConfig& cfg) {
    json arr = json::array();
    for (Letter l : w.letters()) {
        if (l >= 0) {
            arr.push_back(l);
        } else {
            LetterPair lp = letter_decode(l, cfg);
            if (lp.power == 1)
                arr.push_back(-lp.driver);
            else
                arr.push_back(json::array({lp.driver, lp.power}));
        }
    }
    return arr;
}

json combination_to_json(const WordCombination& wc, const AlphabetConfig& cfg) {
    json arr = json::array();
    for (const auto& [w, c] : wc.terms())
        arr.push_back({{"word", word_to_json(w, cfg)}, {"coeff", c.str()}});
    return arr;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

ProcessSpec load_spec(const std::string& path) {
    return ProcessSpec::from_json(parse_json(slurp(path), "process spec"));
}

// Retry hook for recoverable alphabet-depth failures: powers above m mean
// the extended alphabet was built too shallow, so double m and rerun.
json with_depth_retry(bool auto_depth, int& m, const std::function<json(int)>& body) {
    for (;;) {
        try {
            return body(m);
        } catch (const DepthError&) {
            if (!auto_depth || m >= 64) throw;
            m *= 2;
        }
    }
}

std::vector<Rational> parse_poly_coeffs(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ConfigError("empty polynomial coefficient list");
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact local expansions of Ito semimartingale signature moments"};
    app.require_subcommand(1);

    // star / barstar
    std::string left_s, right_s;
    int a_d = 1, a_e = 0, a_m = 1;
    bool auto_depth = false;
    CLI::App* c_star = app.add_subcommand("star", "Ito star product of two continuous words");
    c_star->add_option("left", left_s, "left word, JSON array")->required();
    c_star->add_option("right", right_s, "right word, JSON array")->required();

    CLI::App* c_bar = app.add_subcommand("barstar", "merge star product on the jump-extended alphabet");
    c_bar->add_option("left", left_s, "left word, JSON array")->required();
    c_bar->add_option("right", right_s, "right word, JSON array")->required();
    c_bar->add_option("--d", a_d, "Brownian drivers");
    c_bar->add_option("--e", a_e, "jump drivers");
    c_bar->add_option("--m", a_m, "max tracked jump power");
    c_bar->add_flag("--auto-depth", auto_depth, "double m and retry on depth failures");

    // moment / kmoment
    std::string spec_path;
    int L = 1, k_ord = 1, order = 2;
    std::string route = "generator";
    std::string f_poly;
    bool f_sqphase = false;
    CLI::App* c_mom = app.add_subcommand("moment", "E[f(X_t)] expansion");
    c_mom->add_option("--spec", spec_path, "process spec JSON file (- for stdin)")->required();
    c_mom->add_option("--L", L, "generator-route order (remainder o(t^L))");
    c_mom->add_option("--order", order, "star-transform route order (remainder o(t^(m/2)))");
    c_mom->add_option("--route", route, "generator | startransform")
        ->check(CLI::IsMember({"generator", "startransform"}));
    c_mom->add_option("--f-poly", f_poly, "f as comma-separated rational coefficients, lowest first");
    c_mom->add_flag("--f-squared-phase", f_sqphase, "f(x) = exp(i u (x - X_0)^2)");
    c_mom->add_flag("--auto-depth", auto_depth, "double m and retry on depth failures");

    CLI::App* c_kmom = app.add_subcommand("kmoment", "E[X_t^k] expansion");
    c_kmom->add_option("--spec", spec_path)->required();
    c_kmom->add_option("--k", k_ord, "moment order")->required();
    c_kmom->add_option("--L", L, "expansion order");
    c_kmom->add_flag("--auto-depth", auto_depth);

    // charfun / jumpcharfun
    CLI::App* c_cf = app.add_subcommand("charfun", "standardized characteristic function expansion");
    c_cf->add_option("--spec", spec_path)->required();
    c_cf->add_option("--order", order, "kept order (remainder o(t^(order/2)))");

    CLI::App* c_jcf = app.add_subcommand("jumpcharfun", "order-2 characteristic function with jumps");
    c_jcf->add_option("--spec", spec_path)->required();
    c_jcf->add_flag("--auto-depth", auto_depth);

    // verify
    std::vector<double> us{1.0}, ts{0.01};
    long paths = 10000;
    int steps = 500;
    uint64_t seed = 1;
    bool no_mc = false;
    CLI::App* c_ver = app.add_subcommand("verify", "compare an expansion against Monte Carlo");
    c_ver->add_option("--spec", spec_path)->required();
    c_ver->add_option("--order", order, "expansion order (ignored for jump specs, fixed at 2)");
    c_ver->add_option("--u", us, "frequencies")->delimiter(',');
    c_ver->add_option("--t", ts, "horizons")->delimiter(',');
    c_ver->add_option("--paths", paths, "Monte Carlo paths");
    c_ver->add_option("--steps", steps, "total Euler steps per horizon");
    c_ver->add_option("--seed", seed, "RNG seed");
    c_ver->add_flag("--no-mc", no_mc, "skip simulation, just evaluate the expansion");

    // render
    std::string in_path;
    CLI::App* c_ren = app.add_subcommand("render", "LaTeX for an expansion JSON");
    c_ren->add_option("--in", in_path, "expansion JSON file (- for stdin)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("UsageError", e.what());
        return 2;
    }

    try {
        if (*c_star) {
            AlphabetConfig cfg;  // d=1 suffices: star never checks driver bounds
            Word l = word_from_json(parse_json(left_s, "left word"), cfg);
            Word r = word_from_json(parse_json(right_s, "right word"), cfg);
            json out;
            out["left"] = word_to_json(l, cfg);
            out["right"] = word_to_json(r, cfg);
            out["product"] = combination_to_json(star(l, r), cfg);
            print(out);
        } else if (*c_bar) {
            json lj = parse_json(left_s, "left word"), rj = parse_json(right_s, "right word");
            json out = with_depth_retry(auto_depth, a_m, [&](int m) {
                AlphabetConfig cfg{a_d, a_e, m};
                cfg.validate();
                Word l = word_from_json(lj, cfg);
                Word r = word_from_json(rj, cfg);
                json o;
                o["alphabet"] = {{"d", cfg.d}, {"e", cfg.e}, {"m", cfg.m}};
                o["left"] = word_to_json(l, cfg);
                o["right"] = word_to_json(r, cfg);
                o["product"] = combination_to_json(bar_star(l, r, cfg), cfg);
                return o;
            });
            print(out);
        } else if (*c_mom) {
            ProcessSpec spec = load_spec(spec_path);
            if (f_poly.empty() == !f_sqphase)
                throw ConfigError("pick exactly one of --f-poly and --f-squared-phase");
            json out = with_depth_retry(auto_depth, spec.cfg.m, [&](int m) {
                spec.cfg.m = m;
                std::unique_ptr<FDerivatives> f;
                if (f_sqphase)
                    f = std::make_unique<SquaredPhaseF>(spec.x0_poly());
                else
                    f = std::make_unique<PolynomialF>(parse_poly_coeffs(f_poly));
                Expansion ex;
                if (route == "startransform")
                    ex = regular_moment_via_startransform(spec, *f, order);
                else if (spec.cfg.e > 0)
                    ex = jump_regular_moment_expansion(spec, *f, L);
                else
                    ex = regular_moment_expansion(spec, *f, L);
                return ex.to_json();
            });
            print(out);
        } else if (*c_kmom) {
            ProcessSpec spec = load_spec(spec_path);
            json out = with_depth_retry(auto_depth, spec.cfg.m, [&](int m) {
                spec.cfg.m = m;
                return kth_moment_expansion(spec, k_ord, L).to_json();
            });
            print(out);
        } else if (*c_cf) {
            ProcessSpec spec = load_spec(spec_path);
            print(standardized_cf_expansion(spec, order).to_json());
        } else if (*c_jcf) {
            ProcessSpec spec = load_spec(spec_path);
            json out = with_depth_retry(auto_depth, spec.cfg.m, [&](int m) {
                spec.cfg.m = m;
                return jump_cf_expansion(spec).to_json();
            });
            print(out);
        } else if (*c_ver) {
            ProcessSpec spec = load_spec(spec_path);
            Expansion ex = spec.cfg.e > 0 ? jump_cf_expansion(spec)
                                          : standardized_cf_expansion(spec, order);
            SimConfig mc{paths, steps, 1.0, seed};
            VerifyReport rep = verify_expansion(spec, ex, us, ts, no_mc ? nullptr : &mc);
            print(rep.to_json());
        } else if (*c_ren) {
            Expansion ex = Expansion::from_json(parse_json(slurp(in_path), "expansion"));
            std::cout << ex.latex() << "\n";
        }
    } catch (const DepthError& e) {
        emit_error("DepthError", e.what());
        return 3;
    } catch (const IntegrabilityError& e) {
        emit_error("IntegrabilityError", e.what());
        return 3;
    } catch (const ResourceError& e) {
        emit_error("ResourceError", e.what());
        return 3;
    } catch (const EvalError& e) {
        emit_error("EvalError", e.what());
        return 3;
    } catch (const ValidationError& e) {
        emit_error("ValidationError", e.what());
        return 2;
    } catch (const ConfigError& e) {
        emit_error("ConfigError", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("Error", e.what());
        return 2;
    }
    return 0;
}

}  // namespace sigx
