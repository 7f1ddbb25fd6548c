#include "sigexpand/expansion.hpp"

#include <cmath>
#include <sstream>

#include "sigexpand/error.hpp"

namespace sigx {

void Expansion::add_poly(const Poly& p) {
    for (auto& [k, q] : p.split_sqrt_t()) add_at(k, q);
}

void Expansion::add_at(int half_power, const Poly& p) {
    if (p.empty()) return;
    Poly& slot = terms[half_power];
    slot += p;
    if (slot.empty()) terms.erase(half_power);
}

Poly Expansion::total_poly() const {
    Poly out;
    for (const auto& [k, p] : terms) out += p.shifted_sqrt_t(k);
    return out;
}

std::complex<double> Expansion::eval(const ProcessSpec& spec, double u, double t) const {
    Assignment a = make_assignment(spec, u, t, prefactor.standardized);
    double rt = std::sqrt(t);
    std::complex<double> s = 0.0;
    for (const auto& [k, p] : terms) s += p.eval(a) * std::pow(rt, k);
    for (const auto& tp : jump_extra) s += tp.poly.eval(a) * std::pow(rt, tp.half_power);
    return prefactor_value(prefactor, spec, u, t) * s;
}

bool same_series(const Expansion& a, const Expansion& b) {
    return a.prefactor == b.prefactor && a.terms == b.terms && a.jump_extra == b.jump_extra;
}

Assignment make_assignment(const ProcessSpec& spec, double u, double t, bool standardized) {
    Assignment a;
    spec.fill_assignment(a);
    a.set(SymbolId::iu(), std::complex<double>(0.0, u));
    a.set(SymbolId::sqrt_t(), std::sqrt(t));
    for (const auto& nu : spec.levy) {
        Word jl({-nu.j});
        CoeffValue load = spec.coeff(jl);
        if (load.symbolic)
            continue;  // atom symbols stay unevaluated; eval will fail only if one is actually used
        double cj = to_double(load.num);
        double scale = 1.0;
        if (standardized) {
            double c1 = spec.numeric_coeff(Word({1}));
            if (c1 == 0.0 || t <= 0.0) throw EvalError("standardized atoms need c_1 != 0 and t > 0");
            scale = 1.0 / (c1 * std::sqrt(t));
        }
        for (size_t idx = 0; idx < nu.atoms.size(); ++idx) {
            double xi = to_double(nu.atoms[idx].xi);
            a.set(SymbolId::jump_atom(nu.j, (int)idx),
                  std::exp(std::complex<double>(0.0, u * cj * xi * scale)));
        }
    }
    return a;
}

std::complex<double> prefactor_value(const CfPrefactor& pf, const ProcessSpec& spec, double u, double t) {
    if (pf.kind == CfPrefactor::Kind::None) return 1.0;
    double c1 = 0.0;
    if (!pf.standardized) c1 = spec.numeric_coeff(Word({1}));
    std::complex<double> g =
        pf.standardized ? std::exp(-u * u / 2.0) : std::exp(-u * u * c1 * c1 * t / 2.0);
    if (pf.kind == CfPrefactor::Kind::Gauss) return g;
    Assignment a = make_assignment(spec, u, t, pf.standardized);
    std::complex<double> extra = 0.0;
    for (int j : pf.jump_loaded) {
        const LevyAtomMeasure* nu = find_measure(spec.levy, j);
        if (!nu) throw EvalError("no measure for loaded driver " + std::to_string(j));
        std::complex<double> mean = 0.0;
        for (size_t idx = 0; idx < nu->atoms.size(); ++idx)
            mean += to_double(nu->atoms[idx].w) * a.get(SymbolId::jump_atom(j, (int)idx));
        extra += to_double(nu->lambda) * t * (mean - 1.0);
    }
    return g * std::exp(extra);
}

std::string prefactor_display(const CfPrefactor& pf) {
    if (pf.kind == CfPrefactor::Kind::None) return "1";
    std::string g = pf.standardized ? "exp(-u^2/2)" : "exp(-u^2 c_1^2 t/2)";
    if (pf.kind == CfPrefactor::Kind::Gauss) return g;
    std::string js;
    for (size_t i = 0; i < pf.jump_loaded.size(); ++i) {
        if (i) js += ",";
        js += std::to_string(pf.jump_loaded[i]);
    }
    return g + " * exp(t sum_{j in {" + js + "}} lambda_j sum_a w_a (E_j_a - 1))";
}

std::string prefactor_latex(const CfPrefactor& pf) {
    if (pf.kind == CfPrefactor::Kind::None) return "";
    std::string g = pf.standardized ? "e^{-u^2/2}" : "e^{-u^2 c_1^2 t/2}";
    if (pf.kind == CfPrefactor::Kind::Gauss) return g;
    return g + " \\, e^{t \\sum_j \\lambda_j \\sum_a w_a (E_{j,a}-1)}";
}

std::string tpow_latex(int half_power) {
    if (half_power == 0) return "";
    if (half_power == 1) return "\\sqrt{t}";
    if (half_power % 2 == 0)
        return half_power == 2 ? "t" : "t^{" + std::to_string(half_power / 2) + "}";
    return "t^{" + std::to_string(half_power) + "/2}";
}

std::string Expansion::str() const {
    std::ostringstream os;
    os << prefactor_display(prefactor);
    if (!terms.empty() || !jump_extra.empty()) {
        os << " * [ ";
        bool first = true;
        for (const auto& [k, p] : terms) {
            if (!first) os << " + ";
            first = false;
            os << "(" << p.str() << ")";
            if (k != 0) os << "*sqrt_t^" << k;
        }
        for (const auto& tp : jump_extra) {
            if (!first) os << " + ";
            first = false;
            os << "(" << tp.poly.str() << ")";
            if (tp.half_power != 0) os << "*sqrt_t^" << tp.half_power;
        }
        os << " ]";
    }
    os << " + o(t^" << to_string(remainder_order) << ")";
    return os.str();
}

std::string Expansion::latex() const {
    std::ostringstream os;
    std::string pf = prefactor_latex(prefactor);
    if (!pf.empty()) os << pf << " \\left( ";
    bool first = true;
    for (const auto& [k, p] : terms) {
        std::string body = p.latex();
        if (!first) os << " + ";
        first = false;
        if (k == 0)
            os << body;
        else
            os << "\\left(" << body << "\\right) " << tpow_latex(k);
    }
    for (const auto& tp : jump_extra) {
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << tp.poly.latex() << "\\right)";
        if (tp.half_power != 0) os << " \\, " << tpow_latex(tp.half_power);
    }
    if (first) os << "0";
    if (!pf.empty()) os << " \\right)";
    os << " + o\\!\\left(t^{" << to_string(remainder_order) << "}\\right)";
    return os.str();
}

namespace {

json terms_to_json(const std::map<int, Poly>& terms) {
    json arr = json::array();
    for (const auto& [k, p] : terms) {
        json e;
        e["t_pow"] = to_string(Rational(k) / 2);
        e["poly"] = p.to_json();
        arr.push_back(e);
    }
    return arr;
}

json extras_to_json(const std::vector<TermAtPower>& v) {
    json arr = json::array();
    for (const auto& tp : v) {
        json e;
        e["t_pow"] = to_string(Rational(tp.half_power) / 2);
        e["poly"] = tp.poly.to_json();
        arr.push_back(e);
    }
    return arr;
}

int half_power_from_json(const json& e) {
    Rational r = parse_rational(e.at("t_pow").get<std::string>()) * 2;
    Int n = boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        throw ConfigError("t_pow must be a multiple of 1/2");
    return (int)n.convert_to<long>();
}

}  // namespace

json Expansion::to_json() const {
    json j;
    json pf;
    switch (prefactor.kind) {
        case CfPrefactor::Kind::None: pf["kind"] = "none"; break;
        case CfPrefactor::Kind::Gauss: pf["kind"] = "gauss"; break;
        case CfPrefactor::Kind::GaussJump: pf["kind"] = "gauss_jump"; break;
    }
    pf["standardized"] = prefactor.standardized;
    pf["jump_loaded"] = prefactor.jump_loaded;
    pf["display"] = prefactor_display(prefactor);
    j["prefactor"] = pf;
    j["terms"] = terms_to_json(terms);
    j["remainder"] = "o(t^" + to_string(remainder_order) + ")";
    j["remainder_order"] = to_string(remainder_order);
    j["jump_extra"] = extras_to_json(jump_extra);
    j["discarded_audit"] = extras_to_json(discarded);
    j["notes"] = notes;
    return j;
}

Expansion Expansion::from_json(const json& j) {
    Expansion e;
    const json& pf = j.at("prefactor");
    std::string kind = pf.at("kind").get<std::string>();
    if (kind == "none")
        e.prefactor.kind = CfPrefactor::Kind::None;
    else if (kind == "gauss")
        e.prefactor.kind = CfPrefactor::Kind::Gauss;
    else if (kind == "gauss_jump")
        e.prefactor.kind = CfPrefactor::Kind::GaussJump;
    else
        throw ConfigError("unknown prefactor kind: " + kind);
    e.prefactor.standardized = pf.value("standardized", false);
    if (pf.contains("jump_loaded")) e.prefactor.jump_loaded = pf.at("jump_loaded").get<std::vector<int>>();
    for (const auto& entry : j.at("terms"))
        e.terms[half_power_from_json(entry)] = Poly::from_json(entry.at("poly"));
    if (j.contains("remainder_order")) e.remainder_order = parse_rational(j.at("remainder_order").get<std::string>());
    if (j.contains("jump_extra"))
        for (const auto& entry : j.at("jump_extra"))
            e.jump_extra.push_back({half_power_from_json(entry), Poly::from_json(entry.at("poly"))});
    if (j.contains("discarded_audit"))
        for (const auto& entry : j.at("discarded_audit"))
            e.discarded.push_back({half_power_from_json(entry), Poly::from_json(entry.at("poly"))});
    if (j.contains("notes")) e.notes = j.at("notes").get<std::vector<std::string>>();
    return e;
}

}  // namespace sigx
