#include "sigexpand/process.hpp"

#include <charconv>
#include <set>

#include "sigexpand/error.hpp"

namespace sigx {

namespace {

// Exact rational out of a JSON scalar. Doubles go through the shortest
// round-trip decimal so 0.2 really means 1/5, not the nearest binary64.
Rational json_rational(const json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    if (j.is_number_float()) {
        char buf[64];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, j.get<double>());
        if (ec != std::errc{}) throw ConfigError(std::string(what) + ": unprintable number");
        return parse_rational(std::string(buf, end));
    }
    throw ConfigError(std::string(what) + ": expected a number or rational string");
}

}  // namespace

void ProcessSpec::validate() const {
    cfg.validate();
    if (depth < 1) throw ConfigError("depth must be >= 1");
    if (integrability <= 0) throw ConfigError("integrability order N must be positive");
    for (const auto& [w, v] : coeffs) {
        if ((int)w.size() > depth)
            throw ConfigError("coefficient word " + w.str() + " exceeds depth " + std::to_string(depth));
        for (size_t i = 0; i < w.size(); ++i)
            if (!base_letter_ok(w[i]))
                throw ConfigError("letter " + std::to_string(w[i]) + " in " + w.str() +
                                  " outside base alphabet {-" + std::to_string(cfg.e) + ",...," +
                                  std::to_string(cfg.d) + "}");
        (void)v;
    }
    std::set<int> seen;
    for (const auto& nu : levy) {
        nu.validate();
        if (nu.j > cfg.e) throw ConfigError("measure for driver " + std::to_string(nu.j) + " but e = " + std::to_string(cfg.e));
        if (!seen.insert(nu.j).second) throw ConfigError("duplicate measure for driver " + std::to_string(nu.j));
    }
}

Word ProcessSpec::extend(const Word& base) const {
    std::vector<Letter> out;
    out.reserve(base.size());
    for (size_t i = 0; i < base.size(); ++i) {
        Letter l = base[i];
        if (!base_letter_ok(l))
            throw ConfigError("letter " + std::to_string(l) + " outside base alphabet");
        out.push_back(l < 0 ? letter_encode(-l, 1, cfg) : l);
    }
    return Word(std::move(out));
}

bool ProcessSpec::has_jump_content() const { return cfg.e > 0; }

void ProcessSpec::fill_assignment(Assignment& a) const {
    for (const auto& [w, v] : coeffs)
        if (!v.symbolic) a.set(SymbolId::characteristic(w), to_double(v.num));
    auto c1 = coeffs.find(Word({1}));
    if (c1 != coeffs.end() && !c1->second.symbolic && c1->second.num != 0)
        a.set(SymbolId::inv_c1(), 1.0 / to_double(c1->second.num));
    for (const auto& nu : levy) {
        a.set(SymbolId::intensity(nu.j), to_double(nu.lambda));
        for (int k = 1; k <= 2 * cfg.m + 2; ++k)
            a.set(SymbolId::jump_moment(nu.j, k), to_double(nu.moment(k)));
    }
}

double ProcessSpec::numeric_coeff(const Word& w) const {
    CoeffValue v = coeff(w);
    if (v.symbolic) throw EvalError("coefficient for " + w.str() + " is symbolic, numeric value required");
    return to_double(v.num);
}

json ProcessSpec::to_json() const {
    json j;
    j["d"] = cfg.d;
    j["e"] = cfg.e;
    j["m"] = cfg.m;
    j["n"] = depth;
    j["N"] = to_string(integrability);
    json cs = json::array();
    for (const auto& [w, v] : coeffs) {
        json entry;
        entry["word"] = json::array();
        for (size_t i = 0; i < w.size(); ++i) entry["word"].push_back(w[i]);
        if (v.symbolic)
            entry["value"] = symbol_name(SymbolId::characteristic(w));
        else
            entry["value"] = to_string(v.num);
        cs.push_back(entry);
    }
    j["coeffs"] = cs;
    json ms = json::array();
    for (const auto& nu : levy) {
        json entry;
        entry["j"] = nu.j;
        entry["lambda"] = to_string(nu.lambda);
        json atoms = json::array();
        for (const auto& at : nu.atoms) atoms.push_back({{"xi", to_string(at.xi)}, {"w", to_string(at.w)}});
        entry["atoms"] = atoms;
        ms.push_back(entry);
    }
    j["levy"] = ms;
    return j;
}

ProcessSpec ProcessSpec::from_json(const json& j) {
    ProcessSpec p;
    if (!j.is_object()) throw ConfigError("process spec: expected a JSON object");
    p.cfg.d = j.value("d", 1);
    p.cfg.e = j.value("e", 0);
    p.cfg.m = j.value("m", 1);
    p.depth = j.value("n", 1);
    if (j.contains("N")) p.integrability = json_rational(j.at("N"), "N");
    if (j.contains("coeffs")) {
        if (!j.at("coeffs").is_array()) throw ConfigError("coeffs: expected an array");
        for (const auto& entry : j.at("coeffs")) {
            if (!entry.contains("word") || !entry.at("word").is_array())
                throw ConfigError("coeffs entry: missing word array");
            std::vector<Letter> ls;
            for (const auto& l : entry.at("word")) {
                if (!l.is_number_integer()) throw ConfigError("coeffs entry: word letters must be integers");
                ls.push_back(l.get<int>());
            }
            Word w(std::move(ls));
            if (!entry.contains("value")) throw ConfigError("coeffs entry for " + w.str() + ": missing value");
            const json& val = entry.at("value");
            CoeffValue cv;
            if (val.is_string()) {
                std::string s = val.get<std::string>();
                if (s == "sym" || s == symbol_name(SymbolId::characteristic(w)))
                    cv = CoeffValue::sym();
                else
                    cv = CoeffValue::val(parse_rational(s));
            } else {
                cv = CoeffValue::val(json_rational(val, "coefficient value"));
            }
            if (p.coeffs.count(w)) throw ConfigError("duplicate coefficient for word " + w.str());
            p.coeffs.emplace(std::move(w), cv);
        }
    }
    if (j.contains("levy")) {
        if (!j.at("levy").is_array()) throw ConfigError("levy: expected an array");
        for (const auto& entry : j.at("levy")) {
            LevyAtomMeasure nu;
            nu.j = entry.value("j", 0);
            nu.lambda = json_rational(entry.at("lambda"), "lambda");
            if (!entry.contains("atoms") || !entry.at("atoms").is_array())
                throw ConfigError("measure entry: missing atoms array");
            for (const auto& at : entry.at("atoms"))
                nu.atoms.push_back({json_rational(at.at("xi"), "xi"), json_rational(at.at("w"), "w")});
            p.levy.push_back(std::move(nu));
        }
    }
    p.validate();
    return p;
}

}  // namespace sigx
