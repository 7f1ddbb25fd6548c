#include "sigexpand/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sigx {

namespace {

const SymbolId kC1 = SymbolId::characteristic(Word{1});
const SymbolId kInv = SymbolId::inv_c1();

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [s, e] : m) d += std::abs(e);
    return d;
}

// Graded lexicographic order used for rendering.
bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

int exponent_of(const Monomial& m, const SymbolId& s) {
    auto it = m.find(s);
    return it == m.end() ? 0 : it->second;
}

std::string rational_latex(const Rational& r) {
    const Int num = numerator(r);
    const Int den = denominator(r);
    std::string sign = num < 0 ? "-" : "";
    const Int n = abs(num);
    if (den == 1) return sign + n.str();
    return sign + "\\frac{" + n.str() + "}{" + den.str() + "}";
}

}  // namespace

std::string symbol_name(const SymbolId& s) {
    switch (s.kind) {
        case SymbolKind::Characteristic: {
            if (s.word.empty()) return "x0";
            bool compact = true;
            for (Letter l : s.word.letters())
                if (l < 0 || l > 9) compact = false;
            if (compact) {
                std::string n = "c_";
                for (Letter l : s.word.letters()) n += static_cast<char>('0' + l);
                return n;
            }
            std::string n = "c(";
            for (int i = 0; i < s.word.size(); ++i) {
                if (i) n += ",";
                n += std::to_string(s.word[i]);
            }
            return n + ")";
        }
        case SymbolKind::InvC1: return "inv_c1";
        case SymbolKind::Intensity: return "lambda_" + std::to_string(s.j);
        case SymbolKind::JumpMoment: return "m_" + std::to_string(s.j) + "_" + std::to_string(s.k);
        case SymbolKind::JumpAtom: return "E_" + std::to_string(s.j) + "_" + std::to_string(s.k);
        case SymbolKind::ImagUnit: return "i";
        case SymbolKind::Iu: return "iu";
        case SymbolKind::SqrtT: return "sqrt_t";
    }
    throw ConfigError("unknown symbol kind");
}

SymbolId symbol_from_name(const std::string& name) {
    if (name == "x0") return SymbolId::characteristic(Word{});
    if (name == "inv_c1") return SymbolId::inv_c1();
    if (name == "i") return SymbolId::imag_unit();
    if (name == "iu") return SymbolId::iu();
    if (name == "sqrt_t") return SymbolId::sqrt_t();
    auto parse_int = [&](const std::string& part) {
        try {
            return std::stoi(part);
        } catch (const std::exception&) {
            throw ConfigError("bad symbol name \"" + name + "\"");
        }
    };
    if (name.rfind("lambda_", 0) == 0) return SymbolId::intensity(parse_int(name.substr(7)));
    if (name.rfind("m_", 0) == 0 || name.rfind("E_", 0) == 0) {
        const auto sep = name.find('_', 2);
        if (sep == std::string::npos) throw ConfigError("bad symbol name \"" + name + "\"");
        const int j = parse_int(name.substr(2, sep - 2));
        const int k = parse_int(name.substr(sep + 1));
        return name[0] == 'm' ? SymbolId::jump_moment(j, k) : SymbolId::jump_atom(j, k);
    }
    if (name.rfind("c(", 0) == 0 && name.back() == ')') {
        std::vector<Letter> ls;
        std::string body = name.substr(2, name.size() - 3);
        std::istringstream is(body);
        std::string part;
        while (std::getline(is, part, ',')) ls.push_back(parse_int(part));
        return SymbolId::characteristic(Word(std::move(ls)));
    }
    if (name.rfind("c_", 0) == 0) {
        std::vector<Letter> ls;
        for (size_t i = 2; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw ConfigError("bad symbol name \"" + name + "\"");
            ls.push_back(name[i] - '0');
        }
        if (ls.empty()) throw ConfigError("bad symbol name \"" + name + "\"");
        return SymbolId::characteristic(Word(std::move(ls)));
    }
    throw ConfigError("unknown symbol \"" + name + "\"");
}

std::string symbol_latex(const SymbolId& s) {
    switch (s.kind) {
        case SymbolKind::Characteristic: {
            if (s.word.empty()) return "X_0";
            std::string sub;
            bool compact = true;
            for (Letter l : s.word.letters())
                if (l < 0 || l > 9) compact = false;
            for (int i = 0; i < s.word.size(); ++i) {
                if (i && !compact) sub += ",";
                sub += std::to_string(s.word[i]);
            }
            return "c_{" + sub + "}";
        }
        case SymbolKind::InvC1: return "c_{1}^{-1}";
        case SymbolKind::Intensity: return "\\lambda_{" + std::to_string(s.j) + "}";
        case SymbolKind::JumpMoment:
            return "m_{" + std::to_string(s.j) + "," + std::to_string(s.k) + "}";
        case SymbolKind::JumpAtom:
            return "E_{" + std::to_string(s.j) + "," + std::to_string(s.k) + "}";
        case SymbolKind::ImagUnit: return "i";
        case SymbolKind::Iu: return "i u";
        case SymbolKind::SqrtT: return "\\sqrt{t}";
    }
    throw ConfigError("unknown symbol kind");
}

std::complex<double> Assignment::get(const SymbolId& s) const {
    if (s.kind == SymbolKind::ImagUnit) return {0.0, 1.0};
    auto it = values.find(s);
    if (it == values.end())
        throw EvalError("no value assigned to symbol " + symbol_name(s));
    return it->second;
}

void Poly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else
            ++it;
    }
    // c_1 * inv_c1 cancels; exponents here are nonnegative for both.
    auto i1 = m.find(kC1);
    auto i2 = m.find(kInv);
    if (i1 != m.end() && i2 != m.end()) {
        const int cancel = std::min(i1->second, i2->second);
        if ((i1->second -= cancel) == 0) m.erase(i1);
        i2 = m.find(kInv);
        if ((i2->second -= cancel) == 0) m.erase(i2);
    }
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::add(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
}

void Poly::sub(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
}

void Poly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return;
    }
    for (auto& [m, v] : terms_) v *= c;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r.add(o);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r.sub(o);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [s, e] : mb) m[s] += e;
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw ConfigError("negative polynomial power");
    Poly r(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    throw EvalError("polynomial is not constant: " + str());
}

bool Poly::contains_kind(SymbolKind k) const {
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m)
            if (s.kind == k) return true;
    return false;
}

int Poly::min_exponent(const SymbolId& s) const {
    int mn = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const int e = exponent_of(m, s);
        mn = first ? e : std::min(mn, e);
        first = false;
    }
    return mn;
}

int Poly::max_exponent(const SymbolId& s) const {
    int mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, exponent_of(m, s));
    return mx;
}

Poly Poly::shifted_sqrt_t(int delta) const {
    if (delta == 0) return *this;
    Poly r;
    const SymbolId st = SymbolId::sqrt_t();
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        mm[st] += delta;
        r.add_term(std::move(mm), c);
    }
    return r;
}

std::map<int, Poly> Poly::split_sqrt_t() const {
    std::map<int, Poly> out;
    const SymbolId st = SymbolId::sqrt_t();
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        int e = 0;
        if (auto it = mm.find(st); it != mm.end()) {
            e = it->second;
            mm.erase(it);
        }
        out[e].add_term(std::move(mm), c);
    }
    return out;
}

std::complex<double> Poly::eval(const Assignment& a) const {
    std::complex<double> sum = 0.0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> v = to_double(c);
        for (const auto& [s, e] : m) {
            const std::complex<double> base = a.get(s);
            std::complex<double> p = 1.0;
            for (int i = 0; i < std::abs(e); ++i) p *= base;
            v *= e >= 0 ? p : 1.0 / p;
        }
        sum += v;
    }
    return sum;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += to_string(c);
        for (const auto& [sym, e] : m) {
            s += "*" + symbol_name(sym);
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

std::string monomial_latex(const Monomial& m) {
    std::string num, den, tail;
    for (const auto& [s, e] : m) {
        if (s.kind == SymbolKind::Iu) {
            tail += e == 1 ? std::string(" i u") : " (i u)^{" + std::to_string(e) + "}";
            continue;
        }
        if (s.kind == SymbolKind::SqrtT) {
            if (e == 1)
                tail += " \\sqrt{t}";
            else if (e == 2)
                tail += " t";
            else if (e % 2 == 0)
                tail += " t^{" + std::to_string(e / 2) + "}";
            else
                tail += " t^{" + std::to_string(e) + "/2}";
            continue;
        }
        if (s.kind == SymbolKind::InvC1) {
            den += e == 1 ? "c_{1}" : "c_{1}^{" + std::to_string(e) + "}";
            continue;
        }
        std::string f = symbol_latex(s);
        if (e != 1) f += "^{" + std::to_string(e) + "}";
        num += (num.empty() ? "" : " ") + f;
    }
    std::string head;
    if (!den.empty())
        head = "\\frac{" + (num.empty() ? "1" : num) + "}{" + den + "}";
    else
        head = num;
    std::string out = head + tail;
    if (!out.empty() && out.front() == ' ') out.erase(out.begin());
    return out;
}

std::string Poly::latex() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
    const SymbolId st = SymbolId::sqrt_t();
    const SymbolId iu = SymbolId::iu();
    std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
        const int ta = exponent_of(a.first, st), tb = exponent_of(b.first, st);
        if (ta != tb) return ta < tb;
        const int ua = exponent_of(a.first, iu), ub = exponent_of(b.first, iu);
        if (ua != ub) return ua < ub;
        return graded_lex_less(a.first, b.first);
    });
    std::string out;
    for (const auto& [m, c] : sorted) {
        const std::string body = monomial_latex(m);
        std::string coeff = rational_latex(c);
        if (!body.empty() && (coeff == "1" || coeff == "-1")) coeff = coeff == "1" ? "" : "-";
        std::string term = coeff.empty() ? body : (body.empty() ? coeff : coeff + " " + body);
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

json Poly::to_json() const {
    std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return graded_lex_less(a.first, b.first); });
    json arr = json::array();
    for (const auto& [m, c] : sorted) {
        json mono = json::object();
        for (const auto& [s, e] : m) mono[symbol_name(s)] = e;
        arr.push_back(json{{"coeff", to_string(c)}, {"monomial", std::move(mono)}});
    }
    return arr;
}

Poly Poly::from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("polynomial JSON must be an array of terms");
    Poly p;
    for (const auto& term : j) {
        Monomial m;
        if (term.contains("monomial"))
            for (const auto& [name, e] : term.at("monomial").items())
                m[symbol_from_name(name)] = e.get<int>();
        p.add_term(std::move(m), parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

Poly poly_from_complex(std::complex<double> z) {
    Poly p = Poly::constant(rational_from_double(z.real()));
    p += rational_from_double(z.imag()) * Poly::symbol(SymbolId::imag_unit());
    return p;
}

}  // namespace sigx
