#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sigexpand/rational.hpp"
#include "sigexpand/symbol.hpp"

namespace sigx {

using json = nlohmann::ordered_json;

// Exponent vector, sparse. Exponents are nonzero; only SqrtT may carry a
// negative exponent and only transiently while expansions are assembled.
using Monomial = std::map<SymbolId, int>;

// Values for numeric evaluation. iu and sqrt_t are set by the caller from
// (u, t); the imaginary unit needs no entry.
struct Assignment {
    std::map<SymbolId, std::complex<double>> values;

    void set(const SymbolId& s, std::complex<double> v) { values[s] = v; }
    std::complex<double> get(const SymbolId& s) const;
};

// Multivariate polynomial with exact rational coefficients over the symbol
// universe. Normalized on every mutation: zero coefficients are dropped and
// c_1 * inv_c1 pairs cancel inside each monomial.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& c) { add_term(Monomial{}, c); }
    explicit Poly(long c) { add_term(Monomial{}, Rational(c)); }

    static Poly symbol(const SymbolId& s, int exp = 1) {
        Poly p;
        Monomial m;
        if (exp != 0) m[s] = exp;
        p.add_term(m, Rational(1));
        return p;
    }
    static Poly constant(const Rational& c) { return Poly(c); }

    void add_term(Monomial m, const Rational& c);
    void add(const Poly& other);
    void sub(const Poly& other);
    void scale(const Rational& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { add(o); return *this; }
    Poly& operator-=(const Poly& o) { sub(o); return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly pow(int n) const;

    bool empty() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const;
    size_t size() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool operator==(const Poly&) const = default;

    bool contains_kind(SymbolKind k) const;
    int min_exponent(const SymbolId& s) const;  // 0 when absent everywhere
    int max_exponent(const SymbolId& s) const;

    // Multiply by sqrt_t^delta; negative deltas may park negative exponents
    // until the expansion splitter pulls t powers back out.
    Poly shifted_sqrt_t(int delta) const;
    // Decompose as sum over k of sqrt_t^k * P_k with sqrt_t-free P_k.
    std::map<int, Poly> split_sqrt_t() const;

    std::complex<double> eval(const Assignment& a) const;

    std::string str() const;
    std::string latex() const;
    json to_json() const;
    static Poly from_json(const json& j);

  private:
    std::map<Monomial, Rational> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) {
    Poly q = p;
    q.scale(c);
    return q;
}

// Exact encoding of a complex number: re + im * i with the imaginary unit
// kept as a symbol, so numeric callback results can live inside polys.
Poly poly_from_complex(std::complex<double> z);

std::string monomial_latex(const Monomial& m);

}  // namespace sigx
