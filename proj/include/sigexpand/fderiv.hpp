#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sigexpand/error.hpp"
#include "sigexpand/poly.hpp"

namespace sigx {

// Supplies f and its derivatives to the generator-route expansions. Symbolic
// providers give exact Poly values at a Poly argument; numeric ones only give
// complex values at complex arguments (and force the whole expansion numeric).
class FDerivatives {
  public:
    virtual ~FDerivatives() = default;
    virtual bool symbolic() const = 0;
    virtual Poly deriv_poly(int k, const Poly& x) const {
        (void)k; (void)x;
        throw EvalError("derivative provider is numeric only");
    }
    virtual std::complex<double> deriv_num(int k, std::complex<double> x) const {
        (void)k; (void)x;
        throw EvalError("derivative provider is symbolic only");
    }
};

// f(x) = sum_j a_j x^j with exact coefficients.
class PolynomialF : public FDerivatives {
  public:
    explicit PolynomialF(std::vector<Rational> coeffs) : a_(std::move(coeffs)) {}
    static PolynomialF monomial(int k) {
        std::vector<Rational> a(k + 1, Rational(0));
        a[k] = 1;
        return PolynomialF(std::move(a));
    }

    bool symbolic() const override { return true; }

    Poly deriv_poly(int k, const Poly& x) const override {
        Poly out;
        for (int j = k; j < (int)a_.size(); ++j) {
            if (a_[j] == 0) continue;
            Rational c = a_[j] * falling(j, k);
            out += c * x.pow(j - k);
        }
        return out;
    }

    std::complex<double> deriv_num(int k, std::complex<double> x) const override {
        std::complex<double> out = 0.0;
        for (int j = k; j < (int)a_.size(); ++j) {
            if (a_[j] == 0) continue;
            out += to_double(a_[j] * falling(j, k)) * std::pow(x, j - k);
        }
        return out;
    }

  private:
    static Rational falling(int j, int k) {
        Int f = 1;
        for (int i = 0; i < k; ++i) f *= (j - i);
        return Rational(f);
    }
    std::vector<Rational> a_;
};

// f(x) = exp(i u (x - x0)^2). Every derivative at the center is known in
// closed form: odd ones vanish, f^(2k)(x0) = (iu)^k (2k)!/k!. Off-center
// arguments are refused; the expansions only ever ask at the start value.
class SquaredPhaseF : public FDerivatives {
  public:
    explicit SquaredPhaseF(Poly center) : center_(std::move(center)) {}

    bool symbolic() const override { return true; }

    Poly deriv_poly(int k, const Poly& x) const override {
        if (!(x == center_))
            throw ConfigError("squared-phase derivatives supported at the center argument only");
        if (k % 2 != 0) return Poly();
        int h = k / 2;
        Rational c = Rational(factorial(k)) / Rational(factorial(h));
        return c * Poly::symbol(SymbolId::iu(), h);
    }

  private:
    Poly center_;
};

// Arbitrary f via a user callback (k, x) -> f^(k)(x).
class CallbackF : public FDerivatives {
  public:
    using Fn = std::function<std::complex<double>(int, std::complex<double>)>;
    explicit CallbackF(Fn fn) : fn_(std::move(fn)) {}

    bool symbolic() const override { return false; }
    std::complex<double> deriv_num(int k, std::complex<double> x) const override { return fn_(k, x); }

  private:
    Fn fn_;
};

}  // namespace sigx
