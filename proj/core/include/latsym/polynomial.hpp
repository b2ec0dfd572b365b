#pragma once

#include "latsym/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace latsym {

/// Dense univariate polynomial, coefficients in ascending degree order.
/// Normalized: no trailing zero coefficients (the zero polynomial has an
/// empty coefficient vector). Ring operations are exact for exact T.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    const std::vector<T>& coefficients() const { return c_; }

    /// Coefficient of z^k; zero outside the stored range (any k accepted).
    T coeff(long k) const {
        if (k < 0 || k >= static_cast<long>(c_.size())) return T(0);
        return c_[static_cast<size_t>(k)];
    }

    T eval(const T& z) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const T& s) {
        for (T& v : c_) v *= s;
        normalize();
        return *this;
    }

    /// p^e by repeated squaring (e >= 0).
    Polynomial pow(unsigned long e) const {
        Polynomial acc = constant(T(1));
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1UL) acc = acc * base;
            base = base * base;
            e >>= 1UL;
        }
        return acc;
    }

    /// p^e by iterated multiplication; an independent route used as a
    /// cross-check oracle against pow().
    Polynomial pow_iterative(unsigned long e) const {
        Polynomial acc = constant(T(1));
        for (unsigned long i = 0; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    /// Exact division by the monic linear factor (z - root); throws if the
    /// remainder is nonzero.
    Polynomial deflate(const T& root) const {
        if (is_zero()) throw std::invalid_argument("deflate: zero polynomial");
        std::vector<T> q(c_.size() - 1, T(0));
        T carry = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = c_[i] + carry * root;
        }
        if (!(carry == T(0))) throw std::invalid_argument("deflate: not a root");
        return Polynomial(std::move(q));
    }

    std::string to_string(const std::string& var = "z") const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Exact-rational polynomial used by the residue / Z-transform oracles.
using CoeffPolynomial = Polynomial<Rational>;

template <class T>
std::string Polynomial<T>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == T(0)) continue;
        std::string coeff;
        if constexpr (std::is_same_v<T, Rational>) coeff = to_fraction_string(c_[i]);
        else coeff = std::to_string(c_[i]);
        if (!out.empty()) {
            if (!coeff.empty() && coeff[0] == '-') {
                out += " - ";
                coeff = coeff.substr(1);
            } else {
                out += " + ";
            }
        }
        if (i == 0) out += coeff;
        else if (coeff == "1") out += var + (i == 1 ? "" : "^" + std::to_string(i));
        else if (coeff == "-1") out += "-" + var + (i == 1 ? "" : "^" + std::to_string(i));
        else out += coeff + "*" + var + (i == 1 ? "" : "^" + std::to_string(i));
    }
    return out;
}

/// Real roots of p inside (lo, hi), found by sign-change scan plus bisection.
/// Intended for the low-degree root conditions of the reductions; multiple
/// roots that do not change sign will not be detected.
std::vector<double> real_roots_in(const Polynomial<double>& p, double lo, double hi,
                                  int scan_points = 4096, double tol = 1e-13);

} // namespace latsym
