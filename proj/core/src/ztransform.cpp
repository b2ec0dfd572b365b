#include "latsym/heat/ztransform.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace latsym {

CoeffPolynomial dilation_symbol(const Rational& c) {
    if (!(c > 0)) throw std::invalid_argument("dilation_symbol: c must be positive");
    const Rational p = c / (c + 1);
    return CoeffPolynomial({p, -2 * p, Rational(1)});
}

Rational z_transform_I(long N, long n, const Rational& c) {
    if (n < 0) throw std::invalid_argument("z_transform_I: n must be nonnegative");
    if (N <= 0 || N - 1 > 2 * n) return Rational(0);
    return dilation_symbol(c).pow(static_cast<unsigned long>(n)).coeff(N - 1);
}

Rational z_transform_I_convolution(long N, long n, const Rational& c) {
    if (n < 0) throw std::invalid_argument("z_transform_I_convolution: n must be nonnegative");
    if (N <= 0 || N - 1 > 2 * n) return Rational(0);
    return dilation_symbol(c).pow_iterative(static_cast<unsigned long>(n)).coeff(N - 1);
}

double z_transform_I_quadrature(long N, long n, double c, int points) {
    if (!(c > 0)) throw std::invalid_argument("z_transform_I_quadrature: c must be positive");
    if (n < 0) throw std::invalid_argument("z_transform_I_quadrature: n must be nonnegative");
    // bandwidth of q(e^{i theta})^n e^{-i(N-1) theta} is 2n + |N-1|
    if (points <= 0) points = static_cast<int>(2 * n + std::labs(N - 1) + 8);
    const double s = 2.0 * c / (c + 1.0);
    const double p = c / (c + 1.0);
    const double two_pi = 2.0 * std::acos(-1.0);
    std::complex<double> acc = 0.0;
    for (int k = 0; k < points; ++k) {
        const double theta = two_pi * k / points;
        const std::complex<double> z = std::polar(1.0, theta);
        const std::complex<double> q = z * z - s * z + p;
        std::complex<double> qn = 1.0;
        for (long j = 0; j < n; ++j) qn *= q;
        acc += qn * std::polar(1.0, -theta * static_cast<double>(N - 1));
    }
    return acc.real() / points;
}

Rational i_closed_form(long N, long n, const Rational& c) {
    if (n < 0) throw std::invalid_argument("i_closed_form: n must be nonnegative");
    const Rational p = c / (c + 1);
    switch (N) {
        case -1: return Rational(0);
        case 0: return Rational(0);
        case 1: return rational_pow(p, n);
        case 2: return Rational(-2 * n) * rational_pow(p, n);
        case 3:
            if (n == 0) return Rational(0);
            return Rational(n) * rational_pow(p, n - 1) * ((2 * n - 1) * c + 1) / (c + 1);
        case 4:
            if (n <= 1) return Rational(0);
            return Rational(-2, 3) * n * (n - 1) * rational_pow(p, n - 1) *
                   ((2 * n - 1) * c + 3) / (c + 1);
        default:
            throw std::invalid_argument("i_closed_form: no closed form stored for N = " +
                                        std::to_string(N));
    }
}

Rational i3_variant_minus(long n, const Rational& c) {
    if (n <= 0) return Rational(0);
    const Rational p = c / (c + 1);
    return Rational(n) * rational_pow(p, n - 1) * ((2 * n - 1) * c - 1) / (c + 1);
}

Rational gamma_value(long n, const Rational& c, const Rational& gamma0) {
    return rational_pow(c + 1, n) * gamma0;
}

void verify_gamma_recurrence(long n, long N_lo, long N_hi, const Rational& c,
                             const Rational& gamma0) {
    if (n < 1) throw std::invalid_argument("verify_gamma_recurrence: n must be >= 1");
    const Rational gn = gamma_value(n, c, gamma0);
    const Rational gn1 = gamma_value(n - 1, c, gamma0);
    for (long N = N_lo; N <= N_hi; ++N) {
        const Rational lhs =
            gn * (Rational(N - 1) * z_transform_I(N, n, c) -
                  Rational(N - 2 * n - 2) * z_transform_I(N - 1, n, c));
        const Rational rhs = Rational(2 * n) * gn1 * z_transform_I(N - 2, n - 1, c);
        if (lhs != rhs)
            throw std::logic_error("gamma recurrence violated at N=" + std::to_string(N) +
                                   ", n=" + std::to_string(n) + ", c=" + to_fraction_string(c));
    }
}

Rational dilation_invariant_v(long m, long n, const Rational& c, const Rational& gamma0) {
    if (n < 0) throw std::invalid_argument("dilation_invariant_v: n must be nonnegative");
    return gamma_value(n, c, gamma0) * z_transform_I(m + 2 * n + 2, n, c);
}

Field<Rational> dilation_invariant_v_field(IndexWindow window, const Rational& c,
                                           const Rational& gamma0) {
    if (window.n_lo < 0)
        throw std::invalid_argument("dilation_invariant_v_field: window must have n >= 0");
    // One polynomial power per row; coefficient lookups are then O(1).
    auto grid = LatticeGrid<Rational>::uniform(window, Rational(1), Rational(1));
    const CoeffPolynomial q = dilation_symbol(c);
    std::vector<CoeffPolynomial> powers(static_cast<size_t>(window.n_hi + 1));
    for (long n = 0; n <= window.n_hi; ++n)
        powers[static_cast<size_t>(n)] = q.pow(static_cast<unsigned long>(n));
    return Field<Rational>::generate(grid, window, [&](long m, long n) {
        const long N = m + 2 * n + 2;
        if (N <= 0 || N - 1 > 2 * n) return Rational(0);
        return gamma_value(n, c, gamma0) * powers[static_cast<size_t>(n)].coeff(N - 1);
    });
}

Field<Rational> dilation_invariant_u_field(IndexWindow window, const Rational& c,
                                           const Rational& gamma0, const Rational& sigma_x,
                                           const Rational& u00) {
    IndexWindow vwin{std::min(window.m_lo, 0L) - 1, std::max(window.m_hi, 0L),
                     window.n_lo, window.n_hi};
    Field<Rational> v = dilation_invariant_v_field(vwin, c, gamma0);
    auto grid = LatticeGrid<Rational>::uniform(window, sigma_x, c * sigma_x * sigma_x);
    return Field<Rational>::generate(grid, window, [&](long m, long n) {
        // u_{m,n} = u00 + sigma_x * (sum of v over [0, m)), negated below zero
        Rational acc = u00;
        if (m > 0)
            for (long j = 0; j < m; ++j) acc += sigma_x * v.at(j, n);
        else
            for (long j = m; j < 0; ++j) acc -= sigma_x * v.at(j, n);
        return acc;
    });
}

} // namespace latsym
