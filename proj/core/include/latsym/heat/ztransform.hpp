#pragma once

#include "latsym/field.hpp"
#include "latsym/polynomial.hpp"

namespace latsym {

/// q(z) = (z - z1)(z - z2) = z^2 - (2c/(c+1)) z + c/(c+1), the quadratic whose
/// complex roots z_{1,2} = (c +- i sqrt(c))/(c+1) drive the self-similar
/// generating function. Exact for rational c.
CoeffPolynomial dilation_symbol(const Rational& c);

/// I_{N,n} = (1/2 pi i) contour integral of (z-z1)^n (z-z2)^n z^{-N} dz over
/// the unit circle = coefficient of z^{N-1} in q(z)^n. Total on N <= 0 and
/// N-1 > 2n (returns 0 there). Computed by exact polynomial power (repeated
/// squaring).
Rational z_transform_I(long N, long n, const Rational& c);

/// Independent oracle: same coefficient via iterated convolution.
Rational z_transform_I_convolution(long N, long n, const Rational& c);

/// Numeric cross-check: trapezoid quadrature of the contour integral on
/// |z| = 1. The integrand is a Laurent polynomial, so the rule is exact up
/// to round-off once the point count clears the bandwidth.
double z_transform_I_quadrature(long N, long n, double c, int points = 0);

/// Closed forms of I_{N,n} for N in [-1, 4]; throws outside that range.
/// The N = 3 entry is the sign-corrected form n p^{n-1} ((2n-1)c + 1)/(c+1),
/// p = c/(c+1): the variant with "-1" in place of "+1" contradicts both the
/// coefficient-extraction definition (already at n = 1) and the gamma
/// recurrence, and is kept separately as i3_variant_minus for tests that
/// demonstrate the discrepancy.
Rational i_closed_form(long N, long n, const Rational& c);
Rational i3_variant_minus(long n, const Rational& c);

/// gamma_n = (c+1)^n gamma_0 (any integer n).
Rational gamma_value(long n, const Rational& c, const Rational& gamma0);

/// Verifies gamma_n [(N-1) I_{N,n} - (N-2n-2) I_{N-1,n}] = 2n gamma_{n-1} I_{N-2,n-1}
/// exactly for every N in [N_lo, N_hi]; throws std::logic_error with the
/// offending (N, n) on any violation.
void verify_gamma_recurrence(long n, long N_lo, long N_hi, const Rational& c,
                             const Rational& gamma0);

/// v_{m,n} = gamma0 (c+1)^n I_{m+2n+2, n} (Eq-level: the m-variation of the
/// dilation-invariant solution). Zero whenever m + 2n + 2 <= 0 or m >= 0.
Rational dilation_invariant_v(long m, long n, const Rational& c, const Rational& gamma0);

/// The v values assembled as a field on a uniform unit-spacing index lattice.
Field<Rational> dilation_invariant_v_field(IndexWindow window, const Rational& c,
                                           const Rational& gamma0);

/// u reconstructed from v by m-summation (u_{m+1,n} = u_{m,n} + sigma_x v_{m,n})
/// anchored at u_{0,n} = u00; satisfies the invariance condition exactly and,
/// through the reduced equation, the heat scheme with ratio c.
Field<Rational> dilation_invariant_u_field(IndexWindow window, const Rational& c,
                                           const Rational& gamma0, const Rational& sigma_x,
                                           const Rational& u00);

/// Residual of the v-form invariance condition
///   2n (v_{m,n} - v_{m,n-1}) + (m+1) v_{m,n} - m v_{m-1,n}
/// over the valid window (coefficients are the integer lattice labels).
template <class S>
Field<S> dilation_invariance_vform_residual(const Field<S>& v) {
    static const std::vector<Offset> offs{{0, 0}, {0, -1}, {-1, 0}};
    IndexWindow w = v.window().shrunk_for(offs);
    if (w.empty())
        throw std::invalid_argument("dilation_invariance_vform_residual: window too small");
    return Field<S>::generate(v.grid(), w, [&](long m, long n) {
        const S two_n = scalar_traits<S>::from_long(2 * n);
        const S mm = scalar_traits<S>::from_long(m);
        return two_n * (v.at(m, n) - v.at(m, n - 1)) + (mm + S(1)) * v.at(m, n) -
               mm * v.at(m - 1, n);
    });
}

} // namespace latsym
