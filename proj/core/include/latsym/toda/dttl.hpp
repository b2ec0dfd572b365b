#pragma once

#include "latsym/field.hpp"
#include "latsym/scheme.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <vector>

namespace latsym {

/// Discrete-time Toda lattice parameters. The scheme's own index labels put
/// n on space and m on time; internally space comes first, so a field value
/// the scheme calls u_{n,m} is stored at (m_internal = n, n_internal = m).
template <class S>
struct DttlScheme {
    S alpha;
    S sigma_x;
    S sigma_t;

    DttlScheme(S alpha_, S sigma_x_, S sigma_t_)
        : alpha(std::move(alpha_)), sigma_x(std::move(sigma_x_)), sigma_t(std::move(sigma_t_)) {
        if (alpha == S(0)) throw std::invalid_argument("DttlScheme: alpha must be nonzero");
    }
};

/// The DTTL residual
///   e^{u_{n,m}-u_{n,m+1}} - e^{u_{n,m+1}-u_{n,m+2}}
///     - alpha^2 (e^{u_{n-1,m+2}-u_{n,m+1}} - e^{u_{n,m+1}-u_{n+1,m}})
/// in internal axes: slots (0,0), (0,1), (0,2), (-1,2), (1,0).
SchemeEquation<double> dttl_equation(double alpha);

/// Lattice equations complementing the DTTL (second differences vanish along
/// each equation's own axis, coordinates are flat along the other).
std::vector<SchemeEquation<double>> dttl_lattice_equations();

/// Residual field of the DTTL on u (double arithmetic).
template <class S = double>
ResidualSummary<double> dttl_residual(const Field<double>& u, double alpha) {
    return scheme_residual(dttl_equation(alpha), u);
}

/// Exact-zero decision for rational fields. Each stencil evaluation
/// contributes terms q * e^{p} with rational p, q; the residual vanishes
/// identically iff the coefficients of every distinct exponent cancel.
/// Distinct rational exponents give linearly independent exponentials, so
/// cancellation is both sufficient and (for honest inputs) necessary.
struct DttlExactCheck {
    bool identically_zero = true;
    long witness_m = 0, witness_n = 0; // internal axes; first failing base point
    double witness_value = 0.0;
};

DttlExactCheck dttl_residual_exact_zero(const Field<Rational>& u, const Rational& alpha_sq);

/// u_{n,m} = A n (n+m) + B m + C n + D on a window (internal axes), the
/// four-parameter translation-invariant solution family.
Field<Rational> dttl_translation_family(GridPtr<Rational> grid, const Rational& A,
                                        const Rational& B, const Rational& C,
                                        const Rational& D);

/// Five evaluation points of the translation-reduced equation and the k=1
/// collapse (see translation_reduce_dttl for the packaged result).
struct DttlTranslationPoints {
    double xi, xi_m1, xi_m2, xi_p1, xi_mix; // xi_{n,m}, xi_{n,m+1}, xi_{n,m+2}, xi_{n+1,m}, xi_{n-1,m+2}
};

DttlTranslationPoints dttl_translation_points(double a, double sigma_x, double sigma_t,
                                              long n, long m);

/// Five evaluation points of the dilation-delay equation at lattice point
/// (n, m): xi = sx st^beta n m^beta and the four shifted arguments.
struct DttlDilationPoints {
    double xi, xi1, xi2, xi3, xi4;
};

DttlDilationPoints dttl_dilation_points(double beta, double sigma_x, double sigma_t, long n,
                                        long m);

} // namespace latsym
