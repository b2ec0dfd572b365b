#include "latsym/toda/dttl.hpp"

#include <cmath>

namespace latsym {

SchemeEquation<double> dttl_equation(double alpha) {
    const double a2 = alpha * alpha;
    // slots: 0 -> (0,0) = u_{n,m}; 1 -> (0,1) = u_{n,m+1}; 2 -> (0,2) = u_{n,m+2};
    //        3 -> (-1,2) = u_{n-1,m+2}; 4 -> (1,0) = u_{n+1,m}
    std::vector<Offset> offs{{0, 0}, {0, 1}, {0, 2}, {-1, 2}, {1, 0}};
    SchemeEquation<double>::Residual res = [a2](std::span<const PointValue<double>> s) {
        const double e1 = std::exp(s[0].u - s[1].u);
        const double e2 = std::exp(s[1].u - s[2].u);
        const double e3 = std::exp(s[3].u - s[1].u);
        const double e4 = std::exp(s[1].u - s[4].u);
        return e1 - e2 - a2 * (e3 - e4);
    };
    SchemeEquation<double>::Partials parts = [a2](std::span<const PointValue<double>> s) {
        const double e1 = std::exp(s[0].u - s[1].u);
        const double e2 = std::exp(s[1].u - s[2].u);
        const double e3 = std::exp(s[3].u - s[1].u);
        const double e4 = std::exp(s[1].u - s[4].u);
        std::vector<SlotPartials<double>> p(s.size(), SlotPartials<double>{0, 0, 0});
        p[0].d_u = e1;
        p[1].d_u = -e1 - e2 + a2 * e3 - a2 * e4;
        p[2].d_u = e2;
        p[3].d_u = -a2 * e3;
        p[4].d_u = a2 * e4;
        return p;
    };
    return SchemeEquation<double>("dttl", std::move(offs), std::move(res), std::move(parts));
}

std::vector<SchemeEquation<double>> dttl_lattice_equations() {
    std::vector<SchemeEquation<double>> eqs;
    {
        std::vector<Offset> offs{{-1, 0}, {0, 0}, {1, 0}};
        eqs.emplace_back(
            "lattice:x-affine",
            offs,
            [](std::span<const PointValue<double>> s) { return s[2].x - 2.0 * s[1].x + s[0].x; },
            [](std::span<const PointValue<double>> s) {
                std::vector<SlotPartials<double>> p(s.size(), SlotPartials<double>{0, 0, 0});
                p[0].d_x = 1.0;
                p[1].d_x = -2.0;
                p[2].d_x = 1.0;
                return p;
            });
    }
    {
        std::vector<Offset> offs{{0, 0}, {0, 1}};
        eqs.emplace_back(
            "lattice:x-flat-in-time",
            offs,
            [](std::span<const PointValue<double>> s) { return s[1].x - s[0].x; },
            [](std::span<const PointValue<double>> s) {
                std::vector<SlotPartials<double>> p(s.size(), SlotPartials<double>{0, 0, 0});
                p[0].d_x = -1.0;
                p[1].d_x = 1.0;
                return p;
            });
    }
    {
        std::vector<Offset> offs{{0, -1}, {0, 0}, {0, 1}};
        eqs.emplace_back(
            "lattice:t-affine",
            offs,
            [](std::span<const PointValue<double>> s) { return s[2].t - 2.0 * s[1].t + s[0].t; },
            [](std::span<const PointValue<double>> s) {
                std::vector<SlotPartials<double>> p(s.size(), SlotPartials<double>{0, 0, 0});
                p[0].d_t = 1.0;
                p[1].d_t = -2.0;
                p[2].d_t = 1.0;
                return p;
            });
    }
    {
        std::vector<Offset> offs{{0, 0}, {1, 0}};
        eqs.emplace_back(
            "lattice:t-flat-in-space",
            offs,
            [](std::span<const PointValue<double>> s) { return s[1].t - s[0].t; },
            [](std::span<const PointValue<double>> s) {
                std::vector<SlotPartials<double>> p(s.size(), SlotPartials<double>{0, 0, 0});
                p[0].d_t = -1.0;
                p[1].d_t = 1.0;
                return p;
            });
    }
    return eqs;
}

DttlExactCheck dttl_residual_exact_zero(const Field<Rational>& u, const Rational& alpha_sq) {
    static const std::vector<Offset> offs{{0, 0}, {0, 1}, {0, 2}, {-1, 2}, {1, 0}};
    const IndexWindow w = u.window().shrunk_for(offs);
    if (w.empty())
        throw std::invalid_argument("dttl_residual_exact_zero: stencil exits window");
    DttlExactCheck out;
    for (long n = w.n_lo; n <= w.n_hi && out.identically_zero; ++n) {
        for (long m = w.m_lo; m <= w.m_hi && out.identically_zero; ++m) {
            // exponent -> accumulated coefficient
            std::map<Rational, Rational> groups;
            groups[u.at(m, n) - u.at(m, n + 1)] += 1;
            groups[u.at(m, n + 1) - u.at(m, n + 2)] += -1;
            groups[u.at(m - 1, n + 2) - u.at(m, n + 1)] += -alpha_sq;
            groups[u.at(m, n + 1) - u.at(m + 1, n)] += alpha_sq;
            for (const auto& [expo, coeff] : groups) {
                if (coeff != 0) {
                    out.identically_zero = false;
                    out.witness_m = m;
                    out.witness_n = n;
                    double val = 0.0;
                    for (const auto& [e2, c2] : groups)
                        val += to_double(c2) * std::exp(to_double(e2));
                    out.witness_value = val;
                    break;
                }
            }
        }
    }
    return out;
}

Field<Rational> dttl_translation_family(GridPtr<Rational> grid, const Rational& A,
                                        const Rational& B, const Rational& C,
                                        const Rational& D) {
    // internal m = scheme's spatial n, internal n = scheme's temporal m
    return Field<Rational>::generate(grid, [&](long m, long n) {
        const Rational pn(m), pm(n);
        return A * pn * (pn + pm) + B * pm + C * pn + D;
    });
}

DttlTranslationPoints dttl_translation_points(double a, double sigma_x, double sigma_t, long n,
                                              long m) {
    const double xi = sigma_x * n + a * sigma_t * m;
    return DttlTranslationPoints{
        xi,
        xi + a * sigma_t,
        xi + 2.0 * a * sigma_t,
        xi + sigma_x,
        xi - sigma_x + 2.0 * a * sigma_t,
    };
}

DttlDilationPoints dttl_dilation_points(double beta, double sigma_x, double sigma_t, long n,
                                        long m) {
    if (m == 0) throw std::invalid_argument("dttl_dilation_points: m = 0 degenerates xi");
    const double base = sigma_x * std::pow(sigma_t, beta);
    const double xi = base * n * std::pow(m, beta);
    const double r1 = std::pow((m + 1.0) / m, beta);
    const double r2 = std::pow((m + 2.0) / m, beta);
    return DttlDilationPoints{
        xi,
        xi * r1,
        xi * r2,
        xi * r2 - base * std::pow(m + 2.0, beta),
        xi + base * std::pow(static_cast<double>(m), beta),
    };
}

} // namespace latsym
