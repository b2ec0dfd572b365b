#pragma once

#include "latsym/field.hpp"
#include "latsym/scheme.hpp"

#include <span>
#include <vector>

namespace latsym {

enum class HeatVariant { forward, point_form };

/// Discrete heat scheme u_{m,n+1} - u_{m,n} = c (u_{m+2,n} - 2u_{m+1,n} + u_{m,n})
/// on a uniform lattice with c = sigma_t / sigma_x^2.
template <class S>
struct HeatScheme {
    S c;
    S sigma_x;
    S sigma_t;
    HeatVariant variant = HeatVariant::forward;

    HeatScheme(S c_, S sigma_x_, S sigma_t_, HeatVariant v = HeatVariant::forward)
        : c(std::move(c_)), sigma_x(std::move(sigma_x_)), sigma_t(std::move(sigma_t_)),
          variant(v) {
        if (!(c > S(0)) || !(sigma_x > S(0)) || !(sigma_t > S(0)))
            throw std::invalid_argument("HeatScheme: parameters must be positive");
        const S lhs = c * sigma_x * sigma_x;
        if constexpr (scalar_traits<S>::exact) {
            if (lhs != sigma_t)
                throw std::invalid_argument("HeatScheme: c*sigma_x^2 != sigma_t");
        } else {
            if (std::abs(lhs - sigma_t) > 1e-14 * std::abs(sigma_t))
                throw std::invalid_argument("HeatScheme: c*sigma_x^2 != sigma_t beyond 1e-14");
        }
    }

    static HeatScheme from_spacings(S sigma_x_, S sigma_t_) {
        return HeatScheme(sigma_t_ / (sigma_x_ * sigma_x_), sigma_x_, sigma_t_);
    }
};

/// The evolution equation on the fixed uniform lattice, with analytic partials.
template <class S>
SchemeEquation<S> heat_equation(S c) {
    const S two = scalar_traits<S>::from_long(2);
    std::vector<Offset> offs{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    typename SchemeEquation<S>::Residual res = [c, two](std::span<const PointValue<S>> s) {
        // slots: (0,0), (1,0), (2,0), (0,1)
        return s[3].u - s[0].u - c * (s[2].u - two * s[1].u + s[0].u);
    };
    typename SchemeEquation<S>::Partials parts =
        [c, two](std::span<const PointValue<S>> s) {
            std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
            p[0].d_u = -S(1) - c;
            p[1].d_u = two * c;
            p[2].d_u = -c;
            p[3].d_u = S(1);
            return p;
        };
    return SchemeEquation<S>("heat", std::move(offs), std::move(res), std::move(parts));
}

/// Uniform-lattice equations paired with the forward heat scheme:
/// x_{m+1,n}-x_{m,n}=sigma_x, t_{m+1,n}=t_{m,n}, x_{m,n+1}=x_{m,n},
/// t_{m,n+1}-t_{m,n}=sigma_t.
template <class S>
std::vector<SchemeEquation<S>> heat_fixed_lattice_equations(S sigma_x, S sigma_t) {
    std::vector<SchemeEquation<S>> eqs;
    {
        std::vector<Offset> offs{{0, 0}, {1, 0}};
        eqs.emplace_back(
            "lattice:x-step",
            offs,
            [sigma_x](std::span<const PointValue<S>> s) { return s[1].x - s[0].x - sigma_x; },
            [](std::span<const PointValue<S>> s) {
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_x = S(-1);
                p[1].d_x = S(1);
                return p;
            });
        eqs.emplace_back(
            "lattice:t-flat-in-m",
            offs,
            [](std::span<const PointValue<S>> s) { return s[1].t - s[0].t; },
            [](std::span<const PointValue<S>> s) {
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_t = S(-1);
                p[1].d_t = S(1);
                return p;
            });
    }
    {
        std::vector<Offset> offs{{0, 0}, {0, 1}};
        eqs.emplace_back(
            "lattice:x-flat-in-n",
            offs,
            [](std::span<const PointValue<S>> s) { return s[1].x - s[0].x; },
            [](std::span<const PointValue<S>> s) {
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_x = S(-1);
                p[1].d_x = S(1);
                return p;
            });
        eqs.emplace_back(
            "lattice:t-step",
            offs,
            [sigma_t](std::span<const PointValue<S>> s) { return s[1].t - s[0].t - sigma_t; },
            [](std::span<const PointValue<S>> s) {
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_t = S(-1);
                p[1].d_t = S(1);
                return p;
            });
    }
    return eqs;
}

/// The heat difference system in point form: the divided-difference equation
/// together with the four lattice equations whose solution is
/// x = sigma_x m + x0, t = c sigma_x^2 n + t0.
template <class S>
std::vector<SchemeEquation<S>> heat_point_system(S c) {
    const S two = scalar_traits<S>::from_long(2);
    std::vector<SchemeEquation<S>> eqs;
    {
        // slots: P=(0,0), P_x1=(1,0), P_x2=(2,0), P_t=(0,1)
        std::vector<Offset> offs{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
        eqs.emplace_back(
            "heat:point-form",
            offs,
            [two](std::span<const PointValue<S>> s) {
                const S dt = s[3].t - s[0].t;
                const S dx = s[1].x - s[0].x;
                return (s[3].u - s[0].u) / dt -
                       (s[2].u - two * s[1].u + s[0].u) / (dx * dx);
            },
            [two](std::span<const PointValue<S>> s) {
                const S dt = s[3].t - s[0].t;
                const S dx = s[1].x - s[0].x;
                const S du_t = s[3].u - s[0].u;
                const S du_xx = s[2].u - two * s[1].u + s[0].u;
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_u = -S(1) / dt - S(1) / (dx * dx);
                p[1].d_u = two / (dx * dx);
                p[2].d_u = -S(1) / (dx * dx);
                p[3].d_u = S(1) / dt;
                p[0].d_t = du_t / (dt * dt);
                p[3].d_t = -du_t / (dt * dt);
                p[0].d_x = -two * du_xx / (dx * dx * dx);
                p[1].d_x = two * du_xx / (dx * dx * dx);
                return p;
            });
    }
    {
        std::vector<Offset> offs{{0, 0}, {1, 0}, {2, 0}};
        eqs.emplace_back(
            "lattice:x-affine",
            offs,
            [two](std::span<const PointValue<S>> s) { return s[2].x - two * s[1].x + s[0].x; },
            [two](std::span<const PointValue<S>> s) {
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_x = S(1);
                p[1].d_x = -two;
                p[2].d_x = S(1);
                return p;
            });
    }
    {
        std::vector<Offset> offs{{0, 0}, {0, 1}};
        eqs.emplace_back(
            "lattice:x-flat-in-n",
            offs,
            [](std::span<const PointValue<S>> s) { return s[1].x - s[0].x; },
            [](std::span<const PointValue<S>> s) {
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_x = S(-1);
                p[1].d_x = S(1);
                return p;
            });
    }
    {
        std::vector<Offset> offs{{0, 0}, {1, 0}};
        eqs.emplace_back(
            "lattice:t-flat-in-m",
            offs,
            [](std::span<const PointValue<S>> s) { return s[1].t - s[0].t; },
            [](std::span<const PointValue<S>> s) {
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_t = S(-1);
                p[1].d_t = S(1);
                return p;
            });
    }
    {
        // t_{m,n+1} - t_{m,n} = c (x_{m+1,n} - x_{m,n})^2
        std::vector<Offset> offs{{0, 0}, {1, 0}, {0, 1}};
        eqs.emplace_back(
            "lattice:t-step-matches-x",
            offs,
            [c, two](std::span<const PointValue<S>> s) {
                const S dx = s[1].x - s[0].x;
                return s[2].t - s[0].t - c * dx * dx;
            },
            [c, two](std::span<const PointValue<S>> s) {
                const S dx = s[1].x - s[0].x;
                std::vector<SlotPartials<S>> p(s.size(), SlotPartials<S>{S(0), S(0), S(0)});
                p[0].d_t = S(-1);
                p[2].d_t = S(1);
                p[0].d_x = two * c * dx;
                p[1].d_x = -two * c * dx;
                return p;
            });
    }
    return eqs;
}

/// Marches u_{m,n+1} = u_{m,n} + c (u_{m+2,n} - 2u_{m+1,n} + u_{m,n}) from an
/// initial row. Each step loses two cells on the right; the result is the
/// rectangle of columns that survive all steps (the window m in
/// [m_lo, m_lo + row_len - 1 - 2*steps], n in [n_lo, n_lo + steps]).
template <class S>
Field<S> heat_evolve(std::span<const S> initial_row, long steps, const HeatScheme<S>& scheme,
                     long m_lo = 0, long n_lo = 0, S x0 = S(0), S t0 = S(0)) {
    const long len = static_cast<long>(initial_row.size());
    if (steps < 0) throw std::invalid_argument("heat_evolve: negative step count");
    if (len < 2 * steps + 1)
        throw std::invalid_argument("heat_evolve: row too short (need >= 2*steps + 1 cells)");
    const S two = scalar_traits<S>::from_long(2);

    std::vector<std::vector<S>> rows;
    rows.emplace_back(initial_row.begin(), initial_row.end());
    for (long k = 0; k < steps; ++k) {
        const std::vector<S>& prev = rows.back();
        std::vector<S> next(prev.size() - 2);
        for (size_t i = 0; i + 2 < prev.size(); ++i)
            next[i] = prev[i] + scheme.c * (prev[i + 2] - two * prev[i + 1] + prev[i]);
        rows.push_back(std::move(next));
    }

    IndexWindow w{m_lo, m_lo + len - 1 - 2 * steps, n_lo, n_lo + steps};
    auto grid = LatticeGrid<S>::uniform(w, scheme.sigma_x, scheme.sigma_t, x0, t0);
    return Field<S>::generate(grid, w, [&](long m, long n) {
        return rows[static_cast<size_t>(n - n_lo)][static_cast<size_t>(m - m_lo)];
    });
}

} // namespace latsym
