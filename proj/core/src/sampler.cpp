#include "latsym/symmetry/sampler.hpp"

#include "latsym/heat/scheme.hpp"
#include "latsym/rng.hpp"
#include "latsym/toda/dttl.hpp"

#include <cmath>
#include <stdexcept>

namespace latsym {

std::vector<SolutionSample<double>> sample_heat_solutions(const HeatSamplerConfig& cfg) {
    Rng rng(cfg.seed);
    const HeatScheme<double> scheme = HeatScheme<double>::from_spacings(cfg.sigma_x, cfg.sigma_t);
    std::vector<SolutionSample<double>> out;
    out.reserve(static_cast<size_t>(cfg.fields));
    for (int f = 0; f < cfg.fields; ++f) {
        std::vector<double> row(static_cast<size_t>(cfg.row_length));
        for (double& v : row) v = rng.uniform(-cfg.amplitude, cfg.amplitude);
        Field<double> u = heat_evolve<double>(row, cfg.steps, scheme, 0, 0, cfg.x0, cfg.t0);
        const IndexWindow& w = u.window();
        IndexWindow inner{w.m_lo + cfg.margin_m, w.m_hi - cfg.margin_m,
                          w.n_lo + cfg.margin_n, w.n_hi - cfg.margin_n};
        if (inner.empty())
            throw std::invalid_argument("sample_heat_solutions: window too small for margins");
        std::vector<std::pair<long, long>> pts;
        pts.reserve(static_cast<size_t>(cfg.base_points_per_field));
        for (int k = 0; k < cfg.base_points_per_field; ++k)
            pts.emplace_back(rng.uniform_int(inner.m_lo, inner.m_hi),
                             rng.uniform_int(inner.n_lo, inner.n_hi));
        out.push_back(SolutionSample<double>{std::move(u), std::move(pts)});
    }
    return out;
}

std::vector<SolutionSample<double>> sample_dttl_solutions(const DttlSamplerConfig& cfg) {
    Rng rng(cfg.seed);
    std::vector<SolutionSample<double>> out;
    out.reserve(static_cast<size_t>(cfg.fields));
    const double a2 = cfg.alpha * cfg.alpha;
    if (a2 == 0.0) throw std::invalid_argument("sample_dttl_solutions: alpha must be nonzero");

    for (int f = 0; f < cfg.fields; ++f) {
        // internal axes: m = space (scheme label n), n = time (scheme label m)
        const long m_lo = 0, m_hi = cfg.row_length - 1;
        const long n_hi = cfg.steps + 1;
        IndexWindow w{m_lo, m_hi, 0, n_hi};

        // The three-level recursion consumes one cell on each side per new
        // row; values outside the shrinking trapezoid are unconstrained, so
        // the usable rectangle is the final trapezoid level.
        std::vector<std::vector<double>> rows(static_cast<size_t>(n_hi + 1),
                                              std::vector<double>(static_cast<size_t>(cfg.row_length), 0.0));
        for (long m = m_lo; m <= m_hi; ++m) {
            rows[0][static_cast<size_t>(m)] = rng.uniform(-cfg.amplitude, cfg.amplitude);
            rows[1][static_cast<size_t>(m)] = rng.uniform(-cfg.amplitude, cfg.amplitude);
        }
        for (long j = 2; j <= n_hi; ++j) {
            const long lo = m_lo + (j - 1), hi = m_hi - (j - 1);
            rows[static_cast<size_t>(j)][static_cast<size_t>(lo - 1)] =
                rng.uniform(-cfg.amplitude, cfg.amplitude); // boundary seed of the new row
            for (long m = lo; m <= hi; ++m) {
                const double um0 = rows[static_cast<size_t>(j - 2)][static_cast<size_t>(m)];
                const double um1 = rows[static_cast<size_t>(j - 1)][static_cast<size_t>(m)];
                const double ul2 = rows[static_cast<size_t>(j)][static_cast<size_t>(m - 1)];
                const double uup = rows[static_cast<size_t>(j - 2)][static_cast<size_t>(m + 1)];
                const double rhs = std::exp(um0 - um1) -
                                   a2 * (std::exp(ul2 - um1) - std::exp(um1 - uup));
                if (!(rhs > 0.0))
                    throw std::runtime_error(
                        "sample_dttl_solutions: log-domain violation; reduce amplitude");
                rows[static_cast<size_t>(j)][static_cast<size_t>(m)] = um1 - std::log(rhs);
            }
        }

        auto grid = LatticeGrid<double>::uniform(w, cfg.sigma_x, cfg.sigma_t, 0.0, 0.0,
                                                 AxisLabels{"n", "m"});
        Field<double> u = Field<double>::generate(grid, w, [&](long m, long n) {
            return rows[static_cast<size_t>(n)][static_cast<size_t>(m)];
        });

        // Keep base points where the full scheme stencil saw propagated data:
        // the trapezoid at level n needs columns inside [m_lo+n+1, m_hi-n-1].
        const long shrink = n_hi - 1;
        IndexWindow inner{m_lo + shrink + cfg.margin_m, m_hi - shrink - cfg.margin_m,
                          cfg.margin_n, n_hi - 2 - cfg.margin_n};
        if (inner.empty())
            throw std::invalid_argument("sample_dttl_solutions: window too small for margins");
        std::vector<std::pair<long, long>> pts;
        for (int k = 0; k < cfg.base_points_per_field; ++k)
            pts.emplace_back(rng.uniform_int(inner.m_lo, inner.m_hi),
                             rng.uniform_int(inner.n_lo, inner.n_hi));
        out.push_back(SolutionSample<double>{std::move(u), std::move(pts)});
    }
    return out;
}

} // namespace latsym
