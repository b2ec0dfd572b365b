#include "latsym/symmetry/verify.hpp"

#include <algorithm>
#include <cmath>

namespace latsym {

SymmetryReport SymmetryReport::merge(const SymmetryReport& a, const SymmetryReport& b) {
    SymmetryReport out = a;
    out.max_abs_residual = std::max(a.max_abs_residual, b.max_abs_residual);
    out.samples_tested = a.samples_tested + b.samples_tested;
    for (const auto& eb : b.per_equation) {
        auto it = std::find_if(out.per_equation.begin(), out.per_equation.end(),
                               [&](const EquationReport& ea) { return ea.equation == eb.equation; });
        if (it == out.per_equation.end()) {
            out.per_equation.push_back(eb);
        } else {
            it->max_abs_residual = std::max(it->max_abs_residual, eb.max_abs_residual);
            it->samples += eb.samples;
        }
    }
    out.pass = out.max_abs_residual <= out.tolerance;
    out.robust_fail = a.robust_fail || b.robust_fail;
    return out;
}

std::vector<SlotPartials<double>> numeric_partials(const SchemeEquation<double>& eq,
                                                   std::span<const PointValue<double>> slots,
                                                   double step_scale) {
    std::vector<PointValue<double>> work(slots.begin(), slots.end());
    std::vector<SlotPartials<double>> out(slots.size());
    auto central = [&](double& coord) {
        const double h = step_scale * std::max(1.0, std::abs(coord));
        const double saved = coord;
        coord = saved + h;
        const double fp = eq.residual(work);
        coord = saved - h;
        const double fm = eq.residual(work);
        coord = saved;
        return (fp - fm) / (2.0 * h);
    };
    for (size_t i = 0; i < work.size(); ++i) {
        out[i].d_x = central(work[i].x);
        out[i].d_t = central(work[i].t);
        out[i].d_u = central(work[i].u);
    }
    return out;
}

namespace {

std::vector<SlotPartials<double>> partials_for(const SchemeEquation<double>& eq,
                                               std::span<const PointValue<double>> slots,
                                               const ProlongationOptions& opts) {
    if (opts.prefer_analytic && eq.has_analytic_partials()) return eq.analytic_partials(slots);
    return numeric_partials(eq, slots, opts.step_scale);
}

struct Tally {
    double max_abs = 0.0;
    long total = 0;
    long gross = 0; // residual > 100x tolerance
};

void finish_report(SymmetryReport& rep, const Tally& tally) {
    rep.max_abs_residual = tally.max_abs;
    rep.samples_tested = tally.total;
    rep.pass = tally.max_abs <= rep.tolerance;
    rep.robust_fail =
        tally.total > 0 && 10 * tally.gross >= tally.total && tally.gross > 0;
}

} // namespace

double prolonged_point_action(const PointVectorField<double>& X,
                              const SchemeEquation<double>& eq,
                              std::span<const PointValue<double>> slots,
                              const ProlongationOptions& opts) {
    const auto parts = partials_for(eq, slots, opts);
    double acc = 0.0;
    for (size_t i = 0; i < slots.size(); ++i) {
        const PointValue<double>& p = slots[i];
        acc += X.xi_x(p.x, p.t, p.u) * parts[i].d_x;
        acc += X.xi_t(p.x, p.t, p.u) * parts[i].d_t;
        acc += X.phi(p.x, p.t, p.u) * parts[i].d_u;
    }
    return acc;
}

std::function<double(std::span<const PointValue<double>>)>
prolong_point_field(const PointVectorField<double>& X, const SchemeEquation<double>& eq,
                    const ProlongationOptions& opts) {
    return [X, &eq, opts](std::span<const PointValue<double>> slots) {
        return prolonged_point_action(X, eq, slots, opts);
    };
}

SymmetryReport verify_point_symmetry(const PointVectorField<double>& X,
                                     std::span<const SchemeEquation<double>> system,
                                     std::span<const SolutionSample<double>> samples,
                                     double tol, const ProlongationOptions& opts,
                                     std::uint64_t seed) {
    SymmetryReport rep;
    rep.subject = X.name;
    rep.tolerance = tol;
    rep.seed = seed;
    Tally tally;
    for (const SchemeEquation<double>& eq : system) {
        EquationReport er{eq.name(), 0.0, 0};
        for (const SolutionSample<double>& sample : samples) {
            const IndexWindow valid = eq.valid_window(sample.u.window());
            for (const auto& [m, n] : sample.base_points) {
                if (!valid.contains(m, n)) continue;
                const auto slots = eq.gather(sample.u, m, n);
                const double action = std::abs(prolonged_point_action(X, eq, slots, opts));
                er.max_abs_residual = std::max(er.max_abs_residual, action);
                ++er.samples;
                tally.max_abs = std::max(tally.max_abs, action);
                ++tally.total;
                if (action > 100.0 * tol) ++tally.gross;
            }
        }
        rep.per_equation.push_back(std::move(er));
    }
    if (tally.total == 0)
        throw std::invalid_argument("verify_point_symmetry: no usable base points");
    finish_report(rep, tally);
    return rep;
}

SymmetryReport verify_evolutionary_symmetry(const EvolutionaryCharacteristic<double>& Q,
                                            const SchemeEquation<double>& eq,
                                            std::span<const SolutionSample<double>> samples,
                                            double tol, const ProlongationOptions& opts,
                                            std::uint64_t seed) {
    SymmetryReport rep;
    rep.subject = Q.name;
    rep.tolerance = tol;
    rep.seed = seed;
    EquationReport er{eq.name(), 0.0, 0};
    Tally tally;

    // Base point must admit the equation stencil, and every equation offset
    // must admit the characteristic's own stencil on top.
    std::vector<Offset> combined;
    for (const Offset& eo : eq.offsets())
        for (const Offset& qo : Q.stencil)
            combined.push_back(Offset{eo.dm + qo.dm, eo.dn + qo.dn});

    bool any_window = false;
    for (const SolutionSample<double>& sample : samples) {
        const IndexWindow valid = sample.u.window().shrunk_for(combined);
        if (valid.empty()) continue;
        any_window = true;
        for (const auto& [m, n] : sample.base_points) {
            if (!valid.contains(m, n)) continue;
            const auto slots = eq.gather(sample.u, m, n);
            const auto parts = partials_for(eq, slots, opts);
            double action = 0.0;
            const auto offs = eq.offsets();
            for (size_t i = 0; i < offs.size(); ++i) {
                const double tq = Q.evaluate(sample.u, m + offs[i].dm, n + offs[i].dn);
                action += tq * parts[i].d_u;
            }
            action = std::abs(action);
            er.max_abs_residual = std::max(er.max_abs_residual, action);
            ++er.samples;
            tally.max_abs = std::max(tally.max_abs, action);
            ++tally.total;
            if (action > 100.0 * tol) ++tally.gross;
        }
    }
    if (!any_window)
        throw std::invalid_argument("verify_evolutionary_symmetry('" + Q.name +
                                    "'): characteristic stencil exceeds every sampled window");
    if (tally.total == 0)
        throw std::invalid_argument("verify_evolutionary_symmetry: no usable base points");
    rep.per_equation.push_back(std::move(er));
    finish_report(rep, tally);
    return rep;
}

} // namespace latsym
