#pragma once

#include "latsym/symmetry/vector_fields.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latsym {

/// One sampled solution configuration: a field satisfying the system to
/// machine precision, plus base points at which prolonged actions are
/// evaluated.
template <class S>
struct SolutionSample {
    Field<S> u;
    std::vector<std::pair<long, long>> base_points;
};

struct EquationReport {
    std::string equation;
    double max_abs_residual = 0.0;
    long samples = 0;
};

/// Outcome of a verification run. The verdict is pass iff the largest
/// prolonged-action residual is within tolerance; `robust_fail` additionally
/// reports when the residual exceeded 100x tolerance on at least 10% of the
/// samples, which is the threshold used to call a candidate decisively
/// broken rather than a knife-edge numerical miss.
struct SymmetryReport {
    std::string subject;
    double tolerance = 0.0;
    double max_abs_residual = 0.0;
    long samples_tested = 0;
    std::vector<EquationReport> per_equation;
    bool pass = false;
    bool robust_fail = false;
    std::uint64_t seed = 0;

    static SymmetryReport merge(const SymmetryReport& a, const SymmetryReport& b);
};

struct ProlongationOptions {
    /// Use registered analytic partials when available (always required in
    /// exact mode).
    bool prefer_analytic = true;
    /// Central-difference step scale for numeric partials.
    double step_scale = 1e-6;
};

/// Numeric partials of a scheme residual with respect to every slot
/// coordinate; central difference with h = step_scale * max(1, |value|).
std::vector<SlotPartials<double>> numeric_partials(const SchemeEquation<double>& eq,
                                                   std::span<const PointValue<double>> slots,
                                                   double step_scale = 1e-6);

/// Prolonged action of a point field on a scheme residual at one stencil
/// configuration: sum over slots of xi_x dE/dx + xi_t dE/dt + phi dE/du,
/// each coefficient evaluated at that slot's own (x, t, u).
double prolonged_point_action(const PointVectorField<double>& X,
                              const SchemeEquation<double>& eq,
                              std::span<const PointValue<double>> slots,
                              const ProlongationOptions& opts = {});

/// Same action as a reusable callable over slot tuples.
std::function<double(std::span<const PointValue<double>>)>
prolong_point_field(const PointVectorField<double>& X, const SchemeEquation<double>& eq,
                    const ProlongationOptions& opts = {});

/// Point-symmetry verification: evaluates the prolonged action of X on each
/// equation of the system at every sampled base point.
SymmetryReport verify_point_symmetry(const PointVectorField<double>& X,
                                     std::span<const SchemeEquation<double>> system,
                                     std::span<const SolutionSample<double>> samples,
                                     double tol, const ProlongationOptions& opts = {},
                                     std::uint64_t seed = 0);

/// Evolutionary-symmetry verification: the prolonged action uses the
/// shifted characteristic T^k Q in the u-slot of each stencil offset.
SymmetryReport verify_evolutionary_symmetry(const EvolutionaryCharacteristic<double>& Q,
                                            const SchemeEquation<double>& eq,
                                            std::span<const SolutionSample<double>> samples,
                                            double tol, const ProlongationOptions& opts = {},
                                            std::uint64_t seed = 0);

} // namespace latsym
