#pragma once

#include "latsym/heat/scheme.hpp"
#include "latsym/symmetry/vector_fields.hpp"

#include <array>

namespace latsym {

/// The six-dimensional evolutionary symmetry family of the uniform-lattice
/// heat scheme: translations P0, P1, scaling W, the Galilei-type operator B,
/// dilation D and the expansion-type operator K.
enum class HeatOperator { P0, P1, W, B, D, K };

constexpr std::array<HeatOperator, 6> kHeatOperators{HeatOperator::P0, HeatOperator::P1,
                                                     HeatOperator::W, HeatOperator::B,
                                                     HeatOperator::D, HeatOperator::K};

const char* to_string(HeatOperator op);
HeatOperator heat_operator_from_string(std::string_view name);

/// Characteristic of the operator on a uniform heat lattice. Coefficients
/// read x and t from the grid at the evaluation point; shifts act on u only.
template <class S>
EvolutionaryCharacteristic<S> heat_characteristic(HeatOperator op, const S& sigma_x,
                                                  const S& sigma_t) {
    const S sx = sigma_x, st = sigma_t;
    const S two = scalar_traits<S>::from_long(2);
    const S half = S(1) / two;
    switch (op) {
        case HeatOperator::P0:
            return {"P0", {{0, 0}, {0, 1}},
                    [st](const StencilView<S>& v) { return (v.u(0, 1) - v.u(0, 0)) / st; }};
        case HeatOperator::P1:
            return {"P1", {{0, 0}, {1, 0}},
                    [sx](const StencilView<S>& v) { return (v.u(1, 0) - v.u(0, 0)) / sx; }};
        case HeatOperator::W:
            return {"W", {{0, 0}}, [](const StencilView<S>& v) { return v.u(0, 0); }};
        case HeatOperator::B:
            return {"B", {{0, 0}, {1, -1}, {0, -1}, {-1, 0}},
                    [sx, two, half](const StencilView<S>& v) {
                        return two * v.t() * (v.u(1, -1) - v.u(0, -1)) / sx +
                               (v.x() + half * sx) * v.u(-1, 0);
                    }};
        case HeatOperator::D:
            return {"D", {{0, 0}, {0, -1}, {-1, 0}},
                    [sx, st, two, half](const StencilView<S>& v) {
                        return two * v.t() * (v.u(0, 0) - v.u(0, -1)) / st +
                               v.x() * (v.u(0, 0) - v.u(-1, 0)) / sx + v.u(0, 0) -
                               half * v.u(-1, 0);
                    }};
        case HeatOperator::K:
            return {"K", {{0, 0}, {0, -1}, {0, -2}, {-1, -1}, {-2, 0}},
                    [sx, st, two, half](const StencilView<S>& v) {
                        const S x = v.x();
                        const S t = v.t();
                        const S quarter = half * half;
                        return t * t * (v.u(0, -1) - v.u(0, -2)) / st +
                               t * x * (v.u(0, -1) - v.u(-1, -1)) / sx +
                               quarter * x * x * v.u(-2, 0) +
                               t * (v.u(0, -2) - half * v.u(-1, -1)) -
                               quarter * quarter * sx * sx * v.u(-2, 0);
                    }};
    }
    throw std::logic_error("unreachable");
}

/// B with the sign of its sigma_x/2 coefficient flipped. Still a symmetry of
/// the linear scheme (it differs from B by a constant-coefficient shift
/// operator), but it breaks the six-operator bracket table; used as the
/// negative control for the algebra-closure verification.
template <class S>
EvolutionaryCharacteristic<S> heat_characteristic_broken_B(const S& sigma_x, const S& sigma_t) {
    (void)sigma_t;
    const S sx = sigma_x;
    const S two = scalar_traits<S>::from_long(2);
    const S half = S(1) / two;
    return {"B-flipped", {{0, 0}, {1, -1}, {0, -1}, {-1, 0}},
            [sx, two, half](const StencilView<S>& v) {
                return two * v.t() * (v.u(1, -1) - v.u(0, -1)) / sx +
                       (v.x() - half * sx) * v.u(-1, 0);
            }};
}

/// Applies the named operator to a field on a uniform heat grid.
template <class S>
Field<S> apply_linear_symmetry(HeatOperator op, const Field<S>& f) {
    const auto& g = *f.grid();
    return characteristic_field(heat_characteristic<S>(op, g.sigma_x(), g.sigma_t()), f);
}

/// Bracket of two operator families evaluated on a field:
/// [A, B] f = A(B f) - B(A f) on the common window.
template <class S>
Field<S> characteristic_bracket_field(const EvolutionaryCharacteristic<S>& A,
                                      const EvolutionaryCharacteristic<S>& B,
                                      const Field<S>& f) {
    Field<S> ab = characteristic_field(A, characteristic_field(B, f));
    Field<S> ba = characteristic_field(B, characteristic_field(A, f));
    return linear_combine(S(1), ab, S(-1), ba);
}

/// One row of the operator algebra: [first, second] = sum_k coeff[k] * op_k,
/// with k running over kHeatOperators order (P0, P1, W, B, D, K). The
/// coefficients are independent of the lattice spacings and grid offsets.
struct BracketRelation {
    HeatOperator first, second;
    std::array<double, 6> coeff;
};

/// All fifteen unordered pairs.
std::span<const BracketRelation> heat_bracket_table();

/// Relative closure defect of [ops[i], ops[j]] against the expected span
/// combination, evaluated on a solution field. Zero (to round-off) for the
/// genuine operator family; order-one for sign-broken variants.
double heat_bracket_closure_defect(const std::array<EvolutionaryCharacteristic<double>, 6>& ops,
                                   const BracketRelation& rel, const Field<double>& f);

} // namespace latsym
