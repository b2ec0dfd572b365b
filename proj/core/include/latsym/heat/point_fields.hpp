#pragma once

#include "latsym/symmetry/vector_fields.hpp"

#include <functional>

namespace latsym {

/// Point symmetry algebra of the heat difference system: time and space
/// translations, the dilation x d/dx + 2t d/dt, the scaling u d/du, and the
/// superposition family S(x,t) d/du for S a solution of the system.
enum class HeatPointField { P0_hat, P1_hat, D_hat, W_hat };

const char* to_string(HeatPointField f);

PointVectorField<double> heat_point_field(HeatPointField which);

/// phi = S(x, t) with S a (claimed) solution of the system; passes
/// verification exactly when S actually solves it.
PointVectorField<double> superposition_field(std::function<double(double, double)> solution,
                                             std::string name);

/// Point symmetry algebra of the DTTL difference system: P0 = d/dt,
/// P1 = d/dx, D0 = t d/dt, D1 = x d/dx, W = d/du.
enum class DttlPointField { P0, P1, D0, D1, W };

const char* to_string(DttlPointField f);

PointVectorField<double> dttl_point_field(DttlPointField which);

} // namespace latsym
