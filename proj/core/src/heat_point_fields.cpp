#include "latsym/heat/point_fields.hpp"

namespace latsym {

namespace {
const auto kZero = [](const double&, const double&, const double&) { return 0.0; };
const auto kOne = [](const double&, const double&, const double&) { return 1.0; };
} // namespace

const char* to_string(HeatPointField f) {
    switch (f) {
        case HeatPointField::P0_hat: return "P0^";
        case HeatPointField::P1_hat: return "P1^";
        case HeatPointField::D_hat: return "D^";
        case HeatPointField::W_hat: return "W^";
    }
    return "?";
}

PointVectorField<double> heat_point_field(HeatPointField which) {
    switch (which) {
        case HeatPointField::P0_hat:
            return {"P0^", kZero, kOne, kZero};
        case HeatPointField::P1_hat:
            return {"P1^", kOne, kZero, kZero};
        case HeatPointField::D_hat:
            return {"D^",
                    [](const double& x, const double&, const double&) { return x; },
                    [](const double&, const double& t, const double&) { return 2.0 * t; },
                    kZero};
        case HeatPointField::W_hat:
            return {"W^", kZero, kZero,
                    [](const double&, const double&, const double& u) { return u; }};
    }
    throw std::logic_error("unreachable");
}

PointVectorField<double> superposition_field(std::function<double(double, double)> solution,
                                             std::string name) {
    return {std::move(name), kZero, kZero,
            [s = std::move(solution)](const double& x, const double& t, const double&) {
                return s(x, t);
            }};
}

const char* to_string(DttlPointField f) {
    switch (f) {
        case DttlPointField::P0: return "P0";
        case DttlPointField::P1: return "P1";
        case DttlPointField::D0: return "D0";
        case DttlPointField::D1: return "D1";
        case DttlPointField::W: return "W";
    }
    return "?";
}

PointVectorField<double> dttl_point_field(DttlPointField which) {
    switch (which) {
        case DttlPointField::P0:
            return {"P0", kZero, kOne, kZero};
        case DttlPointField::P1:
            return {"P1", kOne, kZero, kZero};
        case DttlPointField::D0:
            return {"D0", kZero,
                    [](const double&, const double& t, const double&) { return t; }, kZero};
        case DttlPointField::D1:
            return {"D1", [](const double& x, const double&, const double&) { return x; },
                    kZero, kZero};
        case DttlPointField::W:
            return {"W", kZero, kZero, kOne};
    }
    throw std::logic_error("unreachable");
}

} // namespace latsym
