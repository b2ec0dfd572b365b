#pragma once

#include "latsym/field.hpp"

#include <array>
#include <stdexcept>

namespace latsym {

enum class Axis { x, t };
enum class DerivativeKind { forward, backward, symmetric, second_forward };

/// result(m,n) = f(m+dm, n+dn) on the shrunken window. Window bookkeeping is
/// exact; an empty result window is an error.
template <class S>
Field<S> shift(const Field<S>& f, long dm, long dn) {
    const std::array<Offset, 1> off{Offset{dm, dn}};
    IndexWindow w = f.window().shrunk_for(off);
    if (w.empty())
        throw std::invalid_argument("shift(" + std::to_string(dm) + "," + std::to_string(dn) +
                                    "): empty result window from " + f.window().to_string());
    return Field<S>::generate(f.grid(), w,
                              [&](long m, long n) { return f.at(m + dm, n + dn); });
}

namespace detail {

template <class S>
void require_uniform_axis(const Field<S>& f, Axis axis) {
    const auto& g = *f.grid();
    const IndexWindow& gw = g.window();
    if (axis == Axis::x) {
        for (long n = gw.n_lo; n <= gw.n_hi; ++n)
            for (long m = gw.m_lo; m < gw.m_hi; ++m)
                if (g.x(m + 1, n) - g.x(m, n) != g.sigma_x())
                    throw std::invalid_argument("discrete_derivative: grid not uniform along x");
    } else {
        for (long m = gw.m_lo; m <= gw.m_hi; ++m)
            for (long n = gw.n_lo; n < gw.n_hi; ++n)
                if (g.t(m, n + 1) - g.t(m, n) != g.sigma_t())
                    throw std::invalid_argument("discrete_derivative: grid not uniform along t");
    }
}

} // namespace detail

/// Discrete derivatives on a uniform axis:
///   forward        (T - 1)/sigma
///   backward       (1 - T^-1)/sigma
///   symmetric      (T - T^-1)/(2 sigma)
///   second_forward (T^2 - 2T + 1)/sigma^2
template <class S>
Field<S> discrete_derivative(const Field<S>& f, Axis axis, DerivativeKind kind) {
    detail::require_uniform_axis(f, axis);
    const S sigma = axis == Axis::x ? f.grid()->sigma_x() : f.grid()->sigma_t();
    const long um = axis == Axis::x ? 1 : 0; // unit step along the axis
    const long un = axis == Axis::x ? 0 : 1;

    std::vector<Offset> offs;
    switch (kind) {
        case DerivativeKind::forward: offs = {{0, 0}, {um, un}}; break;
        case DerivativeKind::backward: offs = {{-um, -un}, {0, 0}}; break;
        case DerivativeKind::symmetric: offs = {{-um, -un}, {um, un}}; break;
        case DerivativeKind::second_forward: offs = {{0, 0}, {um, un}, {2 * um, 2 * un}}; break;
    }
    IndexWindow w = f.window().shrunk_for(offs);
    if (w.empty())
        throw std::invalid_argument("discrete_derivative: window " + f.window().to_string() +
                                    " too small for stencil");

    const S two = scalar_traits<S>::from_long(2);
    switch (kind) {
        case DerivativeKind::forward:
            return Field<S>::generate(f.grid(), w, [&](long m, long n) {
                return (f.at(m + um, n + un) - f.at(m, n)) / sigma;
            });
        case DerivativeKind::backward:
            return Field<S>::generate(f.grid(), w, [&](long m, long n) {
                return (f.at(m, n) - f.at(m - um, n - un)) / sigma;
            });
        case DerivativeKind::symmetric:
            return Field<S>::generate(f.grid(), w, [&](long m, long n) {
                return (f.at(m + um, n + un) - f.at(m - um, n - un)) / (two * sigma);
            });
        case DerivativeKind::second_forward:
            return Field<S>::generate(f.grid(), w, [&](long m, long n) {
                return (f.at(m + 2 * um, n + 2 * un) - two * f.at(m + um, n + un) + f.at(m, n)) /
                       (sigma * sigma);
            });
    }
    throw std::logic_error("unreachable");
}

} // namespace latsym
