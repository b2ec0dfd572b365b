#pragma once

#include "latsym/field.hpp"
#include "latsym/scheme.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace latsym {

/// Lie point vector field xi_x d/dx + xi_t d/dt + phi d/du. The coefficient
/// functions read the values at a single lattice point only.
template <class S>
struct PointVectorField {
    std::string name;
    std::function<S(const S& x, const S& t, const S& u)> xi_x;
    std::function<S(const S& x, const S& t, const S& u)> xi_t;
    std::function<S(const S& x, const S& t, const S& u)> phi;

    PointVectorField scaled(const S& lambda) const {
        auto sx = xi_x, st = xi_t, sp = phi;
        return PointVectorField{
            name + "*" + [&] { if constexpr (scalar_traits<S>::exact) return to_fraction_string(lambda); else return std::to_string(lambda); }(),
            [sx, lambda](const S& x, const S& t, const S& u) { return lambda * sx(x, t, u); },
            [st, lambda](const S& x, const S& t, const S& u) { return lambda * st(x, t, u); },
            [sp, lambda](const S& x, const S& t, const S& u) { return lambda * sp(x, t, u); }};
    }
};

/// Read-only view of (x, t, u) around a base point. Access is restricted to
/// the offsets the characteristic declared; anything else throws.
template <class S>
class StencilView {
public:
    StencilView(const Field<S>& f, long base_m, long base_n, std::span<const Offset> allowed)
        : f_(f), m_(base_m), n_(base_n), allowed_(allowed) {}

    S u(long dm, long dn) const { check(dm, dn); return f_.at(m_ + dm, n_ + dn); }
    S x(long dm = 0, long dn = 0) const { check(dm, dn); return f_.grid()->x(m_ + dm, n_ + dn); }
    S t(long dm = 0, long dn = 0) const { check(dm, dn); return f_.grid()->t(m_ + dm, n_ + dn); }

    long base_m() const { return m_; }
    long base_n() const { return n_; }

private:
    void check(long dm, long dn) const {
        const bool ok = std::any_of(allowed_.begin(), allowed_.end(),
                                    [&](const Offset& o) { return o.dm == dm && o.dn == dn; });
        if (!ok)
            throw std::logic_error("StencilView: access to undeclared offset (" +
                                   std::to_string(dm) + "," + std::to_string(dn) + ")");
    }

    const Field<S>& f_;
    long m_, n_;
    std::span<const Offset> allowed_;
};

/// Discrete evolutionary characteristic: u_lambda = Q(T^k x, T^k u) with a
/// declared finite stencil.
template <class S>
struct EvolutionaryCharacteristic {
    std::string name;
    std::vector<Offset> stencil;
    std::function<S(const StencilView<S>&)> q;

    S evaluate(const Field<S>& f, long m, long n) const {
        return q(StencilView<S>(f, m, n, stencil));
    }
};

/// Q evaluated pointwise as a field on the correspondingly shrunken window.
template <class S>
Field<S> characteristic_field(const EvolutionaryCharacteristic<S>& Q, const Field<S>& f) {
    IndexWindow w = f.window().shrunk_for(Q.stencil);
    if (w.empty())
        throw std::invalid_argument("characteristic_field('" + Q.name +
                                    "'): window exhausted by stencil");
    return Field<S>::generate(f.grid(), w,
                              [&](long m, long n) { return Q.evaluate(f, m, n); });
}

/// Explicit Euler step of the flow u_lambda = Q (x and t unchanged).
template <class S>
Field<S> flow_step(const EvolutionaryCharacteristic<S>& Q, const Field<S>& f, const S& dlambda) {
    Field<S> qf = characteristic_field(Q, f);
    return Field<S>::generate(f.grid(), qf.window(), [&](long m, long n) {
        return f.at(m, n) + dlambda * qf.at(m, n);
    });
}

} // namespace latsym
