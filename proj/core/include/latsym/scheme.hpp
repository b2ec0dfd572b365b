#pragma once

#include "latsym/field.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>

namespace latsym {

/// Coordinates and value of one stencil slot.
template <class S>
struct PointValue {
    S x, t, u;
};

/// Partial derivatives of a residual with respect to one stencil slot.
template <class S>
struct SlotPartials {
    S d_x, d_t, d_u;
};

/// A stencil residual: a finite set of index offsets together with a pure
/// function of the (x, t, u) values at those offsets. Schemes may register
/// analytic partials; otherwise consumers that need derivatives fall back
/// to central differences (double mode only).
template <class S>
class SchemeEquation {
public:
    using Residual = std::function<S(std::span<const PointValue<S>>)>;
    using Partials = std::function<std::vector<SlotPartials<S>>(std::span<const PointValue<S>>)>;

    SchemeEquation(std::string name, std::vector<Offset> offsets, Residual residual,
                   Partials partials = nullptr)
        : name_(std::move(name)), offsets_(std::move(offsets)),
          residual_(std::move(residual)), partials_(std::move(partials)) {
        if (offsets_.empty()) throw std::invalid_argument("SchemeEquation: empty stencil");
    }

    const std::string& name() const { return name_; }
    std::span<const Offset> offsets() const { return offsets_; }
    bool has_analytic_partials() const { return static_cast<bool>(partials_); }

    S residual(std::span<const PointValue<S>> slots) const { return residual_(slots); }
    std::vector<SlotPartials<S>> analytic_partials(std::span<const PointValue<S>> slots) const {
        if (!partials_) throw std::logic_error("SchemeEquation '" + name_ + "': no analytic partials");
        return partials_(slots);
    }

    /// Base points of `window` at which every stencil slot stays inside.
    IndexWindow valid_window(const IndexWindow& window) const {
        return window.shrunk_for(offsets_);
    }

    /// Gathers the slot tuple for a base point from grid coordinates and field values.
    std::vector<PointValue<S>> gather(const Field<S>& f, long m, long n) const {
        std::vector<PointValue<S>> slots;
        slots.reserve(offsets_.size());
        const auto& g = *f.grid();
        for (const Offset& o : offsets_)
            slots.push_back(PointValue<S>{g.x(m + o.dm, n + o.dn), g.t(m + o.dm, n + o.dn),
                                          f.at(m + o.dm, n + o.dn)});
        return slots;
    }

private:
    std::string name_;
    std::vector<Offset> offsets_;
    Residual residual_;
    Partials partials_;
};

template <class S>
struct ResidualSummary {
    Field<S> values;
    S max_abs;
};

/// Residual of `s` over the valid window of `f`. Errors when the stencil
/// exits the window everywhere.
template <class S>
ResidualSummary<S> scheme_residual(const SchemeEquation<S>& s, const Field<S>& f) {
    IndexWindow w = s.valid_window(f.window());
    if (w.empty())
        throw std::invalid_argument("scheme_residual('" + s.name() +
                                    "'): stencil exits window " + f.window().to_string());
    Field<S> r = Field<S>::generate(f.grid(), w, [&](long m, long n) {
        auto slots = s.gather(f, m, n);
        return s.residual(slots);
    });
    S mx = r.max_abs();
    return ResidualSummary<S>{std::move(r), std::move(mx)};
}

} // namespace latsym
