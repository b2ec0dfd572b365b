#pragma once

#include "latsym/grid.hpp"

#include <functional>
#include <utility>

namespace latsym {

/// Values u_{m,n} living on (a sub-window of) a lattice grid.
///
/// Out-of-window access throws; there are no ghost cells, every operator
/// returns its result on the correspondingly shrunken window.
template <class S>
class Field {
public:
    Field(GridPtr<S> grid, IndexWindow window, std::vector<S> values)
        : grid_(std::move(grid)), window_(window), values_(std::move(values)) {
        if (window_.empty()) throw std::invalid_argument("Field: empty window");
        if (!grid_->window().contains(window_))
            throw std::invalid_argument("Field: window " + window_.to_string() +
                                        " not contained in grid window " +
                                        grid_->window().to_string());
        if (values_.size() != static_cast<size_t>(window_.size()))
            throw std::invalid_argument("Field: value count does not match window");
    }

    template <class Fn>
    static Field generate(GridPtr<S> grid, IndexWindow window, Fn&& fn) {
        std::vector<S> vals;
        vals.reserve(static_cast<size_t>(window.size()));
        for (long n = window.n_lo; n <= window.n_hi; ++n)
            for (long m = window.m_lo; m <= window.m_hi; ++m)
                vals.push_back(fn(m, n));
        return Field(std::move(grid), window, std::move(vals));
    }

    template <class Fn>
    static Field generate(GridPtr<S> grid, Fn&& fn) {
        return generate(std::move(grid), grid ? grid->window() : IndexWindow{},
                        std::forward<Fn>(fn));
    }

    const GridPtr<S>& grid() const { return grid_; }
    const IndexWindow& window() const { return window_; }

    const S& at(long m, long n) const { return values_[index(m, n)]; }
    S& at(long m, long n) { return values_[index(m, n)]; }
    const S& operator()(long m, long n) const { return at(m, n); }

    S max_abs() const {
        S best(0);
        for (const S& v : values_) {
            S a = scalar_traits<S>::abs(v);
            if (a > best) best = a;
        }
        return best;
    }

    Field restricted(const IndexWindow& sub) const {
        IndexWindow w = window_.intersect(sub);
        if (w.empty()) throw std::invalid_argument("Field::restricted: empty result window");
        return generate(grid_, w, [&](long m, long n) { return at(m, n); });
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.window_ == b.window_ && a.values_ == b.values_;
    }

private:
    size_t index(long m, long n) const {
        if (!window_.contains(m, n)) throw_window_violation(window_, m, n, "Field");
        return static_cast<size_t>((n - window_.n_lo) * window_.width() + (m - window_.m_lo));
    }

    GridPtr<S> grid_;
    IndexWindow window_;
    std::vector<S> values_;
};

/// Pointwise combination a*f + b*g on the common window.
template <class S>
Field<S> linear_combine(const S& a, const Field<S>& f, const S& b, const Field<S>& g) {
    IndexWindow w = f.window().intersect(g.window());
    if (w.empty()) throw std::invalid_argument("linear_combine: disjoint windows");
    return Field<S>::generate(f.grid(), w,
                              [&](long m, long n) { return a * f.at(m, n) + b * g.at(m, n); });
}

} // namespace latsym
