#pragma once

#include "latsym/index_window.hpp"
#include "latsym/rational.hpp"

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace latsym {

/// Names for the two index axes. The space axis comes first everywhere in
/// this library; schemes that label their spatial index differently carry
/// the labels along so serialized output stays readable.
struct AxisLabels {
    std::string space = "m";
    std::string time = "n";
};

/// A finite rectangular lattice with per-node coordinates (x, t).
///
/// Uniform grids are built from the closed form x = sigma_x*m + x0,
/// t = sigma_t*n + t0; arbitrary coordinate tables are accepted too so the
/// lattice equations themselves can be exercised as scheme residuals.
template <class S>
class LatticeGrid {
public:
    LatticeGrid(IndexWindow window, std::vector<S> x, std::vector<S> t,
                S sigma_x, S sigma_t, AxisLabels labels = {})
        : window_(window), x_(std::move(x)), t_(std::move(t)),
          sigma_x_(std::move(sigma_x)), sigma_t_(std::move(sigma_t)),
          labels_(std::move(labels)) {
        if (window_.empty()) throw std::invalid_argument("LatticeGrid: empty window");
        const auto need = static_cast<size_t>(window_.size());
        if (x_.size() != need || t_.size() != need)
            throw std::invalid_argument("LatticeGrid: coordinate table size mismatch");
        if (!(sigma_x_ > S(0)) || !(sigma_t_ > S(0)))
            throw std::invalid_argument("LatticeGrid: spacings must be positive");
    }

    static std::shared_ptr<const LatticeGrid> uniform(IndexWindow window, S sigma_x,
                                                      S sigma_t, S x0 = S(0), S t0 = S(0),
                                                      AxisLabels labels = {}) {
        std::vector<S> xs, ts;
        xs.reserve(static_cast<size_t>(window.size()));
        ts.reserve(static_cast<size_t>(window.size()));
        for (long n = window.n_lo; n <= window.n_hi; ++n) {
            for (long m = window.m_lo; m <= window.m_hi; ++m) {
                xs.push_back(sigma_x * scalar_traits<S>::from_long(m) + x0);
                ts.push_back(sigma_t * scalar_traits<S>::from_long(n) + t0);
            }
        }
        return std::make_shared<const LatticeGrid>(window, std::move(xs), std::move(ts),
                                                   sigma_x, sigma_t, std::move(labels));
    }

    /// Heat lattice: spatial spacing sigma_x, temporal spacing c*sigma_x^2.
    static std::shared_ptr<const LatticeGrid> uniform_heat(IndexWindow window, S sigma_x,
                                                           S c, S x0 = S(0), S t0 = S(0)) {
        return uniform(window, sigma_x, c * sigma_x * sigma_x, x0, t0);
    }

    const IndexWindow& window() const { return window_; }
    const AxisLabels& labels() const { return labels_; }
    const S& sigma_x() const { return sigma_x_; }
    const S& sigma_t() const { return sigma_t_; }
    S ratio_c() const { return sigma_t_ / (sigma_x_ * sigma_x_); }

    const S& x(long m, long n) const { return x_[index(m, n)]; }
    const S& t(long m, long n) const { return t_[index(m, n)]; }

    /// True when the stored coordinates are exactly the uniform closed form
    /// anchored at the window corner.
    bool is_uniform() const {
        const S x00 = x(window_.m_lo, window_.n_lo);
        const S t00 = t(window_.m_lo, window_.n_lo);
        for (long n = window_.n_lo; n <= window_.n_hi; ++n)
            for (long m = window_.m_lo; m <= window_.m_hi; ++m) {
                if (x(m, n) != x00 + sigma_x_ * scalar_traits<S>::from_long(m - window_.m_lo))
                    return false;
                if (t(m, n) != t00 + sigma_t_ * scalar_traits<S>::from_long(n - window_.n_lo))
                    return false;
            }
        return true;
    }

private:
    size_t index(long m, long n) const {
        if (!window_.contains(m, n)) throw_window_violation(window_, m, n, "LatticeGrid");
        return static_cast<size_t>((n - window_.n_lo) * window_.width() + (m - window_.m_lo));
    }

    IndexWindow window_;
    std::vector<S> x_, t_;
    S sigma_x_, sigma_t_;
    AxisLabels labels_;
};

template <class S>
using GridPtr = std::shared_ptr<const LatticeGrid<S>>;

} // namespace latsym
