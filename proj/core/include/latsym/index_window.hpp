#pragma once

#include <span>
#include <string>
#include <vector>

namespace latsym {

/// Relative stencil offset. m is the spatial index, n the temporal one.
struct Offset {
    long dm = 0;
    long dn = 0;
    friend bool operator==(const Offset&, const Offset&) = default;
};

/// Closed rectangular index window [m_lo, m_hi] x [n_lo, n_hi].
struct IndexWindow {
    long m_lo = 0, m_hi = -1;
    long n_lo = 0, n_hi = -1;

    bool empty() const { return m_lo > m_hi || n_lo > n_hi; }
    long width() const { return empty() ? 0 : m_hi - m_lo + 1; }
    long height() const { return empty() ? 0 : n_hi - n_lo + 1; }
    long size() const { return width() * height(); }
    bool contains(long m, long n) const {
        return m >= m_lo && m <= m_hi && n >= n_lo && n <= n_hi;
    }
    bool contains(const IndexWindow& other) const;

    IndexWindow intersect(const IndexWindow& other) const;
    IndexWindow shifted(long dm, long dn) const;

    /// Base points p such that p + o lies inside for every offset o.
    IndexWindow shrunk_for(std::span<const Offset> offsets) const;

    std::string to_string() const;

    friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

[[noreturn]] void throw_window_violation(const IndexWindow& w, long m, long n,
                                         const char* what);

} // namespace latsym
