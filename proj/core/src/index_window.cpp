#include "latsym/index_window.hpp"

#include <algorithm>
#include <stdexcept>

namespace latsym {

bool IndexWindow::contains(const IndexWindow& other) const {
    if (other.empty()) return true;
    return contains(other.m_lo, other.n_lo) && contains(other.m_hi, other.n_hi);
}

IndexWindow IndexWindow::intersect(const IndexWindow& other) const {
    return IndexWindow{std::max(m_lo, other.m_lo), std::min(m_hi, other.m_hi),
                       std::max(n_lo, other.n_lo), std::min(n_hi, other.n_hi)};
}

IndexWindow IndexWindow::shifted(long dm, long dn) const {
    return IndexWindow{m_lo + dm, m_hi + dm, n_lo + dn, n_hi + dn};
}

IndexWindow IndexWindow::shrunk_for(std::span<const Offset> offsets) const {
    IndexWindow w = *this;
    for (const Offset& o : offsets) {
        // base + o must stay inside *this
        w.m_lo = std::max(w.m_lo, m_lo - std::min(o.dm, 0L));
        w.m_hi = std::min(w.m_hi, m_hi - std::max(o.dm, 0L));
        w.n_lo = std::max(w.n_lo, n_lo - std::min(o.dn, 0L));
        w.n_hi = std::min(w.n_hi, n_hi - std::max(o.dn, 0L));
    }
    return w;
}

std::string IndexWindow::to_string() const {
    if (empty()) return "[empty]";
    return "[" + std::to_string(m_lo) + ".." + std::to_string(m_hi) + "] x [" +
           std::to_string(n_lo) + ".." + std::to_string(n_hi) + "]";
}

void throw_window_violation(const IndexWindow& w, long m, long n, const char* what) {
    throw std::out_of_range(std::string(what) + ": index (" + std::to_string(m) + "," +
                            std::to_string(n) + ") outside window " + w.to_string());
}

} // namespace latsym
