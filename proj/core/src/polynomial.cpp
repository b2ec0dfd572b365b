#include "latsym/polynomial.hpp"

#include <cmath>

namespace latsym {

std::vector<double> real_roots_in(const Polynomial<double>& p, double lo, double hi,
                                  int scan_points, double tol) {
    std::vector<double> roots;
    if (p.is_zero() || p.degree() == 0 || !(lo < hi)) return roots;
    const double step = (hi - lo) / scan_points;
    double a = lo;
    double fa = p.eval(a);
    for (int i = 1; i <= scan_points; ++i) {
        const double b = lo + i * step;
        const double fb = p.eval(b);
        if (fa == 0.0) {
            roots.push_back(a);
        } else if (fa * fb < 0.0) {
            double x0 = a, x1 = b, f0 = fa;
            for (int it = 0; it < 200 && (x1 - x0) > tol * std::max(1.0, std::abs(x0)); ++it) {
                const double mid = 0.5 * (x0 + x1);
                const double fm = p.eval(mid);
                if (fm == 0.0) { x0 = x1 = mid; break; }
                if (f0 * fm < 0.0) x1 = mid;
                else { x0 = mid; f0 = fm; }
            }
            roots.push_back(0.5 * (x0 + x1));
        }
        a = b;
        fa = fb;
    }
    if (fa == 0.0) roots.push_back(a);
    // collapse near-duplicates from scan-boundary hits
    std::vector<double> uniq;
    for (double r : roots) {
        if (uniq.empty() || std::abs(r - uniq.back()) > 10 * tol * std::max(1.0, std::abs(r)))
            uniq.push_back(r);
    }
    return uniq;
}

} // namespace latsym
