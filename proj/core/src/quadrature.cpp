#include "eiv/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace eiv {

QuadratureNodes gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: require a < b");

    QuadratureNodes q;
    q.x.resize(n);
    q.w.resize(n);

    const double mid = 0.5 * (b + a);
    const double half = 0.5 * (b - a);
    const int m = (n + 1) / 2;

    for (int i = 1; i <= m; ++i) {
        // Newton iteration on P_n starting from the Chebyshev approximation.
        double z = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        q.x[i - 1] = mid - half * z;
        q.x[n - i] = mid + half * z;
        q.w[i - 1] = 2.0 * half / ((1.0 - z * z) * pp * pp);
        q.w[n - i] = q.w[i - 1];
    }
    return q;
}

QuadratureNodes composite_gauss_legendre(double a, double b, double max_panel,
                                         int points_per_panel) {
    if (!(a < b)) throw std::invalid_argument("composite_gauss_legendre: require a < b");
    if (!(max_panel > 0.0)) throw std::invalid_argument("composite_gauss_legendre: panel width");

    int panels = static_cast<int>(std::ceil((b - a) / max_panel));
    if (panels < 1) panels = 1;
    const double width = (b - a) / panels;

    QuadratureNodes ref = gauss_legendre(points_per_panel, 0.0, 1.0);
    QuadratureNodes out;
    out.x.reserve(static_cast<std::size_t>(panels) * points_per_panel);
    out.w.reserve(static_cast<std::size_t>(panels) * points_per_panel);
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        for (int k = 0; k < points_per_panel; ++k) {
            out.x.push_back(lo + ref.x[k] * width);
            out.w.push_back(ref.w[k] * width);
        }
    }
    return out;
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double rel_tol, double abs_tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    const double tol = abs_tol + rel_tol * std::abs(left + right);
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, m, fa, flm, fm, left, rel_tol, 0.5 * abs_tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, rel_tol, 0.5 * abs_tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, a, b);
    return adapt(f, a, b, fa, fm, fb, whole, rel_tol, abs_tol, max_depth);
}

}  // namespace eiv
