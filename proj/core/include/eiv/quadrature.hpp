#pragma once

#include <functional>
#include <vector>

namespace eiv {

struct QuadratureNodes {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre nodes and weights on [a, b]. Nodes come out mirror-symmetric
// about the midpoint (the construction fills i and n-1-i together).
QuadratureNodes gauss_legendre(int n, double a, double b);

// Composite Gauss-Legendre: [a, b] split into panels of width <= max_panel,
// points_per_panel-point rule on each. Meant for oscillatory integrands where
// the phase advance per panel must stay bounded.
QuadratureNodes composite_gauss_legendre(double a, double b, double max_panel,
                                         int points_per_panel = 8);

// Adaptive Simpson with recursive bisection. Tolerances combine as
// |err| <= abs_tol + rel_tol * |I|.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, double abs_tol = 0.0, int max_depth = 48);

}  // namespace eiv
