#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cliffkit/clifford.hpp"
#include "cliffkit/quadratic.hpp"

namespace cliffkit {

/// Thrown by clifford_at when the curvature form is degenerate at the point;
/// carries the measured signature.
struct DegenerateHessianError : std::runtime_error {
    DegenerateHessianError(const std::string& msg, Signature s)
        : std::runtime_error(msg), sig(s) {}
    Signature sig;
};

/// Twice-differentiable scalar field on an open subset of R^n. Analytic
/// gradient/Hessian callbacks are optional; when given they are checked
/// against central differences on the probe set at construction (1e-5
/// relative) and preferred by every derivative routine.
class Functional {
public:
    using EvalFn = std::function<double(const Vec&)>;
    using GradFn = std::function<Vec(const Vec&)>;
    using HessFn = std::function<Mat(const Vec&)>;
    using DomainFn = std::function<bool(const Vec&)>;

    Functional(std::size_t dim, EvalFn eval, GradFn grad = nullptr, HessFn hess = nullptr,
               DomainFn domain = nullptr, std::vector<Vec> probes = {});

    std::size_t dim() const { return dim_; }
    double operator()(const Vec& x) const;
    bool in_domain(const Vec& x) const;
    bool has_grad() const { return static_cast<bool>(grad_); }
    bool has_hess() const { return static_cast<bool>(hess_); }
    Vec analytic_grad(const Vec& x) const { return grad_(x); }
    Mat analytic_hess(const Vec& x) const { return hess_(x); }

    /// f(x) = |x|^p / p on R, p >= 2.
    static Functional power(double p);
    /// f(x) = (x^2 - 1)^2 on R.
    static Functional double_well();
    /// f(x) = x_1^2 + .. + x_p^2 - (x_{p+1}^2 + .. + x_n^2).
    static Functional minkowski(int p, int n);
    /// Lookup by CLI name: "power" (param p), "double_well", "minkowski" (p, n).
    static Functional by_name(const std::string& name, double p, int n);

private:
    std::size_t dim_;
    EvalFn eval_;
    GradFn grad_;
    HessFn hess_;
    DomainFn domain_;
};

/// Default step sizes: cube root of machine epsilon for first differences,
/// fourth root for second differences, scaled per coordinate by (1 + |a_j|).
Vec gradient_steps(const Vec& a);
Vec hessian_steps(const Vec& a);

/// Analytic gradient when available, else central differences. The explicit-h
/// overload forces finite differences with the uniform step h > 0.
Vec gradient(const Functional& f, const Vec& a);
Vec gradient(const Functional& f, const Vec& a, double h);

QuadraticForm hessian(const Functional& f, const Vec& a);
QuadraticForm hessian(const Functional& f, const Vec& a, double h);

/// Tangent hyperplane of graph(f) at (y, f(y)): the normal is
/// (f'(y), -1) in R^{n+1} and points (x, z) on the plane satisfy
/// <normal, (x, z)> + offset = 0 with offset = f(y) - <y, f'(y)>.
struct Hyperplane {
    Vec normal;
    double offset;
};
Hyperplane tangent_hyperplane(const Functional& f, const Vec& y);

struct LegendrePoint {
    Vec y;
    Vec x_star;      // f'(y)
    double z_star;   // f(y) - <y, f'(y)>
};
LegendrePoint legendre_point(const Functional& f, const Vec& y);

/// Damped Newton solve of f'(y) = x_star from the given seed (step halved
/// until the residual drops, at most 30 times). Branch selection is by seed
/// only. Errors: singular curvature at an iterate, or no convergence within
/// max_iter.
Vec legendre_invert(const Functional& f, const Vec& x_star, const Vec& seed,
                    double tol = 1e-10, int max_iter = 100);

/// Both sides of the transform curvature relation: the left factor is the
/// second difference of the map x* -> z* (each probe resolved through
/// legendre_invert), the right is the matrix inverse of the curvature at y.
/// The derivation from the transform definition gives
/// fstar_hess = -inverse_hess; callers assert whichever side they test.
struct HessianPair {
    QuadraticForm fstar_hess;
    QuadraticForm inverse_hess;
};
HessianPair legendre_hessian_pair(const Functional& f, const Vec& y);

/// Clifford algebra attached at a point: the curvature form is diagonalized
/// and the eigenvalues (descending, raw scale) become the generator metric;
/// frame columns map coordinates into generator space. Degenerate curvature
/// raises DegenerateHessianError with the signature.
struct CliffordFrame {
    CliffordSpace space;
    Mat frame;
};
CliffordFrame clifford_at(const Functional& f, const Vec& a);

}  // namespace cliffkit
