#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cliffkit/linalg.hpp"
#include "json.hpp"

namespace cliffkit {

struct Interval {
    double a;
    double b;
};
struct Disc {
    double rho;
};
using KernelDomain = std::variant<Interval, Disc>;

enum class FieldTag { real_field, complex_field };

/// Evaluation map (s, t) -> scalar together with its domain, scalar field and
/// s-derivatives. Immutable; hermitian symmetry and Gram positivity are the
/// invariants the test suite checks per kernel.
class Kernel {
public:
    /// deriv(order, s, t): d^order/ds^order of the kernel; order 0 evaluates.
    using DerivFn = std::function<Cx(int, Cx, Cx)>;

    Kernel(std::string name, KernelDomain domain, FieldTag field, DerivFn deriv,
           bool kink_at_t, nlohmann::json params);

    Cx operator()(Cx s, Cx t) const { return deriv_(0, s, t); }
    Cx deriv_s(int order, Cx s, Cx t) const { return deriv_(order, s, t); }

    const std::string& name() const { return name_; }
    const KernelDomain& domain() const { return domain_; }
    FieldTag field() const { return field_; }
    /// True when d/ds jumps across s = t (quadrature must split there).
    bool kink_at_t() const { return kink_at_t_; }
    const nlohmann::json& params() const { return params_; }

private:
    std::string name_;
    KernelDomain domain_;
    FieldTag field_;
    DerivFn deriv_;
    bool kink_at_t_;
    nlohmann::json params_;
};

/// Taylor-pairing kernel of polynomials of degree <= n:
/// sum_{j=0..n} (s-c)^j/j! * (t-c)^j/j!.
double poly_kernel(double s, double t, double c, int n);

/// First-derivative-energy kernel with a zero left boundary value:
/// min(t - a, s - a).
double sobolev_kernel(double s, double t, double a);

/// Truncated cosine series kappa * sum_{p=1..P} cos(p(t-s))/p^2. The default
/// kappa is the literal printed double-(1/pi) normalization 1/pi^2; the
/// verifier adjudicates it against 1/pi.
double fourier_kernel(double s, double t, int terms, double kappa);
inline constexpr double kFourierKappaPrinted = 0.10132118364233778;  // 1/pi^2
inline constexpr double kFourierKappaReproducing = 0.3183098861837907;  // 1/pi

/// Closed form of the same series: kappa * (pi^2/6 - pi*theta/2 + theta^2/4)
/// with theta = |t-s| in [0, 2pi].
double fourier_kernel_closed(double s, double t, double kappa);

enum class BoundaryCondition { dirichlet, neumann };

/// Uniform-grid finite-difference Green kernel of
/// D = sum_p (-1)^p a_p D^{2p}, p = 0..alpha, alpha in {1, 2}: `green` is the
/// inverse of the discrete operator scaled by 1/h so it approximates the
/// continuum Green function at the m interior nodes.
struct Green1D {
    Mat green;  // m x m, G(x_i, x_j)
    Mat op;     // the discrete operator D_h; op * green * h = identity
    Vec nodes;
    double h;
};
Green1D green_matrix_1d(const Vec& weights, int m, Interval iv, BoundaryCondition bc);

/// Disc kernel from the orthonormal monomial basis of square-integrable
/// analytic functions: sum_{n=0..N} (n+1) t^n conj(z)^n / (pi rho^{2n+2}),
/// i.e. (pi rho^2)^{-1} (1 - t conj(z)/rho^2)^{-2}.
Cx bergman_kernel_series(Cx t, Cx z, double rho, int terms);
/// The printed variant with exponent -1 instead of -2; kept literal so the
/// ledger can adjudicate it against the basis expansion.
Cx bergman_kernel_paper(Cx t, Cx z, double rho);

/// Pinned logarithmic disc kernel, literal printed sign pattern
/// -(1/pi)[L(t conj(z)) - L(t conj(zeta1)) - L(zeta1 conj(z)) - L(|zeta1|^2)]
/// with L(w) = Log(1 - w/rho^2).
Cx log_kernel(Cx t, Cx z, double rho, Cx zeta1);
/// Same with the (+,-,-,+) pattern, which actually vanishes at the pinned
/// point and is the conditional kernel of the derivative-energy disc space.
Cx log_kernel_pinned(Cx t, Cx z, double rho, Cx zeta1);

Kernel make_poly_kernel(Interval iv, double c, int n);
Kernel make_sobolev_kernel(Interval iv);
Kernel make_fourier_kernel(int terms, double kappa = kFourierKappaPrinted);
/// Closed-form variant with the analytic s-derivative (what the verifier
/// integrates against).
Kernel make_fourier_closed_kernel(double kappa = kFourierKappaPrinted);
Kernel make_bergman_series_kernel(double rho, int terms = 200);
Kernel make_bergman_paper_kernel(double rho);
Kernel make_log_kernel(double rho, Cx zeta1);
Kernel make_log_pinned_kernel(double rho, Cx zeta1);

/// The Hilbert inner product the verifier evaluates against: either the
/// derivative-pairing sum at a point c (orders 0..order, unit weights) or
/// sum_p a_p Int D^p x . D^p y over an interval.
struct InnerProductSpec {
    enum class Kind { derivative_sum_at_point, weighted_derivative_integral };

    static InnerProductSpec derivative_sum(double c, int order);
    static InnerProductSpec derivative_integral(Vec weights, Interval iv);

    Kind kind;
    double c = 0.0;
    int order = 0;
    Vec weights;  // weights[p] multiplies Int D^p x . D^p H(., t)
    Interval iv{0.0, 1.0};
};

/// Test function with derivatives: deriv(order, u); order 0 evaluates.
struct TestFunction {
    std::function<double(int, double)> deriv;
    double operator()(double u) const { return deriv(0, u); }
};

/// |<x, H(., t)>_space - x(t)| with composite Simpson on quad_n subintervals
/// per side, split at s = t when the kernel slope jumps there.
double verify_reproducing(const Kernel& kernel, const InnerProductSpec& space,
                          const TestFunction& x, double t, int quad_n = 512);

/// Gram matrix H(p_i, p_j) on a point set.
CMat kernel_gram_matrix(const Kernel& kernel, const std::vector<Cx>& points);
/// max |H(s,t) - conj(H(t,s))| over the given pairs.
double hermitian_residual(const Kernel& kernel, const std::vector<std::pair<Cx, Cx>>& pairs);

}  // namespace cliffkit
