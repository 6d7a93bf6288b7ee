#include "cliffkit/kernels.hpp"

#include <cmath>
#include <numbers>

namespace cliffkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Quadrature touches the endpoints, so the closure is allowed; the kernel
// formulas extend continuously there.
void require_in_interval(double v, Interval iv, const char* what) {
    if (!(v >= iv.a && v <= iv.b))
        throw std::domain_error(std::string(what) + ": argument " + std::to_string(v) +
                                " outside (" + std::to_string(iv.a) + ", " +
                                std::to_string(iv.b) + ")");
}

void require_in_disc(Cx v, double rho, const char* what) {
    if (!(std::abs(v) < rho))
        throw std::domain_error(std::string(what) + ": point outside the disc of radius " +
                                std::to_string(rho));
}

}  // namespace

Kernel::Kernel(std::string name, KernelDomain domain, FieldTag field, DerivFn deriv,
               bool kink_at_t, nlohmann::json params)
    : name_(std::move(name)), domain_(domain), field_(field), deriv_(std::move(deriv)),
      kink_at_t_(kink_at_t), params_(std::move(params)) {}

double poly_kernel(double s, double t, double c, int n) {
    if (n < 0) throw std::invalid_argument("poly_kernel: order must be >= 0");
    double sum = 0.0, sp = 1.0, tp = 1.0, fact = 1.0;
    for (int j = 0;; ++j) {
        sum += (sp / fact) * (tp / fact);
        if (j == n) break;
        sp *= (s - c);
        tp *= (t - c);
        fact *= (j + 1);
    }
    return sum;
}

double sobolev_kernel(double s, double t, double a) { return std::min(t - a, s - a); }

double fourier_kernel(double s, double t, int terms, double kappa) {
    if (terms < 1) throw std::invalid_argument("fourier_kernel: at least one term required");
    if (kappa <= 0.0) throw std::invalid_argument("fourier_kernel: normalization must be positive");
    // Summed smallest-first so the long tail does not drown in rounding.
    double sum = 0.0;
    for (int p = terms; p >= 1; --p) sum += std::cos(p * (t - s)) / (static_cast<double>(p) * p);
    return kappa * sum;
}

double fourier_kernel_closed(double s, double t, double kappa) {
    const double theta = std::abs(t - s);
    return kappa * (kPi * kPi / 6.0 - kPi * theta / 2.0 + theta * theta / 4.0);
}

Green1D green_matrix_1d(const Vec& weights, int m, Interval iv, BoundaryCondition bc) {
    const int alpha = static_cast<int>(weights.size()) - 1;
    if (alpha < 1 || alpha > 2)
        throw std::invalid_argument("green_matrix_1d: weights for orders 0..alpha, alpha in {1,2}");
    if (m < 3) throw std::invalid_argument("green_matrix_1d: at least 3 interior nodes");
    for (double w : weights)
        if (w < 0.0) throw std::invalid_argument("green_matrix_1d: weights must be nonnegative");
    if (!(iv.b > iv.a)) throw std::invalid_argument("green_matrix_1d: empty interval");

    const std::size_t mm = static_cast<std::size_t>(m);
    const double h = (iv.b - iv.a) / (m + 1);
    Green1D out;
    out.h = h;
    out.nodes.resize(mm);
    for (std::size_t i = 0; i < mm; ++i) out.nodes[i] = iv.a + h * static_cast<double>(i + 1);

    Mat d(mm, mm);
    const double a0 = weights[0];
    const double a1 = weights[1];
    for (std::size_t i = 0; i < mm; ++i) d(i, i) += a0;

    // -a1 D^2, three-point stencil. Dirichlet drops the boundary values;
    // Neumann reflects the ghost node (u_0 = u_1, u_{m+1} = u_m).
    const double c1 = a1 / (h * h);
    for (std::size_t i = 0; i < mm; ++i) {
        d(i, i) += 2.0 * c1;
        if (i > 0) d(i, i - 1) -= c1;
        if (i + 1 < mm) d(i, i + 1) -= c1;
    }
    if (bc == BoundaryCondition::neumann) {
        d(0, 0) -= c1;
        d(mm - 1, mm - 1) -= c1;
    }

    if (alpha == 2) {
        // +a2 D^4, five-point stencil. Dirichlet: clamped ends (u = u' = 0),
        // ghost u_{-1} = u_1. Neumann: even reflection u_0 = u_1, u_{-1} = u_2.
        const double c2 = weights[2] / (h * h * h * h);
        for (std::size_t i = 0; i < mm; ++i) {
            const auto put = [&](std::ptrdiff_t col, double v) {
                if (col >= 0 && col < static_cast<std::ptrdiff_t>(mm))
                    d(i, static_cast<std::size_t>(col)) += v;
            };
            const std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(i);
            put(ii, 6.0 * c2);
            put(ii - 1, -4.0 * c2);
            put(ii + 1, -4.0 * c2);
            put(ii - 2, c2);
            put(ii + 2, c2);
            if (bc == BoundaryCondition::dirichlet) {
                if (ii == 0) put(0, c2);           // ghost u_{-1} = u_1
                if (ii == static_cast<std::ptrdiff_t>(mm) - 1) put(ii, c2);
            } else {
                if (ii == 0) { put(0, -4.0 * c2); put(1, c2); }  // u_0 = u_1, u_{-1} = u_2
                if (ii == 1) put(0, c2);                          // u_0 = u_1
                if (ii == static_cast<std::ptrdiff_t>(mm) - 1) { put(ii, -4.0 * c2); put(ii - 1, c2); }
                if (ii == static_cast<std::ptrdiff_t>(mm) - 2) put(ii + 1, c2);
            }
        }
    }

    out.op = d;
    try {
        out.green = invert(d);
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError(
            "green_matrix_1d: singular discrete operator (pure-Neumann with a0 = 0?)");
    }
    out.green *= 1.0 / h;
    return out;
}

Cx bergman_kernel_series(Cx t, Cx z, double rho, int terms) {
    if (terms < 0) throw std::invalid_argument("bergman_kernel_series: terms must be >= 0");
    const Cx w = t * std::conj(z) / (rho * rho);
    Cx sum(0.0, 0.0);
    Cx wp(1.0, 0.0);
    for (int n = 0; n <= terms; ++n) {
        sum += static_cast<double>(n + 1) * wp;
        wp *= w;
    }
    return sum / (kPi * rho * rho);
}

Cx bergman_kernel_paper(Cx t, Cx z, double rho) {
    const Cx w = t * std::conj(z) / (rho * rho);
    return (1.0 / (kPi * rho * rho)) / (Cx(1.0, 0.0) - w);
}

namespace {

Cx log_one_minus(Cx w, double rho) { return std::log(Cx(1.0, 0.0) - w / (rho * rho)); }

}  // namespace

Cx log_kernel(Cx t, Cx z, double rho, Cx zeta1) {
    const Cx zc = std::conj(z);
    const Cx z1c = std::conj(zeta1);
    return (-1.0 / kPi) * (log_one_minus(t * zc, rho) - log_one_minus(t * z1c, rho) -
                           log_one_minus(zeta1 * zc, rho) -
                           log_one_minus(Cx(std::norm(zeta1), 0.0), rho));
}

Cx log_kernel_pinned(Cx t, Cx z, double rho, Cx zeta1) {
    const Cx zc = std::conj(z);
    const Cx z1c = std::conj(zeta1);
    return (-1.0 / kPi) * (log_one_minus(t * zc, rho) - log_one_minus(t * z1c, rho) -
                           log_one_minus(zeta1 * zc, rho) +
                           log_one_minus(Cx(std::norm(zeta1), 0.0), rho));
}

Kernel make_poly_kernel(Interval iv, double c, int n) {
    require_in_interval(c, iv, "poly_kernel");
    if (n < 0) throw std::invalid_argument("poly_kernel: order must be >= 0");
    auto deriv = [iv, c, n](int order, Cx sc, Cx tc) -> Cx {
        const double s = sc.real(), t = tc.real();
        require_in_interval(s, iv, "poly_kernel");
        require_in_interval(t, iv, "poly_kernel");
        // d^order/ds^order: sum_{j=order..n} (s-c)^{j-order}/(j-order)! (t-c)^j/j!
        double sum = 0.0;
        double tp = 1.0, tfact = 1.0;
        for (int j = 0; j <= n; ++j) {
            if (j >= order) {
                double sp = 1.0, sfact = 1.0;
                for (int k = 0; k < j - order; ++k) {
                    sp *= (s - c);
                    sfact *= (k + 1);
                }
                sum += (sp / sfact) * (tp / tfact);
            }
            tp *= (t - c);
            tfact *= (j + 1);
        }
        return Cx(sum, 0.0);
    };
    return Kernel("poly", iv, FieldTag::real_field, deriv, false,
                  {{"a", iv.a}, {"b", iv.b}, {"c", c}, {"n", n}});
}

Kernel make_sobolev_kernel(Interval iv) {
    auto deriv = [iv](int order, Cx sc, Cx tc) -> Cx {
        const double s = sc.real(), t = tc.real();
        require_in_interval(s, iv, "sobolev_kernel");
        require_in_interval(t, iv, "sobolev_kernel");
        switch (order) {
            case 0: return Cx(sobolev_kernel(s, t, iv.a), 0.0);
            case 1: return Cx(s < t ? 1.0 : 0.0, 0.0);
            default: return Cx(0.0, 0.0);
        }
    };
    return Kernel("sobolev", iv, FieldTag::real_field, deriv, true,
                  {{"a", iv.a}, {"b", iv.b}});
}

Kernel make_fourier_kernel(int terms, double kappa) {
    const Interval iv{0.0, 2.0 * kPi};
    auto deriv = [iv, terms, kappa](int order, Cx sc, Cx tc) -> Cx {
        const double s = sc.real(), t = tc.real();
        require_in_interval(s, iv, "fourier_kernel");
        require_in_interval(t, iv, "fourier_kernel");
        if (order == 0) return Cx(fourier_kernel(s, t, terms, kappa), 0.0);
        if (order == 1) {
            double sum = 0.0;
            for (int p = terms; p >= 1; --p) sum += std::sin(p * (t - s)) / p;
            return Cx(kappa * sum, 0.0);
        }
        throw std::invalid_argument("fourier_kernel: derivative order above 1");
    };
    return Kernel("fourier", iv, FieldTag::real_field, deriv, false,
                  {{"terms", terms}, {"kappa", kappa}});
}

Kernel make_fourier_closed_kernel(double kappa) {
    const Interval iv{0.0, 2.0 * kPi};
    auto deriv = [iv, kappa](int order, Cx sc, Cx tc) -> Cx {
        const double s = sc.real(), t = tc.real();
        require_in_interval(s, iv, "fourier_kernel");
        require_in_interval(t, iv, "fourier_kernel");
        const double theta = std::abs(t - s);
        switch (order) {
            case 0: return Cx(fourier_kernel_closed(s, t, kappa), 0.0);
            case 1: {
                const double sgn = (t > s) ? 1.0 : (t < s ? -1.0 : 0.0);
                return Cx(kappa * sgn * (kPi - theta) / 2.0, 0.0);
            }
            default: throw std::invalid_argument("fourier_kernel: derivative order above 1");
        }
    };
    return Kernel("fourier_closed", iv, FieldTag::real_field, deriv, true, {{"kappa", kappa}});
}

namespace {

Kernel make_disc_kernel(std::string name, double rho, std::function<Cx(Cx, Cx)> eval,
                        nlohmann::json params) {
    auto deriv = [rho, eval = std::move(eval), name](int order, Cx t, Cx z) -> Cx {
        if (order != 0)
            throw std::invalid_argument(name + ": analytic s-derivatives not provided");
        require_in_disc(t, rho, name.c_str());
        require_in_disc(z, rho, name.c_str());
        return eval(t, z);
    };
    return Kernel(std::move(name), Disc{rho}, FieldTag::complex_field, deriv, false,
                  std::move(params));
}

}  // namespace

Kernel make_bergman_series_kernel(double rho, int terms) {
    return make_disc_kernel(
        "bergman_series", rho,
        [rho, terms](Cx t, Cx z) { return bergman_kernel_series(t, z, rho, terms); },
        {{"rho", rho}, {"terms", terms}});
}

Kernel make_bergman_paper_kernel(double rho) {
    return make_disc_kernel(
        "bergman_paper", rho, [rho](Cx t, Cx z) { return bergman_kernel_paper(t, z, rho); },
        {{"rho", rho}});
}

Kernel make_log_kernel(double rho, Cx zeta1) {
    require_in_disc(zeta1, rho, "log_kernel");
    return make_disc_kernel(
        "log", rho, [rho, zeta1](Cx t, Cx z) { return log_kernel(t, z, rho, zeta1); },
        {{"rho", rho}, {"zeta1_re", zeta1.real()}, {"zeta1_im", zeta1.imag()}});
}

Kernel make_log_pinned_kernel(double rho, Cx zeta1) {
    require_in_disc(zeta1, rho, "log_kernel");
    return make_disc_kernel(
        "log_pinned", rho,
        [rho, zeta1](Cx t, Cx z) { return log_kernel_pinned(t, z, rho, zeta1); },
        {{"rho", rho}, {"zeta1_re", zeta1.real()}, {"zeta1_im", zeta1.imag()}});
}

InnerProductSpec InnerProductSpec::derivative_sum(double c, int order) {
    if (order < 0) throw std::invalid_argument("InnerProductSpec: order must be >= 0");
    InnerProductSpec s;
    s.kind = Kind::derivative_sum_at_point;
    s.c = c;
    s.order = order;
    return s;
}

InnerProductSpec InnerProductSpec::derivative_integral(Vec weights, Interval iv) {
    bool positive = false;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("InnerProductSpec: negative weight");
        if (w > 0.0) positive = true;
    }
    if (!positive) throw std::invalid_argument("InnerProductSpec: at least one positive weight");
    InnerProductSpec s;
    s.kind = Kind::weighted_derivative_integral;
    s.weights = std::move(weights);
    s.iv = iv;
    return s;
}

namespace {

// Composite Simpson on [lo, hi] with an even number (>= 2) of subintervals.
double simpson(const std::function<double(double)>& f, double lo, double hi, int n) {
    if (hi <= lo) return 0.0;
    if (n < 2) n = 2;
    if (n % 2 != 0) ++n;
    const double h = (hi - lo) / n;
    double sum = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) sum += f(lo + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace

double verify_reproducing(const Kernel& kernel, const InnerProductSpec& space,
                          const TestFunction& x, double t, int quad_n) {
    if (space.kind == InnerProductSpec::Kind::derivative_sum_at_point) {
        double ip = 0.0;
        for (int j = 0; j <= space.order; ++j)
            ip += x.deriv(j, space.c) * kernel.deriv_s(j, Cx(space.c, 0.0), Cx(t, 0.0)).real();
        return std::abs(ip - x(t));
    }

    if (quad_n < 16) throw std::invalid_argument("verify_reproducing: quad_n must be >= 16");
    const Interval* iv = std::get_if<Interval>(&kernel.domain());
    if (iv == nullptr || iv->a != space.iv.a || iv->b != space.iv.b)
        throw std::invalid_argument("verify_reproducing: kernel and space domains differ");

    double ip = 0.0;
    for (std::size_t p = 0; p < space.weights.size(); ++p) {
        if (space.weights[p] == 0.0) continue;
        const int order = static_cast<int>(p);
        auto integrand = [&](double u) {
            return x.deriv(order, u) * kernel.deriv_s(order, Cx(u, 0.0), Cx(t, 0.0)).real();
        };
        double part;
        if (kernel.kink_at_t() && t > iv->a && t < iv->b) {
            // Each panel needs its one-sided limit at the kink; sampling one
            // ulp inside the panel realizes it for piecewise-smooth slopes.
            auto left = [&](double u) {
                return integrand(u >= t ? std::nextafter(t, iv->a) : u);
            };
            auto right = [&](double u) {
                return integrand(u <= t ? std::nextafter(t, iv->b) : u);
            };
            part = simpson(left, iv->a, t, quad_n) + simpson(right, t, iv->b, quad_n);
        } else {
            part = simpson(integrand, iv->a, iv->b, 2 * quad_n);
        }
        ip += space.weights[p] * part;
    }
    return std::abs(ip - x(t));
}

CMat kernel_gram_matrix(const Kernel& kernel, const std::vector<Cx>& points) {
    CMat g(points.size(), points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            g(i, j) = kernel(points[i], points[j]);
    return g;
}

double hermitian_residual(const Kernel& kernel, const std::vector<std::pair<Cx, Cx>>& pairs) {
    double worst = 0.0;
    for (const auto& [s, t] : pairs)
        worst = std::max(worst, std::abs(kernel(s, t) - std::conj(kernel(t, s))));
    return worst;
}

}  // namespace cliffkit
