#include "cliffkit/calculus.hpp"

#include <cmath>
#include <limits>

namespace cliffkit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kGradStep = std::cbrt(kEps);
const double kHessStep = std::pow(kEps, 0.25);

Vec fd_gradient(const Functional& f, const Vec& a, const Vec& h) {
    Vec g(a.size());
    Vec xp = a, xm = a;
    for (std::size_t j = 0; j < a.size(); ++j) {
        xp[j] = a[j] + h[j];
        xm[j] = a[j] - h[j];
        g[j] = (f(xp) - f(xm)) / (2.0 * h[j]);
        xp[j] = a[j];
        xm[j] = a[j];
    }
    return g;
}

Mat fd_hessian(const Functional& f, const Vec& a, const Vec& h) {
    const std::size_t n = a.size();
    Mat m(n, n);
    const double f0 = f(a);
    Vec x = a;
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = a[j] + h[j];
        const double fp = f(x);
        x[j] = a[j] - h[j];
        const double fm = f(x);
        x[j] = a[j];
        m(j, j) = (fp - 2.0 * f0 + fm) / (h[j] * h[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            x[i] = a[i] + h[i]; x[j] = a[j] + h[j];
            const double fpp = f(x);
            x[j] = a[j] - h[j];
            const double fpm = f(x);
            x[i] = a[i] - h[i]; x[j] = a[j] + h[j];
            const double fmp = f(x);
            x[j] = a[j] - h[j];
            const double fmm = f(x);
            x[i] = a[i]; x[j] = a[j];
            m(i, j) = m(j, i) = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
        }
    }
    return m;
}

Mat symmetrized(Mat m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = m(j, i) = v;
        }
    return m;
}

void require_interior(const Functional& f, const Vec& a, const char* op) {
    if (a.size() != f.dim())
        throw std::invalid_argument(std::string(op) + ": point dimension mismatch");
    if (!f.in_domain(a))
        throw std::domain_error(std::string(op) + ": point outside the functional's domain");
}

}  // namespace

Functional::Functional(std::size_t dim, EvalFn eval, GradFn grad, HessFn hess,
                       DomainFn domain, std::vector<Vec> probes)
    : dim_(dim), eval_(std::move(eval)), grad_(std::move(grad)), hess_(std::move(hess)),
      domain_(std::move(domain)) {
    if (dim_ == 0) throw std::invalid_argument("Functional: dimension must be positive");
    if (!eval_) throw std::invalid_argument("Functional: evaluation map required");
    for (const Vec& a : probes) {
        if (a.size() != dim_ || !in_domain(a)) continue;
        if (grad_) {
            const Vec ga = grad_(a);
            const Vec gf = fd_gradient(*this, a, gradient_steps(a));
            for (std::size_t j = 0; j < dim_; ++j)
                if (std::abs(ga[j] - gf[j]) > 1e-5 * (1.0 + std::abs(ga[j])))
                    throw std::invalid_argument(
                        "Functional: analytic gradient disagrees with central differences");
        }
        if (hess_) {
            const Mat ha = hess_(a);
            const Mat hf = fd_hessian(*this, a, hessian_steps(a));
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j)
                    if (std::abs(ha(i, j) - hf(i, j)) > 1e-5 * (1.0 + std::abs(ha(i, j))))
                        throw std::invalid_argument(
                            "Functional: analytic Hessian disagrees with central differences");
        }
    }
}

double Functional::operator()(const Vec& x) const { return eval_(x); }

bool Functional::in_domain(const Vec& x) const { return domain_ ? domain_(x) : true; }

Functional Functional::power(double p) {
    if (p < 2.0) throw std::invalid_argument("power: exponent p >= 2 required");
    return Functional(
        1, [p](const Vec& x) { return std::pow(std::abs(x[0]), p) / p; },
        [p](const Vec& x) {
            const double s = (x[0] >= 0.0) ? 1.0 : -1.0;
            return Vec{s * std::pow(std::abs(x[0]), p - 1.0)};
        },
        [p](const Vec& x) {
            Mat h(1, 1);
            h(0, 0) = (p - 1.0) * std::pow(std::abs(x[0]), p - 2.0);
            return h;
        },
        nullptr, {{0.7}, {-1.3}, {1.9}});
}

Functional Functional::double_well() {
    return Functional(
        1, [](const Vec& x) { const double u = x[0] * x[0] - 1.0; return u * u; },
        [](const Vec& x) { return Vec{4.0 * x[0] * (x[0] * x[0] - 1.0)}; },
        [](const Vec& x) {
            Mat h(1, 1);
            h(0, 0) = 12.0 * x[0] * x[0] - 4.0;
            return h;
        },
        nullptr, {{0.4}, {-0.9}, {1.6}});
}

Functional Functional::minkowski(int p, int n) {
    if (n < 1 || p < 1 || p > n)
        throw std::invalid_argument("minkowski: need 1 <= p <= n");
    const std::size_t dim = static_cast<std::size_t>(n);
    const std::size_t pp = static_cast<std::size_t>(p);
    std::vector<Vec> probes = {Vec(dim, 0.5), Vec(dim, -1.1)};
    return Functional(
        dim,
        [pp, dim](const Vec& x) {
            double s = 0.0;
            for (std::size_t j = 0; j < dim; ++j)
                s += (j < pp ? 1.0 : -1.0) * x[j] * x[j];
            return s;
        },
        [pp, dim](const Vec& x) {
            Vec g(dim);
            for (std::size_t j = 0; j < dim; ++j)
                g[j] = (j < pp ? 2.0 : -2.0) * x[j];
            return g;
        },
        [pp, dim](const Vec&) {
            Mat h(dim, dim);
            for (std::size_t j = 0; j < dim; ++j) h(j, j) = (j < pp ? 2.0 : -2.0);
            return h;
        },
        nullptr, std::move(probes));
}

Functional Functional::by_name(const std::string& name, double p, int n) {
    if (name == "power") return power(p);
    if (name == "double_well") return double_well();
    if (name == "minkowski") return minkowski(static_cast<int>(p), n);
    throw std::invalid_argument("unknown functional '" + name + "'");
}

Vec gradient_steps(const Vec& a) {
    Vec h(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) h[j] = kGradStep * (1.0 + std::abs(a[j]));
    return h;
}

Vec hessian_steps(const Vec& a) {
    Vec h(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) h[j] = kHessStep * (1.0 + std::abs(a[j]));
    return h;
}

Vec gradient(const Functional& f, const Vec& a) {
    require_interior(f, a, "gradient");
    if (f.has_grad()) return f.analytic_grad(a);
    return fd_gradient(f, a, gradient_steps(a));
}

Vec gradient(const Functional& f, const Vec& a, double h) {
    require_interior(f, a, "gradient");
    if (h <= 0.0) throw std::invalid_argument("gradient: step must be positive");
    return fd_gradient(f, a, Vec(a.size(), h));
}

QuadraticForm hessian(const Functional& f, const Vec& a) {
    require_interior(f, a, "hessian");
    if (f.has_hess()) return QuadraticForm(symmetrized(f.analytic_hess(a)));
    return QuadraticForm(symmetrized(fd_hessian(f, a, hessian_steps(a))));
}

QuadraticForm hessian(const Functional& f, const Vec& a, double h) {
    require_interior(f, a, "hessian");
    if (h <= 0.0) throw std::invalid_argument("hessian: step must be positive");
    return QuadraticForm(symmetrized(fd_hessian(f, a, Vec(a.size(), h))));
}

Hyperplane tangent_hyperplane(const Functional& f, const Vec& y) {
    require_interior(f, y, "tangent_hyperplane");
    const Vec g = gradient(f, y);
    Hyperplane p;
    p.normal = g;
    p.normal.push_back(-1.0);
    p.offset = f(y) - dot(y, g);
    return p;
}

LegendrePoint legendre_point(const Functional& f, const Vec& y) {
    require_interior(f, y, "legendre_point");
    LegendrePoint lp;
    lp.y = y;
    lp.x_star = gradient(f, y);
    lp.z_star = f(y) - dot(y, lp.x_star);
    return lp;
}

Vec legendre_invert(const Functional& f, const Vec& x_star, const Vec& seed,
                    double tol, int max_iter) {
    require_interior(f, seed, "legendre_invert");
    if (x_star.size() != f.dim())
        throw std::invalid_argument("legendre_invert: target dimension mismatch");

    Vec y = seed;
    Vec r = gradient(f, y);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= x_star[j];
    double rn = norm2(r);

    for (int it = 0; it < max_iter; ++it) {
        if (rn <= tol) return y;
        const QuadraticForm h = hessian(f, y);
        Vec rhs(r.size());
        for (std::size_t j = 0; j < r.size(); ++j) rhs[j] = -r[j];
        Vec step;
        try {
            step = solve(h.coeffs(), rhs);
        } catch (const SingularMatrixError&) {
            throw SingularMatrixError("legendre_invert: singular curvature at iterate " +
                                      std::to_string(it));
        }
        double alpha = 1.0;
        for (int halving = 0;; ++halving) {
            Vec cand(y.size());
            for (std::size_t j = 0; j < y.size(); ++j) cand[j] = y[j] + alpha * step[j];
            if (f.in_domain(cand)) {
                Vec rc = gradient(f, cand);
                for (std::size_t j = 0; j < rc.size(); ++j) rc[j] -= x_star[j];
                const double rcn = norm2(rc);
                if (rcn < rn) {
                    y = std::move(cand);
                    r = std::move(rc);
                    rn = rcn;
                    break;
                }
            }
            if (halving >= 30)
                throw ConvergenceError("legendre_invert: stalled with residual " +
                                       std::to_string(rn));
            alpha *= 0.5;
        }
    }
    if (rn <= tol) return y;
    throw ConvergenceError("legendre_invert: residual " + std::to_string(rn) + " after " +
                           std::to_string(max_iter) + " iterations");
}

HessianPair legendre_hessian_pair(const Functional& f, const Vec& y) {
    require_interior(f, y, "legendre_hessian_pair");
    const std::size_t n = f.dim();
    const Vec x0 = gradient(f, y);
    Mat hinv;
    try {
        hinv = invert(hessian(f, y).coeffs());
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("legendre_hessian_pair: singular curvature at y");
    }

    // z* probed through the inverse gradient map. z* is stationary in y at
    // the solved point, so Newton's leftover residual enters only
    // quadratically and second differences stay clean.
    const auto zstar = [&](const Vec& xs) {
        const Vec yy = legendre_invert(f, xs, y, 1e-12, 100);
        return f(yy) - dot(yy, xs);
    };

    Vec h(n);
    for (std::size_t j = 0; j < n; ++j) h[j] = kHessStep * (1.0 + std::abs(x0[j]));

    Mat fs(n, n);
    const double z0 = zstar(x0);
    Vec x = x0;
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = x0[j] + h[j];
        const double zp = zstar(x);
        x[j] = x0[j] - h[j];
        const double zm = zstar(x);
        x[j] = x0[j];
        fs(j, j) = (zp - 2.0 * z0 + zm) / (h[j] * h[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            x[i] = x0[i] + h[i]; x[j] = x0[j] + h[j];
            const double zpp = zstar(x);
            x[j] = x0[j] - h[j];
            const double zpm = zstar(x);
            x[i] = x0[i] - h[i]; x[j] = x0[j] + h[j];
            const double zmp = zstar(x);
            x[j] = x0[j] - h[j];
            const double zmm = zstar(x);
            x[i] = x0[i]; x[j] = x0[j];
            fs(i, j) = fs(j, i) = (zpp - zpm - zmp + zmm) / (4.0 * h[i] * h[j]);
        }
    }
    return {QuadraticForm(symmetrized(std::move(fs))), QuadraticForm(symmetrized(hinv))};
}

CliffordFrame clifford_at(const Functional& f, const Vec& a) {
    require_interior(f, a, "clifford_at");
    const QuadraticForm h = hessian(f, a);
    const Signature sig = signature(h);
    if (sig.n_zero != 0)
        throw DegenerateHessianError(
            "clifford_at: degenerate curvature (" + std::to_string(sig.n_plus) + "," +
                std::to_string(sig.n_minus) + "," + std::to_string(sig.n_zero) + ")",
            sig);
    const EigenSym& eig = h.eigen();
    return {CliffordSpace(eig.values), eig.vectors};
}

}  // namespace cliffkit
