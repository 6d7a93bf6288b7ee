#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliffkit/calculus.hpp"
#include "cliffkit/clifford.hpp"
#include "cliffkit/fock_kernels.hpp"
#include "cliffkit/kernels.hpp"
#include "cliffkit/ledger.hpp"
#include "cliffkit/quadratic.hpp"
#include "cliffkit/tensor.hpp"
#include "json.hpp"

using namespace cliffkit;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "cliffkit/1";

void emit_json(json j) {
    j["schema"] = kSchema;
    std::cout << j.dump(2) << "\n";
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Vec parse_list(const std::string& text) {
    Vec out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated number list");
    return out;
}

std::vector<Vec> parse_points(const std::string& text) {
    std::vector<Vec> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(parse_list(tok));
    if (out.empty()) throw CLI::ValidationError("expected semicolon-separated points");
    return out;
}

// "0.3" or "0.3:0.2" (real:imag).
Cx parse_complex(const std::string& tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) return Cx(std::stod(tok), 0.0);
    return Cx(std::stod(tok.substr(0, colon)), std::stod(tok.substr(colon + 1)));
}

std::vector<Cx> parse_complex_list(const std::string& text) {
    std::vector<Cx> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(parse_complex(tok));
    if (out.empty()) throw CLI::ValidationError("expected a comma-separated point list");
    return out;
}

json complex_json(Cx v) { return json::array({v.real(), v.imag()}); }

json mat_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

json cmat_json(const CMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// quadratic

struct QuadraticArgs {
    std::string coeffs;
    std::string x, y;
    double tol = -1.0;
};

QuadraticForm form_from_flag(const std::string& coeffs) {
    const json j = json::parse(coeffs);
    const std::size_t n = j.size();
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (j[i].size() != n) throw std::invalid_argument("coeffs: square array required");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = j[i][k].get<double>();
    }
    return QuadraticForm(std::move(m));
}

void add_quadratic(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("quadratic", "quadratic/bilinear form operations");
    auto args = std::make_shared<QuadraticArgs>();

    auto* eval = cmd->add_subcommand("eval", "q(x) = x^T C x");
    eval->add_option("--coeffs", args->coeffs, "JSON rows, e.g. [[1,0],[0,1]]")->required();
    eval->add_option("--x", args->x)->required();
    eval->callback([args, &rc] {
        emit_json({{"value", eval_q(form_from_flag(args->coeffs), parse_list(args->x))}});
        rc = 0;
    });

    auto* pol = cmd->add_subcommand("polarize", "b(x,y) = (q(x+y)-q(x)-q(y))/2");
    pol->add_option("--coeffs", args->coeffs)->required();
    pol->add_option("--x", args->x)->required();
    pol->add_option("--y", args->y)->required();
    pol->callback([args, &rc] {
        emit_json({{"value", polarize(form_from_flag(args->coeffs), parse_list(args->x),
                                      parse_list(args->y))}});
        rc = 0;
    });

    auto* diag = cmd->add_subcommand("diag", "orthonormal eigenframe");
    diag->add_option("--coeffs", args->coeffs)->required();
    diag->callback([args, &rc] {
        const EigenSym e = diagonalize(form_from_flag(args->coeffs));
        emit_json({{"eigenvalues", e.values}, {"eigenvectors", mat_json(e.vectors)}});
        rc = 0;
    });

    auto* sig = cmd->add_subcommand("signature", "eigenvalue sign counts");
    sig->add_option("--coeffs", args->coeffs)->required();
    sig->add_option("--tol", args->tol, "zero threshold (default 1e-9 max|lambda|)");
    sig->callback([args, &rc] {
        const Signature s = signature(form_from_flag(args->coeffs), args->tol);
        emit_json({{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}});
        rc = 0;
    });
}

// ---------------------------------------------------------------------------
// clifford

struct CliffordArgs {
    int n = 0;
    std::string diag, a, b, gamma = "hs";
    int k = 0;
};

void add_clifford(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("clifford", "finite Clifford algebra over a diagonal metric");
    auto args = std::make_shared<CliffordArgs>();

    const auto space_of = [args] {
        Vec d = parse_list(args->diag);
        if (args->n > 0 && static_cast<std::size_t>(args->n) != d.size())
            throw std::invalid_argument("--n does not match --diag length");
        return CliffordSpace(d);
    };

    auto* mul = cmd->add_subcommand("mul", "geometric product");
    mul->add_option("--n", args->n);
    mul->add_option("--diag", args->diag, "metric values b(e_j,e_j)")->required();
    mul->add_option("--a", args->a, "multivector, e.g. \"0.5e1e2 + e3\"")->required();
    mul->add_option("--b", args->b)->required();
    mul->callback([args, space_of, &rc] {
        const CliffordSpace sp = space_of();
        emit_json(to_json(geometric_product(parse_multivector(sp, args->a),
                                            parse_multivector(sp, args->b))));
        rc = 0;
    });

    auto* wed = cmd->add_subcommand("wedge", "exterior product");
    wed->add_option("--n", args->n);
    wed->add_option("--diag", args->diag)->required();
    wed->add_option("--a", args->a)->required();
    wed->add_option("--b", args->b)->required();
    wed->callback([args, space_of, &rc] {
        const CliffordSpace sp = space_of();
        emit_json(to_json(wedge(parse_multivector(sp, args->a), parse_multivector(sp, args->b))));
        rc = 0;
    });

    auto* grade = cmd->add_subcommand("grade", "grade projection");
    grade->add_option("--n", args->n);
    grade->add_option("--diag", args->diag)->required();
    grade->add_option("--a", args->a)->required();
    grade->add_option("--k", args->k, "grade")->required();
    grade->callback([args, space_of, &rc] {
        emit_json(to_json(grade_project(parse_multivector(space_of(), args->a), args->k)));
        rc = 0;
    });

    auto* norm = cmd->add_subcommand("norm", "gradewise tensor norm");
    norm->add_option("--n", args->n);
    norm->add_option("--diag", args->diag)->required();
    norm->add_option("--a", args->a)->required();
    norm->add_option("--gamma", args->gamma, "injective|hs|projective");
    norm->callback([args, space_of, &rc] {
        TensorNormTag tag;
        if (args->gamma == "injective") tag = TensorNormTag::injective;
        else if (args->gamma == "hs") tag = TensorNormTag::hs;
        else if (args->gamma == "projective") tag = TensorNormTag::projective;
        else throw std::invalid_argument("unknown norm tag '" + args->gamma + "'");
        emit_json({{"gamma", args->gamma},
                   {"value", norm_gamma(parse_multivector(space_of(), args->a),
                                        VectorNormTag::euclidean, tag)}});
        rc = 0;
    });
}

// ---------------------------------------------------------------------------
// legendre

struct LegendreArgs {
    std::string f = "power";
    double p = 2.0;
    int n = 2;
    std::string y, ys, xstar, seed_point;
    double ymin = -1.0, ymax = 1.0;
    int count = 50;
    double tol = 1e-10;
    int max_iter = 100;
    std::string output = "json";
};

void legendre_common(CLI::App* sub, std::shared_ptr<LegendreArgs> args) {
    sub->add_option("--f", args->f, "power|double_well|minkowski");
    sub->add_option("--p", args->p, "exponent (power) or positive-part count (minkowski)");
    sub->add_option("--n", args->n, "dimension (minkowski)");
}

void add_legendre(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("legendre", "transform of a functional's graph");
    auto args = std::make_shared<LegendreArgs>();

    auto* point = cmd->add_subcommand("point", "(x*, z*) at a single y");
    legendre_common(point, args);
    point->add_option("--y", args->y)->required();
    point->callback([args, &rc] {
        const Functional f = Functional::by_name(args->f, args->p, args->n);
        const LegendrePoint lp = legendre_point(f, parse_list(args->y));
        emit_json({{"y", lp.y}, {"x_star", lp.x_star}, {"z_star", lp.z_star}});
        rc = 0;
    });

    auto* grid = cmd->add_subcommand("grid", "CSV columns y_1..y_n, x*_1..x*_n, z*");
    legendre_common(grid, args);
    grid->add_option("--ys", args->ys, "semicolon-separated points (multi-d)");
    grid->add_option("--ymin", args->ymin, "1-d grid start");
    grid->add_option("--ymax", args->ymax, "1-d grid end");
    grid->add_option("--count", args->count, "1-d grid size");
    grid->callback([args, &rc] {
        const Functional f = Functional::by_name(args->f, args->p, args->n);
        std::vector<Vec> points;
        if (!args->ys.empty()) {
            points = parse_points(args->ys);
        } else {
            if (args->count < 2) throw std::invalid_argument("--count must be at least 2");
            if (f.dim() != 1)
                throw std::invalid_argument("--ymin/--ymax grids need a 1-d functional");
            for (int k = 0; k < args->count; ++k)
                points.push_back({args->ymin + (args->ymax - args->ymin) * k /
                                                   (args->count - 1)});
        }
        std::string header;
        for (std::size_t j = 1; j <= f.dim(); ++j) header += "y" + std::to_string(j) + ",";
        for (std::size_t j = 1; j <= f.dim(); ++j) header += "xstar" + std::to_string(j) + ",";
        std::cout << header << "zstar\n";
        for (const Vec& y : points) {
            const LegendrePoint lp = legendre_point(f, y);
            std::string row;
            for (double v : lp.y) row += num(v) + ",";
            for (double v : lp.x_star) row += num(v) + ",";
            std::cout << row << num(lp.z_star) << "\n";
        }
        rc = 0;
    });

    auto* invert = cmd->add_subcommand("invert", "solve f'(y) = x* near a seed");
    legendre_common(invert, args);
    invert->add_option("--xstar", args->xstar)->required();
    invert->add_option("--seed-point", args->seed_point)->required();
    invert->add_option("--tol", args->tol);
    invert->add_option("--max-iter", args->max_iter);
    invert->callback([args, &rc] {
        const Functional f = Functional::by_name(args->f, args->p, args->n);
        const Vec y = legendre_invert(f, parse_list(args->xstar), parse_list(args->seed_point),
                                      args->tol, args->max_iter);
        emit_json({{"y", y}});
        rc = 0;
    });

    auto* pair = cmd->add_subcommand("hesspair", "(f*)'' probe and ((f)'')^{-1}");
    legendre_common(pair, args);
    pair->add_option("--y", args->y)->required();
    pair->callback([args, &rc] {
        const Functional f = Functional::by_name(args->f, args->p, args->n);
        const HessianPair hp = legendre_hessian_pair(f, parse_list(args->y));
        emit_json({{"fstar_hess", mat_json(hp.fstar_hess.coeffs())},
                   {"inverse_hess", mat_json(hp.inverse_hess.coeffs())}});
        rc = 0;
    });

    auto* tang = cmd->add_subcommand("tangent", "tangent hyperplane of the graph");
    legendre_common(tang, args);
    tang->add_option("--y", args->y)->required();
    tang->callback([args, &rc] {
        const Functional f = Functional::by_name(args->f, args->p, args->n);
        const Hyperplane h = tangent_hyperplane(f, parse_list(args->y));
        emit_json({{"normal", h.normal}, {"offset", h.offset}});
        rc = 0;
    });
}

// ---------------------------------------------------------------------------
// tensor

struct TensorArgs {
    std::string x, y, entries, alpha, beta, ambient = "l2";
    int rows = 0, cols = 0, lmax = 1;
    std::size_t n = 0;
    double agm_tol = 1e-12;
    std::string output = "csv";
};

Tensor2 tensor_from_args(const TensorArgs& a) {
    if (!a.x.empty() && !a.y.empty()) return tensor2(parse_list(a.x), parse_list(a.y));
    if (a.rows > 0 && a.cols > 0 && !a.entries.empty())
        return Tensor2(static_cast<std::size_t>(a.rows), static_cast<std::size_t>(a.cols),
                       parse_list(a.entries));
    throw std::invalid_argument("give either --x/--y or --rows/--cols/--entries");
}

CoeffSequence sequence_from(const std::string& coeffs, const std::string& ambient) {
    CoeffSequence s;
    s.coeffs = parse_list(coeffs);
    if (ambient == "l1") s.ambient = CoeffSequence::Ambient::l1;
    else if (ambient == "l2") s.ambient = CoeffSequence::Ambient::l2;
    else throw std::invalid_argument("ambient must be l1 or l2");
    return s;
}

void add_tensor(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("tensor", "order-2 norms, shells, truncations");
    auto args = std::make_shared<TensorArgs>();

    auto* norms = cmd->add_subcommand("norms", "injective/hs/projective/sigma of a tensor");
    norms->add_option("--x", args->x);
    norms->add_option("--y", args->y);
    norms->add_option("--rows", args->rows);
    norms->add_option("--cols", args->cols);
    norms->add_option("--entries", args->entries, "row-major");
    norms->add_option("--agm-tol", args->agm_tol);
    norms->callback([args, &rc] {
        const Tensor2 t = tensor_from_args(*args);
        emit_json({{"injective", injective_norm(t)},
                   {"hs", hs_norm(t)},
                   {"projective", projective_norm(t)},
                   {"sigma", sigma_norm(t, args->agm_tol)},
                   {"singular_values", t.singular_values()}});
        rc = 0;
    });

    auto* shells = cmd->add_subcommand("shells", "index shells J_1..J_lmax as CSV pairs");
    shells->add_option("--lmax", args->lmax)->required();
    shells->add_option("--output", args->output, "csv|json");
    shells->callback([args, &rc] {
        const auto pairs = enumerate_shells(args->lmax);
        if (args->output == "json") {
            json arr = json::array();
            for (auto [j, k] : pairs) arr.push_back({j, k});
            emit_json({{"pairs", arr}});
        } else {
            for (auto [j, k] : pairs) std::cout << j << "," << k << "\n";
        }
        rc = 0;
    });

    auto* trunc = cmd->add_subcommand("truncate", "head/tail split of a coefficient sequence");
    trunc->add_option("--alpha", args->alpha, "coefficients")->required();
    trunc->add_option("--ambient", args->ambient, "l1|l2");
    trunc->add_option("--n", args->n)->required();
    trunc->callback([args, &rc] {
        const SchauderSplit s =
            schauder_truncate(sequence_from(args->alpha, args->ambient), args->n);
        emit_json({{"head", s.head.coeffs}, {"tail_norm", s.tail_norm}});
        rc = 0;
    });

    auto* bound = cmd->add_subcommand("bound", "remainder bound for truncated x (x) y");
    bound->add_option("--alpha", args->alpha)->required();
    bound->add_option("--beta", args->beta)->required();
    bound->add_option("--n", args->n)->required();
    bound->callback([args, &rc] {
        emit_json({{"bound", tensor_basis_truncation_error(sequence_from(args->alpha, "l2"),
                                                           sequence_from(args->beta, "l2"),
                                                           args->n)}});
        rc = 0;
    });
}

// ---------------------------------------------------------------------------
// kernel

struct KernelArgs {
    std::string name;
    double a = 0.0, b = 1.0, c = 0.0, kappa = kFourierKappaPrinted, rho = 1.0;
    int n = 3, terms = 1000, m = 32, quad_n = 512, grid = 0;
    std::string bc = "dirichlet", weights = "0,1", zeta1 = "0", form = "series";
    std::string s, t, test = "sin";
};

Kernel kernel_from_args(const KernelArgs& k) {
    if (k.name == "poly") return make_poly_kernel({k.a, k.b}, k.c, k.n);
    if (k.name == "sobolev") return make_sobolev_kernel({k.a, k.b});
    if (k.name == "fourier") return make_fourier_kernel(k.terms, k.kappa);
    if (k.name == "fourier_closed") return make_fourier_closed_kernel(k.kappa);
    if (k.name == "bergman")
        return k.form == "paper" ? make_bergman_paper_kernel(k.rho)
                                 : make_bergman_series_kernel(k.rho, k.terms);
    if (k.name == "log") {
        const Cx z1 = parse_complex(k.zeta1);
        return k.form == "pinned" ? make_log_pinned_kernel(k.rho, z1)
                                  : make_log_kernel(k.rho, z1);
    }
    throw std::invalid_argument("unknown kernel '" + k.name + "'");
}

TestFunction test_function(const std::string& name) {
    if (name == "id") return TestFunction{[](int o, double u) {
        return o == 0 ? u : (o == 1 ? 1.0 : 0.0);
    }};
    if (name == "sin") return TestFunction{[](int o, double u) {
        switch (o % 4) {
            case 0: return std::sin(u);
            case 1: return std::cos(u);
            case 2: return -std::sin(u);
            default: return -std::cos(u);
        }
    }};
    if (name == "square") return TestFunction{[](int o, double u) {
        return o == 0 ? u * u : (o == 1 ? 2.0 * u : (o == 2 ? 2.0 : 0.0));
    }};
    if (name == "expm1") return TestFunction{[](int o, double u) {
        return o == 0 ? std::expm1(u) : std::exp(u);
    }};
    throw std::invalid_argument("unknown test function '" + name + "'");
}

void kernel_params(CLI::App* sub, std::shared_ptr<KernelArgs> args) {
    sub->add_option("--name", args->name, "poly|sobolev|fourier|green1d|bergman|log")
        ->required();
    sub->add_option("--a", args->a);
    sub->add_option("--b", args->b);
    sub->add_option("--c", args->c);
    sub->add_option("--n", args->n);
    sub->add_option("--terms", args->terms);
    sub->add_option("--kappa", args->kappa);
    sub->add_option("--rho", args->rho);
    sub->add_option("--zeta1", args->zeta1, "pinned point, re or re:im");
    sub->add_option("--form", args->form, "series|paper (bergman), paper|pinned (log)");
    sub->add_option("--weights", args->weights, "a_0,..,a_alpha (green1d)");
    sub->add_option("--m", args->m, "interior nodes (green1d)");
    sub->add_option("--bc", args->bc, "dirichlet|neumann (green1d)");
}

void add_kernel(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("kernel", "reproducing kernels and their verifier");
    auto args = std::make_shared<KernelArgs>();

    auto* eval = cmd->add_subcommand("eval", "evaluate at (s,t) or emit a grid table");
    kernel_params(eval, args);
    eval->add_option("--s", args->s, "point, re or re:im");
    eval->add_option("--t", args->t);
    eval->add_option("--grid", args->grid, "emit a grid x grid CSV table");
    eval->callback([args, &rc] {
        if (args->name == "green1d") {
            const BoundaryCondition bc = args->bc == "neumann" ? BoundaryCondition::neumann
                                                               : BoundaryCondition::dirichlet;
            const Green1D g =
                green_matrix_1d(parse_list(args->weights), args->m, {args->a, args->b}, bc);
            for (std::size_t i = 0; i < g.green.rows(); ++i) {
                std::string row;
                for (std::size_t j = 0; j < g.green.cols(); ++j)
                    row += (j ? "," : "") + num(g.green(i, j));
                std::cout << row << "\n";
            }
            rc = 0;
            return;
        }
        const Kernel k = kernel_from_args(*args);
        if (args->grid > 0) {
            const bool complex_domain = std::holds_alternative<Disc>(k.domain());
            std::vector<Cx> pts;
            if (complex_domain) {
                const double r = 0.9 * std::get<Disc>(k.domain()).rho;
                for (int i = 0; i < args->grid; ++i)
                    pts.push_back(Cx(-r + 2.0 * r * i / (args->grid - 1), 0.0));
            } else {
                const Interval iv = std::get<Interval>(k.domain());
                const double pad = 1e-6 * (iv.b - iv.a);
                for (int i = 0; i < args->grid; ++i)
                    pts.push_back(Cx(iv.a + pad + (iv.b - iv.a - 2 * pad) * i / (args->grid - 1),
                                     0.0));
            }
            for (const Cx s : pts) {
                std::string row;
                for (const Cx t : pts) {
                    const Cx v = k(s, t);
                    row += row.empty() ? "" : ",";
                    row += num(v.real());
                    if (k.field() == FieldTag::complex_field) row += "," + num(v.imag());
                }
                std::cout << row << "\n";
            }
            rc = 0;
            return;
        }
        if (args->s.empty() || args->t.empty())
            throw std::invalid_argument("kernel eval needs --s/--t or --grid");
        const Cx v = k(parse_complex(args->s), parse_complex(args->t));
        if (k.field() == FieldTag::complex_field)
            emit_json({{"value", complex_json(v)}});
        else
            emit_json({{"value", v.real()}});
        rc = 0;
    });

    auto* verify = cmd->add_subcommand("verify", "reproducing-property residual");
    kernel_params(verify, args);
    verify->add_option("--t", args->t)->required();
    verify->add_option("--test", args->test, "id|sin|square|expm1");
    verify->add_option("--quad-n", args->quad_n);
    verify->callback([args, &rc] {
        if (args->name == "bergman" || args->name == "log" || args->name == "green1d")
            throw std::invalid_argument("verify supports the interval kernels");
        // The verifier needs analytic s-derivatives; the closed form stands in
        // for the truncated cosine series.
        KernelArgs adjusted = *args;
        if (adjusted.name == "fourier") adjusted.name = "fourier_closed";
        const Kernel k = kernel_from_args(adjusted);
        const double t = std::stod(args->t);
        const TestFunction x = test_function(args->test);
        InnerProductSpec space =
            args->name == "poly"
                ? InnerProductSpec::derivative_sum(args->c, args->n)
                : InnerProductSpec::derivative_integral(
                      {0.0, 1.0}, std::get<Interval>(k.domain()));
        const double residual = verify_reproducing(k, space, x, t, args->quad_n);
        emit_json({{"kernel", args->name},
                   {"test", args->test},
                   {"t", t},
                   {"quad_n", args->quad_n},
                   {"residual", residual}});
        rc = 0;
    });
}

// ---------------------------------------------------------------------------
// fock

struct FockArgs {
    std::string pairing = "sobolev";
    std::string points;
    int order = 1, mmax = 1;
    std::string symmetry = "vee";
    double a = 0.0, b = 1.0, c = 0.0, kappa = kFourierKappaReproducing, rho = 1.0;
    int n = 3, terms = 200, m = 64;
    std::string zeta1 = "0.3:0.2";
};

Pairing pairing_from_args(const FockArgs& f) {
    if (f.pairing == "sobolev") {
        const double a = f.a;
        return [a](Cx s, Cx t) { return Cx(sobolev_kernel(s.real(), t.real(), a), 0.0); };
    }
    if (f.pairing == "poly") {
        const double c = f.c;
        const int n = f.n;
        return [c, n](Cx s, Cx t) { return Cx(poly_kernel(s.real(), t.real(), c, n), 0.0); };
    }
    if (f.pairing == "fourier") {
        const double kappa = f.kappa;
        return [kappa](Cx s, Cx t) {
            return Cx(fourier_kernel_closed(s.real(), t.real(), kappa), 0.0);
        };
    }
    if (f.pairing == "green1d") {
        const auto g = std::make_shared<Green1D>(
            green_matrix_1d({0.0, 1.0}, f.m, {f.a, f.b}, BoundaryCondition::dirichlet));
        return [g](Cx s, Cx t) {
            const auto snap = [&](double v) {
                std::size_t best = 0;
                for (std::size_t i = 1; i < g->nodes.size(); ++i)
                    if (std::abs(g->nodes[i] - v) < std::abs(g->nodes[best] - v)) best = i;
                return best;
            };
            return Cx(g->green(snap(s.real()), snap(t.real())), 0.0);
        };
    }
    if (f.pairing == "bergman") {
        const double rho = f.rho;
        const int terms = f.terms;
        return [rho, terms](Cx s, Cx t) { return bergman_kernel_series(s, t, rho, terms); };
    }
    if (f.pairing == "log") {
        const double rho = f.rho;
        const Cx z1 = parse_complex(f.zeta1);
        return [rho, z1](Cx s, Cx t) { return log_kernel_pinned(s, t, rho, z1); };
    }
    throw std::invalid_argument("unknown pairing '" + f.pairing + "'");
}

FockSymmetry symmetry_from(const std::string& name) {
    if (name == "tensor") return FockSymmetry::tensor;
    if (name == "vee" || name == "sym") return FockSymmetry::sym;
    if (name == "wedge" || name == "antisym") return FockSymmetry::antisym;
    throw std::invalid_argument("unknown symmetry '" + name + "'");
}

void fock_params(CLI::App* sub, std::shared_ptr<FockArgs> args) {
    sub->add_option("--pairing", args->pairing, "poly|sobolev|fourier|green1d|bergman|log");
    sub->add_option("--points", args->points, "evaluation functionals, re or re:im");
    sub->add_option("--a", args->a);
    sub->add_option("--b", args->b);
    sub->add_option("--c", args->c);
    sub->add_option("--n", args->n);
    sub->add_option("--kappa", args->kappa);
    sub->add_option("--rho", args->rho);
    sub->add_option("--terms", args->terms);
    sub->add_option("--m", args->m);
    sub->add_option("--zeta1", args->zeta1);
}

void add_fock(CLI::App& app, int& rc) {
    auto* cmd = app.add_subcommand("fock", "Fock-space kernels over a base pairing");
    auto args = std::make_shared<FockArgs>();
    auto gamma_args = std::make_shared<FockArgs>();

    fock_params(cmd, args);
    auto* order_opt = cmd->add_option("--order", args->order, "Gram order for the value");
    cmd->add_option("--symmetry", args->symmetry, "tensor|vee|wedge");

    auto* gamma = cmd->add_subcommand("gamma", "diagonal block values up to --mmax");
    fock_params(gamma, gamma_args);
    gamma->add_option("--mmax", gamma_args->mmax)->required();
    gamma->add_option("--symmetry", gamma_args->symmetry, "tensor|vee|wedge");
    gamma->callback([gamma_args, &rc] {
        if (gamma_args->points.empty()) throw CLI::RequiredError("--points");
        const std::vector<Cx> pts = parse_complex_list(gamma_args->points);
        if (static_cast<int>(pts.size()) < gamma_args->mmax)
            throw std::invalid_argument("need at least --mmax points");
        const FockKernelBlock block = gamma_block(pairing_from_args(*gamma_args),
                                                  gamma_args->mmax,
                                                  symmetry_from(gamma_args->symmetry));
        json blocks = json::array();
        for (int order = 0; order <= gamma_args->mmax; ++order)
            blocks.push_back(
                {{"order", order}, {"value", complex_json(block.block_value(order, pts))}});
        emit_json({{"pairing", gamma_args->pairing},
                   {"symmetry", gamma_args->symmetry},
                   {"m_max", gamma_args->mmax},
                   {"blocks", blocks}});
        rc = 0;
    });

    cmd->callback([args, gamma, order_opt, &rc] {
        if (gamma->parsed()) return;
        if (order_opt->count() == 0) throw CLI::RequiredError("--order");
        if (args->points.empty()) throw CLI::RequiredError("--points");
        const std::vector<Cx> pts = parse_complex_list(args->points);
        if (static_cast<int>(pts.size()) < args->order)
            throw std::invalid_argument("need at least --order points");
        const std::vector<Cx> head(pts.begin(), pts.begin() + args->order);
        const Pairing pairing = pairing_from_args(*args);
        const KernelGram g = kernel_gram(pairing, head, head);
        const FockSymmetry sym = symmetry_from(args->symmetry);
        Cx v;
        switch (sym) {
            case FockSymmetry::sym: v = sym_fock_kernel(g); break;
            case FockSymmetry::antisym: v = antisym_fock_kernel(g); break;
            case FockSymmetry::tensor: {
                v = Cx(1.0, 0.0);
                for (int j = 0; j < args->order; ++j) v *= g.entries(j, j);
                break;
            }
        }
        emit_json({{"pairing", args->pairing},
                   {"symmetry", args->symmetry},
                   {"order", args->order},
                   {"gram", cmat_json(g.entries)},
                   {"value", complex_json(v)}});
        rc = 0;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clifford algebras, tensor norms and reproducing kernels"};
    app.require_subcommand(1);
    int rc = 1;

    std::uint64_t seed = 20240915ull;

    try {
        add_quadratic(app, rc);
        add_clifford(app, rc);
        add_legendre(app, rc);
        add_tensor(app, rc);
        add_kernel(app, rc);
        add_fock(app, rc);

        auto* ledger = app.add_subcommand("ledger", "oracle-adjudicated discrepancy report");
        ledger->add_option("--seed", seed, "seed for the oracle probes");
        ledger->callback([&seed, &rc] {
            emit_json({{"entries", ledger_to_json(run_ledger(seed))}});
            rc = 0;
        });

        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        const char* type = "runtime_error";
        if (dynamic_cast<const std::invalid_argument*>(&e)) type = "invalid_argument";
        else if (dynamic_cast<const std::domain_error*>(&e)) type = "domain_error";
        else if (dynamic_cast<const std::out_of_range*>(&e)) type = "out_of_range";
        else if (dynamic_cast<const SingularMatrixError*>(&e)) type = "singular_operator";
        else if (dynamic_cast<const ConvergenceError*>(&e)) type = "non_convergence";
        else if (dynamic_cast<const DegenerateHessianError*>(&e)) type = "degenerate_hessian";
        json err = {{"schema", kSchema},
                    {"error", {{"type", type}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return rc;
}
