#include "cliffkit/quadratic.hpp"

#include <cmath>

namespace cliffkit {

QuadraticForm::QuadraticForm(Mat coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() == 0 || coeffs_.rows() != coeffs_.cols())
        throw std::invalid_argument("QuadraticForm: square coefficient array required");
    if (!coeffs_.is_symmetric(1e-12))
        throw std::invalid_argument("QuadraticForm: coefficients not symmetric within 1e-12");
    try {
        eigen_ = jacobi_eigen(coeffs_);
    } catch (const ConvergenceError& e) {
        eigen_error_ = e.what();
    }
}

QuadraticForm QuadraticForm::diagonal(const Vec& d) {
    return QuadraticForm(Mat::diagonal(d));
}

QuadraticForm QuadraticForm::identity(std::size_t n) {
    return QuadraticForm(Mat::identity(n));
}

const EigenSym& QuadraticForm::eigen() const {
    if (!eigen_) throw ConvergenceError(eigen_error_);
    return *eigen_;
}

double polarize(const QuadraticForm& form, const Vec& x, const Vec& y) {
    const std::size_t n = form.dim();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("polarize: vector length does not match form dimension");
    const Mat& c = form.coeffs();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += c(i, i) * (x[i] * y[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            s += c(i, j) * (x[i] * y[j] + x[j] * y[i]);
    }
    return s;
}

double eval_q(const QuadraticForm& form, const Vec& x) { return polarize(form, x, x); }

EigenSym diagonalize(const QuadraticForm& form) { return form.eigen(); }

double default_zero_tol(const QuadraticForm& form) {
    double lmax = 0.0;
    for (double v : form.eigen().values) lmax = std::max(lmax, std::abs(v));
    return std::max(1e-9 * lmax, 1e-14);
}

Signature signature(const QuadraticForm& form, double zero_tol) {
    if (zero_tol < 0.0) zero_tol = default_zero_tol(form);
    Signature sig;
    for (double v : form.eigen().values) {
        if (std::abs(v) <= zero_tol)
            ++sig.n_zero;
        else if (v > 0.0)
            ++sig.n_plus;
        else
            ++sig.n_minus;
    }
    return sig;
}

nlohmann::json to_json(const QuadraticForm& form) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < form.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < form.dim(); ++j) row.push_back(form.coeffs()(i, j));
        rows.push_back(row);
    }
    return {{"dim", form.dim()}, {"coeffs", rows}};
}

QuadraticForm quadratic_form_from_json(const nlohmann::json& j) {
    const std::size_t n = j.at("dim").get<std::size_t>();
    const auto& rows = j.at("coeffs");
    if (rows.size() != n) throw std::invalid_argument("quadratic form JSON: bad row count");
    Mat c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("quadratic form JSON: bad column count");
        for (std::size_t k = 0; k < n; ++k) c(i, k) = rows[i][k].get<double>();
    }
    return QuadraticForm(std::move(c));
}

}  // namespace cliffkit
