#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cliffkit/linalg.hpp"
#include "json.hpp"

namespace cliffkit {

/// Eigenvalue sign counts of a symmetric form.
struct Signature {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    bool operator==(const Signature&) const = default;
};

/// Symmetric bilinear/quadratic form on R^n. Immutable; the eigensystem is
/// computed once at construction (kept empty, with the failure message, if
/// the rotation budget runs out — diagonalize() then reports it).
class QuadraticForm {
public:
    /// `coeffs` must be square and symmetric to within 1e-12 absolute.
    explicit QuadraticForm(Mat coeffs);

    static QuadraticForm diagonal(const Vec& d);
    static QuadraticForm identity(std::size_t n);

    std::size_t dim() const { return coeffs_.rows(); }
    const Mat& coeffs() const { return coeffs_; }

    bool has_eigen() const { return eigen_.has_value(); }
    const EigenSym& eigen() const;

private:
    Mat coeffs_;
    std::optional<EigenSym> eigen_;
    std::string eigen_error_;
};

/// q(x) = x^T C x.
double eval_q(const QuadraticForm& form, const Vec& x);

/// Normalized polarization b(x,y) = (q(x+y) - q(x) - q(y))/2 = x^T C y,
/// so that b(x,x) = q(x). Evaluated over unordered index pairs, which makes
/// polarize(x,y) == polarize(y,x) bitwise.
double polarize(const QuadraticForm& form, const Vec& x, const Vec& y);

/// Orthonormal eigenframe with eigenvalues sorted descending and the sign
/// convention of jacobi_eigen. Errors with the residual on non-convergence.
EigenSym diagonalize(const QuadraticForm& form);

/// zero_tol default: 1e-9 * max|eigenvalue|, floored at 1e-14.
double default_zero_tol(const QuadraticForm& form);

/// Counts eigenvalues above/below/within zero_tol. Pass a negative zero_tol
/// to use the default rule.
Signature signature(const QuadraticForm& form, double zero_tol = -1.0);

nlohmann::json to_json(const QuadraticForm& form);
QuadraticForm quadratic_form_from_json(const nlohmann::json& j);

}  // namespace cliffkit
