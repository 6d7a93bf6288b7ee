#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffkit {

using Vec = std::vector<double>;
using Cx = std::complex<double>;

/// Thrown when a linear solve or inversion meets a numerically singular matrix.
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an iterative scheme exhausts its budget; carries the residual
/// in the message.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major real matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n);
    static Mat diagonal(const Vec& d);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool is_symmetric(double tol) const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(double s);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(double s, Mat a);

/// Dense row-major complex matrix (kernel Grams, Fock kernels).
class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols, Cx fill = Cx(0.0, 0.0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Cx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Cx operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Cx> data_;
};

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);

Vec mat_vec(const Mat& m, const Vec& x);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
double frobenius(const Mat& m);

/// Solves A x = b by LU with partial pivoting. Throws SingularMatrixError.
Vec solve(Mat a, Vec b);
Mat invert(const Mat& a);

/// Determinant by partial-pivoted elimination.
Cx det_pivoted(CMat a);

struct EigenSym {
    Vec values;   // descending
    Mat vectors;  // orthonormal columns, matching order
};

/// Cyclic Jacobi rotations for a symmetric matrix. Deterministic: eigenvalues
/// sorted descending, each eigenvector scaled so its largest-magnitude entry
/// is positive. Converges when the off-diagonal Frobenius mass drops below
/// `off_tol`; throws ConvergenceError (with the residual) past `max_sweeps`.
EigenSym jacobi_eigen(const Mat& sym, int max_sweeps = 50, double off_tol = 1e-12);

/// Singular values by one-sided (Hestenes) Jacobi, descending. Throws
/// ConvergenceError if column pairs fail to orthogonalize in budget.
Vec singular_values(const Mat& a, int max_sweeps = 60);

/// Eigenvalues of a hermitian complex matrix via the real 2n x 2n embedding
/// [[Re, -Im], [Im, Re]] (each eigenvalue appears twice; duplicates removed
/// by taking every other sorted entry).
Vec hermitian_eigenvalues(const CMat& h);

}  // namespace cliffkit
