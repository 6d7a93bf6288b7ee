#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cliffkit/linalg.hpp"
#include "json.hpp"

namespace cliffkit {

/// Order-2 tensor over Euclidean factors. Singular values are computed at
/// construction so every norm query is a lookup; all values are immutable.
class Tensor2 {
public:
    Tensor2(std::size_t rows, std::size_t cols, Vec entries);
    explicit Tensor2(Mat m);

    static Tensor2 outer(const Vec& x, const Vec& y);

    std::size_t rows() const { return mat_.rows(); }
    std::size_t cols() const { return mat_.cols(); }
    double operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }
    const Mat& matrix() const { return mat_; }

    /// Nonincreasing, length min(rows, cols).
    const Vec& singular_values() const { return svals_; }

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 scaled(double s) const;

private:
    Mat mat_;
    Vec svals_;
};

/// Rank-1 tensor x (x) y.
Tensor2 tensor2(const Vec& x, const Vec& y);
/// (x (x) y - y (x) x) / 2!; requires equal lengths; wedge2(x,x) = 0.
Tensor2 wedge2(const Vec& x, const Vec& y);
/// (x (x) y + y (x) x) / 2!; symmetric.
Tensor2 vee2(const Vec& x, const Vec& y);

/// Largest singular value.
double injective_norm(const Tensor2& t);
/// Sum of singular values.
double projective_norm(const Tensor2& t);
/// Root sum of squared singular values (= Frobenius).
double hs_norm(const Tensor2& t);
/// Arithmetic-geometric mean of (injective, projective), iterated until the
/// relative gap drops below agm_tol. Lies between its arguments; whether the
/// resulting value map is itself a norm is deliberately not asserted.
double sigma_norm(const Tensor2& t, double agm_tol = 1e-12);

enum class TensorSymmetry { none, sym, antisym };

/// Dense order-p tensor; slot 0 varies slowest. Index space is capped at
/// p * ceil(log2(max dim)) <= 24.
class TensorP {
public:
    TensorP(std::vector<std::size_t> dims, Vec entries,
            TensorSymmetry tag = TensorSymmetry::none);
    explicit TensorP(std::vector<std::size_t> dims);

    static TensorP outer(const std::vector<Vec>& factors);

    int order() const { return static_cast<int>(dims_.size()); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    TensorSymmetry symmetry() const { return tag_; }
    std::size_t size() const { return entries_.size(); }

    double at(const std::vector<std::size_t>& idx) const;
    double& at(const std::vector<std::size_t>& idx);
    const Vec& entries() const { return entries_; }

private:
    std::size_t offset(const std::vector<std::size_t>& idx) const;

    std::vector<std::size_t> dims_;
    Vec entries_;
    TensorSymmetry tag_;
};

/// Sign of a permutation given as an index vector (by inversion count).
int permutation_sign(const std::vector<std::size_t>& perm);

/// (1/p!) sum over slot permutations; idempotent projector. Requires uniform
/// slot dimensions and p <= 8.
TensorP symmetrize(const TensorP& t);
/// Signed variant with the epsilon(sigma) factor.
TensorP antisymmetrize(const TensorP& t);

/// Frobenius pairing of two equal-shape tensors.
double tensorp_pairing(const TensorP& a, const TensorP& b);
double tensorp_hs_norm(const TensorP& t);
/// Randomized lower bound for the order-p injective norm: max of
/// |<T, u1 (x) ... (x) up>| over sampled unit rank-1 tensors (deterministic
/// internal seed). Exact computation is intractable for p > 2.
double tensorp_injective_lower(const TensorP& t, int samples = 256,
                               std::uint64_t seed = 0x9e3779b97f4a7c15ull);
/// Upper bound for the order-p projective norm from the basis decomposition:
/// the entrywise l1 mass.
double tensorp_projective_upper(const TensorP& t);

/// Finite coefficient-sequence model of a basis expansion.
struct CoeffSequence {
    enum class Ambient { l1, l2 };
    Vec coeffs;
    Ambient ambient = Ambient::l2;

    double norm() const;
};

struct SchauderSplit {
    CoeffSequence head;
    double tail_norm;
};

/// Head/tail split after the first n coefficients; tail_norm is the ambient
/// norm of what was dropped.
SchauderSplit schauder_truncate(const CoeffSequence& x, std::size_t n);

/// Shell enumeration J_1 .. J_lmax with
/// J_l = (1,l) (2,l) ... (l,l) (l,l-1) ... (l,1); l_max^2 pairs total,
/// 1-based indices.
std::vector<std::pair<int, int>> enumerate_shells(int l_max);

/// Three-term bound on the cross norm of the rank-one remainder
/// x (x) y - head_n(x) (x) head_n(y):
///   |head(x)| |tail(y)| + |tail(x)| |head(y)| + |tail(x)| |tail(y)|.
/// Requires l2 ambient on both sequences.
double tensor_basis_truncation_error(const CoeffSequence& x, const CoeffSequence& y,
                                     std::size_t n);

nlohmann::json to_json(const Tensor2& t);
Tensor2 tensor2_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TensorP& t);
TensorP tensorp_from_json(const nlohmann::json& j);

}  // namespace cliffkit
