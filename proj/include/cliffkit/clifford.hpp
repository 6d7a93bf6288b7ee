#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>

#include "cliffkit/linalg.hpp"
#include "cliffkit/tensor.hpp"
#include "json.hpp"

namespace cliffkit {

/// Blade index: bit i set means generator e_{i+1} is present.
using BladeMask = std::uint32_t;

/// Coefficients below this are dropped after every arithmetic operation.
inline constexpr double kBladePruneTol = 1e-14;

/// Orthogonal generator frame: diag[j] = b(e_{j+1}, e_{j+1}). Generators are
/// kept at raw metric scale; rescaling to +-1 is a separate explicit step.
struct CliffordSpace {
    explicit CliffordSpace(Vec diag_values);

    std::size_t n;
    Vec diag;

    std::size_t blade_count() const { return std::size_t{1} << n; }
    bool operator==(const CliffordSpace& o) const { return diag == o.diag; }
};

/// Sparse blade-indexed element of C(E, q) over an orthogonal frame.
class Multivector {
public:
    explicit Multivector(CliffordSpace space) : space_(std::move(space)) {}

    static Multivector scalar(const CliffordSpace& space, double c);
    static Multivector basis_blade(const CliffordSpace& space, BladeMask mask, double c = 1.0);

    const CliffordSpace& space() const { return space_; }
    const std::map<BladeMask, double>& terms() const { return terms_; }
    double coeff(BladeMask mask) const;
    bool empty() const { return terms_.empty(); }

    /// Inserts (accumulating) and prunes.
    void add_term(BladeMask mask, double c);

    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector scaled(double s) const;

private:
    CliffordSpace space_;
    std::map<BladeMask, double> terms_;
};

/// Grade-1 element sum x_j e_{j+1}; requires len(x) == n.
Multivector from_vector(const CliffordSpace& space, const Vec& x);

/// Product of two basis blades: sign from the transposition count of the
/// merge, contraction factor prod diag[j] over shared generators, result mask
/// the symmetric difference. Returned as (signed contraction, mask).
std::pair<double, BladeMask> blade_product(BladeMask a, BladeMask b, const Vec& diag);

Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Exterior product: the grade-(r+s) part of the geometric product of
/// homogeneous parts; blade pairs sharing a generator contribute nothing,
/// which also makes the result independent of the metric.
Multivector wedge(const Multivector& a, const Multivector& b);

Multivector grade_project(const Multivector& a, int k);

enum class VectorNormTag { euclidean };
enum class TensorNormTag { injective, projective, hs };

/// Gradewise tensor norm: the grade-k part embeds as an order-k antisymmetric
/// tensor (blade coefficient c spreads as +-c/k! over permuted index tuples)
/// and the order-2 norms apply exactly; grades >= 3 fall back to the sampled
/// lower bound (injective) and the basis-decomposition upper bound
/// (projective), hs stays exact. Total is the sum over grades.
double norm_gamma(const Multivector& a, VectorNormTag nu, TensorNormTag gamma);

struct UnitScaling {
    CliffordSpace space;  // diag entries in {-1, 0, +1}
    Vec factors;          // e_j -> e_j / factors[j], factors[j] = sqrt|diag[j]|
};

/// Explicit rescaling e_j -> e_j / sqrt|lambda_j| to a +-1 metric; rejects
/// zero metric entries.
UnitScaling normalize_metric(const CliffordSpace& space);
Multivector to_normalized_metric(const Multivector& a, const UnitScaling& scaling);

/// Parses "0.5e1e2 + e3 - 2" style expressions (terms joined by +/-, each an
/// optional coefficient followed by zero or more e<k> generators).
Multivector parse_multivector(const CliffordSpace& space, std::string_view text);

nlohmann::json to_json(const Multivector& a);
Multivector multivector_from_json(const nlohmann::json& j);

}  // namespace cliffkit
