#pragma once

#include <functional>
#include <vector>

#include "cliffkit/linalg.hpp"

namespace cliffkit {

/// A continuous functional is represented by its evaluation point (possibly
/// complex); a pairing is the kernel value between two such functionals.
using Pairing = std::function<Cx(Cx, Cx)>;

/// Gram array M[j][k] = <E a*_j, b*_k> of a kernel against two functional
/// lists.
struct KernelGram {
    CMat entries;
    std::size_t order() const { return entries.rows(); }
};

KernelGram kernel_gram(const Pairing& pairing, const std::vector<Cx>& as,
                       const std::vector<Cx>& bs);

/// Permanent by Ryser's inclusion-exclusion over Gray-code subsets; m <= 20.
Cx permanent(const CMat& m);
/// Literal sum over the symmetric group; test oracle, m <= 8.
Cx permanent_naive(const CMat& m);

/// Symmetric Fock-space kernel value: permanent(G) / m!.
Cx sym_fock_kernel(const KernelGram& g);
/// Antisymmetric value: det(G) / m! via pivoted elimination.
Cx antisym_fock_kernel(const KernelGram& g);

/// Product functionals are tuples of component functionals.
using TupleFunctional = std::vector<Cx>;
using TuplePairing = std::function<Cx(const TupleFunctional&, const TupleFunctional&)>;

/// Kernel of a two-factor tensor product on elementary product functionals:
/// <(E1 (x) E2)(a1* (x) a2*), b1* (x) b2*> = <E1 a1*, b1*> <E2 a2*, b2*>.
TuplePairing tensor_kernel_product(Pairing p1, Pairing p2);
/// m-factor extension by folding.
TuplePairing tensor_kernel_product(std::vector<Pairing> factors);

enum class FockSymmetry { tensor, sym, antisym };

/// Block-diagonal Schwartz kernel of a truncated Fock space: order 0 is the
/// scalar 1, order k pairs k-tuples through the plain product, the permanent
/// or the determinant form, and cross-order pairings are exactly zero.
class FockKernelBlock {
public:
    FockKernelBlock(Pairing base, int m_max, FockSymmetry symmetry);

    int m_max() const { return m_max_; }
    FockSymmetry symmetry() const { return symmetry_; }

    /// Zero when the tuple orders differ; throws when a matched order exceeds
    /// the truncation.
    Cx eval(const std::vector<Cx>& as, const std::vector<Cx>& bs) const;

    /// Diagonal block value at the given order with as = bs = first
    /// `order` entries of `points`.
    Cx block_value(int order, const std::vector<Cx>& points) const;

private:
    Pairing base_;
    int m_max_;
    FockSymmetry symmetry_;
};

FockKernelBlock gamma_block(Pairing base, int m_max, FockSymmetry symmetry);

}  // namespace cliffkit
