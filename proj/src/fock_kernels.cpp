#include "cliffkit/fock_kernels.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace cliffkit {

KernelGram kernel_gram(const Pairing& pairing, const std::vector<Cx>& as,
                       const std::vector<Cx>& bs) {
    if (as.size() != bs.size() || as.empty())
        throw std::invalid_argument("kernel_gram: functional lists of equal length m >= 1");
    KernelGram g{CMat(as.size(), bs.size())};
    for (std::size_t j = 0; j < as.size(); ++j)
        for (std::size_t k = 0; k < bs.size(); ++k) g.entries(j, k) = pairing(as[j], bs[k]);
    return g;
}

Cx permanent(const CMat& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("permanent: square matrix required");
    if (n == 0) return Cx(1.0, 0.0);
    if (n > 20) throw std::invalid_argument("permanent: size capped at 20");

    // Ryser: perm = (-1)^n sum_{S != 0} (-1)^|S| prod_i sum_{j in S} m_ij,
    // with row sums maintained incrementally along the Gray-code walk.
    std::vector<Cx> rowsum(n, Cx(0.0, 0.0));
    Cx total(0.0, 0.0);
    std::uint32_t gray = 0;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t k = 1; k < end; ++k) {
        const std::uint32_t next = k ^ (k >> 1);
        const std::uint32_t changed = next ^ gray;
        const int j = std::countr_zero(changed);
        const double dir = (next & changed) ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i)
            rowsum[i] += dir * m(i, static_cast<std::size_t>(j));
        gray = next;

        Cx prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) prod *= rowsum[i];
        total += (std::popcount(next) % 2 == 0 ? 1.0 : -1.0) * prod;
    }
    if (n % 2 != 0) total = -total;
    return total;
}

Cx permanent_naive(const CMat& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("permanent_naive: square matrix required");
    if (n > 8) throw std::invalid_argument("permanent_naive: size capped at 8");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Cx total(0.0, 0.0);
    do {
        Cx prod(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace {

double factorial(std::size_t m) {
    double f = 1.0;
    for (std::size_t k = 2; k <= m; ++k) f *= static_cast<double>(k);
    return f;
}

}  // namespace

Cx sym_fock_kernel(const KernelGram& g) { return permanent(g.entries) / factorial(g.order()); }

Cx antisym_fock_kernel(const KernelGram& g) {
    return det_pivoted(g.entries) / factorial(g.order());
}

TuplePairing tensor_kernel_product(Pairing p1, Pairing p2) {
    return tensor_kernel_product(std::vector<Pairing>{std::move(p1), std::move(p2)});
}

TuplePairing tensor_kernel_product(std::vector<Pairing> factors) {
    return [factors = std::move(factors)](const TupleFunctional& a, const TupleFunctional& b) {
        if (a.size() != factors.size() || b.size() != factors.size())
            throw std::invalid_argument("tensor_kernel_product: tuple arity mismatch");
        Cx prod(1.0, 0.0);
        for (std::size_t j = 0; j < factors.size(); ++j) prod *= factors[j](a[j], b[j]);
        return prod;
    };
}

FockKernelBlock::FockKernelBlock(Pairing base, int m_max, FockSymmetry symmetry)
    : base_(std::move(base)), m_max_(m_max), symmetry_(symmetry) {
    if (m_max_ < 0) throw std::invalid_argument("FockKernelBlock: m_max must be >= 0");
    if (!base_) throw std::invalid_argument("FockKernelBlock: base pairing required");
}

Cx FockKernelBlock::eval(const std::vector<Cx>& as, const std::vector<Cx>& bs) const {
    if (as.size() != bs.size()) return Cx(0.0, 0.0);  // cross-order block
    const int order = static_cast<int>(as.size());
    if (order > m_max_)
        throw std::out_of_range("FockKernelBlock: order " + std::to_string(order) +
                                " beyond truncation m_max = " + std::to_string(m_max_));
    if (order == 0) return Cx(1.0, 0.0);

    if (symmetry_ == FockSymmetry::tensor) {
        Cx prod(1.0, 0.0);
        for (std::size_t j = 0; j < as.size(); ++j) prod *= base_(as[j], bs[j]);
        return prod;
    }
    const KernelGram g = kernel_gram(base_, as, bs);
    return symmetry_ == FockSymmetry::sym ? sym_fock_kernel(g) : antisym_fock_kernel(g);
}

Cx FockKernelBlock::block_value(int order, const std::vector<Cx>& points) const {
    if (order < 0 || static_cast<std::size_t>(order) > points.size())
        throw std::invalid_argument("FockKernelBlock: not enough points for the order");
    const std::vector<Cx> sub(points.begin(), points.begin() + order);
    return eval(sub, sub);
}

FockKernelBlock gamma_block(Pairing base, int m_max, FockSymmetry symmetry) {
    return FockKernelBlock(std::move(base), m_max, symmetry);
}

}  // namespace cliffkit
