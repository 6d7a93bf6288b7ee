#pragma once

// Shared test helpers: deterministic random inputs and the independent
// rewrite oracle for blade products. Test-only; nothing here is part of the
// library surface.

#include <random>
#include <utility>
#include <vector>

#include "cliffkit/clifford.hpp"

namespace cliffkit::testsupport {

inline Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec v(n);
    for (double& x : v) x = u(rng);
    return v;
}

inline Vec random_metric(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::bernoulli_distribution neg(0.5);
    Vec d(n);
    for (double& x : d) x = neg(rng) ? -mag(rng) : mag(rng);
    return d;
}

inline Multivector random_multivector(std::mt19937_64& rng, const CliffordSpace& space) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Multivector m(space);
    for (BladeMask mask = 0; mask < space.blade_count(); ++mask) m.add_term(mask, u(rng));
    return m;
}

// Independent product oracle: concatenates the generator lists and literally
// rewrites with e_i e_j = -e_j e_i (i != j) and e_j e_j = diag[j], always
// acting on the leftmost reducible adjacent pair. Deliberately far from the
// bit-twiddling route used by blade_product; the two contract repeated
// generators in the same ascending order, so results agree bitwise.
inline std::pair<double, BladeMask> rewrite_blade_product(BladeMask a, BladeMask b,
                                                          const Vec& diag) {
    std::vector<int> seq;
    for (int j = 0; j < 20; ++j)
        if (a & (BladeMask{1} << j)) seq.push_back(j);
    for (int j = 0; j < 20; ++j)
        if (b & (BladeMask{1} << j)) seq.push_back(j);

    double contraction = 1.0;
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            if (seq[i] == seq[i + 1]) {
                contraction *= diag[static_cast<std::size_t>(seq[i])];
                seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(i),
                          seq.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                changed = true;
                break;
            }
            if (seq[i] > seq[i + 1]) {
                std::swap(seq[i], seq[i + 1]);
                sign = -sign;
                changed = true;
                break;
            }
        }
    }
    BladeMask mask = 0;
    for (int j : seq) mask |= BladeMask{1} << j;
    return {sign < 0 ? -contraction : contraction, mask};
}

// Table-driven oracle product mirroring the accumulation order of the
// implementation.
inline Multivector oracle_product(const Multivector& a, const Multivector& b) {
    Multivector out(a.space());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const auto [sc, mask] = rewrite_blade_product(ma, mb, a.space().diag);
            out.add_term(mask, sc * (ca * cb));
        }
    }
    return out;
}

}  // namespace cliffkit::testsupport
