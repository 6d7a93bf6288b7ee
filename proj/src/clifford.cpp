#include "cliffkit/clifford.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

namespace cliffkit {

CliffordSpace::CliffordSpace(Vec diag_values) : n(diag_values.size()), diag(std::move(diag_values)) {
    if (n < 1) throw std::invalid_argument("CliffordSpace: at least one generator required");
    if (n > 20) throw std::invalid_argument("CliffordSpace: generator count capped at 20");
}

Multivector Multivector::scalar(const CliffordSpace& space, double c) {
    Multivector m(space);
    m.add_term(0, c);
    return m;
}

Multivector Multivector::basis_blade(const CliffordSpace& space, BladeMask mask, double c) {
    if (mask >= space.blade_count())
        throw std::invalid_argument("Multivector: blade index out of range");
    Multivector m(space);
    m.add_term(mask, c);
    return m;
}

double Multivector::coeff(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? 0.0 : it->second;
}

void Multivector::add_term(BladeMask mask, double c) {
    if (mask >= space_.blade_count())
        throw std::invalid_argument("Multivector: blade index out of range");
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kBladePruneTol) terms_.erase(it);
}

namespace {

void require_same_space(const Multivector& a, const Multivector& b, const char* op) {
    if (!(a.space() == b.space()))
        throw std::invalid_argument(std::string(op) + ": operands live in different spaces");
}

}  // namespace

Multivector Multivector::operator+(const Multivector& o) const {
    require_same_space(*this, o, "add");
    Multivector out = *this;
    for (const auto& [mask, c] : o.terms_) out.add_term(mask, c);
    return out;
}

Multivector Multivector::operator-(const Multivector& o) const {
    require_same_space(*this, o, "subtract");
    Multivector out = *this;
    for (const auto& [mask, c] : o.terms_) out.add_term(mask, -c);
    return out;
}

Multivector Multivector::scaled(double s) const {
    Multivector out(space_);
    for (const auto& [mask, c] : terms_) out.add_term(mask, s * c);
    return out;
}

Multivector from_vector(const CliffordSpace& space, const Vec& x) {
    if (x.size() != space.n)
        throw std::invalid_argument("from_vector: length does not match generator count");
    Multivector m(space);
    for (std::size_t j = 0; j < x.size(); ++j)
        m.add_term(BladeMask{1} << j, x[j]);
    return m;
}

std::pair<double, BladeMask> blade_product(BladeMask a, BladeMask b, const Vec& diag) {
    // Transpositions needed to merge the sorted generator lists: each
    // generator of b passes every higher generator of a.
    int swaps = 0;
    BladeMask ah = a >> 1;
    while (ah != 0) {
        swaps += std::popcount(ah & b);
        ah >>= 1;
    }
    double contraction = 1.0;
    BladeMask common = a & b;
    while (common != 0) {
        const int j = std::countr_zero(common);
        contraction *= diag[static_cast<std::size_t>(j)];
        common &= common - 1;
    }
    if (swaps & 1) contraction = -contraction;
    return {contraction, a ^ b};
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
    require_same_space(a, b, "geometric_product");
    Multivector out(a.space());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            const auto [sc, mask] = blade_product(ma, mb, a.space().diag);
            out.add_term(mask, sc * (ca * cb));
        }
    }
    return out;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
    require_same_space(a, b, "wedge");
    Multivector out(a.space());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if ((ma & mb) != 0) continue;
            const auto [sign, mask] = blade_product(ma, mb, a.space().diag);
            out.add_term(mask, sign * (ca * cb));  // no shared generators: sign is +-1
        }
    }
    return out;
}

Multivector grade_project(const Multivector& a, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > a.space().n)
        throw std::invalid_argument("grade_project: grade out of range");
    Multivector out(a.space());
    for (const auto& [mask, c] : a.terms())
        if (std::popcount(mask) == k) out.add_term(mask, c);
    return out;
}

namespace {

std::vector<std::size_t> blade_indices(BladeMask mask) {
    std::vector<std::size_t> idx;
    while (mask != 0) {
        idx.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return idx;
}

// The grade-k part as a dense antisymmetric order-k tensor with the 1/k!
// convention: e_{j1} ^ ... ^ e_{jk} spreads as eps(sigma)/k! over index tuples.
TensorP grade_as_tensor(const Multivector& a, int k) {
    const std::size_t n = a.space().n;
    TensorP t(std::vector<std::size_t>(static_cast<std::size_t>(k), n));
    double factorial = 1.0;
    for (int j = 2; j <= k; ++j) factorial *= j;

    for (const auto& [mask, c] : a.terms()) {
        if (std::popcount(mask) != k) continue;
        std::vector<std::size_t> base = blade_indices(mask);
        std::vector<std::size_t> perm(base.size());
        std::vector<std::size_t> slots(base.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (std::size_t s = 0; s < perm.size(); ++s) slots[s] = base[perm[s]];
            t.at(slots) += permutation_sign(perm) * c / factorial;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return t;
}

double grade_norm(const Multivector& a, int k, TensorNormTag gamma) {
    const std::size_t n = a.space().n;
    if (k == 0) return std::abs(a.coeff(0));
    if (k == 1) {
        double s = 0.0;
        for (const auto& [mask, c] : a.terms())
            if (std::popcount(mask) == 1) s += c * c;
        return std::sqrt(s);
    }
    if (k == 2) {
        Mat m(n, n);
        for (const auto& [mask, c] : a.terms()) {
            if (std::popcount(mask) != 2) continue;
            const auto idx = blade_indices(mask);
            m(idx[0], idx[1]) = 0.5 * c;
            m(idx[1], idx[0]) = -0.5 * c;
        }
        const Tensor2 t(std::move(m));
        switch (gamma) {
            case TensorNormTag::injective: return injective_norm(t);
            case TensorNormTag::projective: return projective_norm(t);
            case TensorNormTag::hs: return hs_norm(t);
        }
    }
    // Grades >= 3: exact hs; sampled lower / decomposition upper bounds keep
    // the injective <= hs <= projective ordering structurally valid.
    switch (gamma) {
        case TensorNormTag::hs: {
            double s = 0.0;
            double factorial = 1.0;
            for (int j = 2; j <= k; ++j) factorial *= j;
            for (const auto& [mask, c] : a.terms())
                if (std::popcount(mask) == k) s += c * c;
            return std::sqrt(s / factorial);
        }
        case TensorNormTag::injective:
            return tensorp_injective_lower(grade_as_tensor(a, k));
        case TensorNormTag::projective: {
            double s = 0.0;
            for (const auto& [mask, c] : a.terms())
                if (std::popcount(mask) == k) s += std::abs(c);
            return s;
        }
    }
    throw std::invalid_argument("norm_gamma: unsupported norm tag");
}

}  // namespace

double norm_gamma(const Multivector& a, VectorNormTag nu, TensorNormTag gamma) {
    if (nu != VectorNormTag::euclidean)
        throw std::invalid_argument("norm_gamma: unsupported factor norm tag");
    double total = 0.0;
    for (int k = 0; k <= static_cast<int>(a.space().n); ++k)
        total += grade_norm(a, k, gamma);
    return total;
}

UnitScaling normalize_metric(const CliffordSpace& space) {
    UnitScaling out{space, Vec(space.n, 1.0)};
    Vec unit(space.n, 0.0);
    for (std::size_t j = 0; j < space.n; ++j) {
        const double lambda = space.diag[j];
        if (lambda == 0.0)
            throw std::invalid_argument("normalize_metric: generator e" + std::to_string(j + 1) +
                                        " has zero metric, rescale undefined");
        out.factors[j] = std::sqrt(std::abs(lambda));
        unit[j] = (lambda > 0.0) ? 1.0 : -1.0;
    }
    out.space = CliffordSpace(unit);
    return out;
}

Multivector to_normalized_metric(const Multivector& a, const UnitScaling& scaling) {
    Multivector out(scaling.space);
    for (const auto& [mask, c] : a.terms()) {
        double f = 1.0;
        for (std::size_t j : blade_indices(mask)) f *= scaling.factors[j];
        out.add_term(mask, c * f);
    }
    return out;
}

Multivector parse_multivector(const CliffordSpace& space, std::string_view text) {
    Multivector out(space);
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    bool first = true;
    while (pos < text.size()) {
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1.0;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("parse_multivector: expected '+' or '-' between terms");
        }
        first = false;

        // Plain decimals only ('e' always starts a generator, never an
        // exponent).
        double coeff = 1.0;
        bool saw_number = false;
        if (pos < text.size() &&
            (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
            const std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
                ++pos;
            const std::string number(text.substr(start, pos - start));
            auto [next, ec] = std::from_chars(number.data(), number.data() + number.size(), coeff);
            if (ec != std::errc{} || next != number.data() + number.size())
                throw std::invalid_argument("parse_multivector: bad coefficient '" + number + "'");
            saw_number = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }

        BladeMask mask = 0;
        bool saw_blade = false;
        while (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            ++pos;
            std::size_t gen = 0;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("parse_multivector: generator index expected after 'e'");
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                gen = gen * 10 + static_cast<std::size_t>(text[pos++] - '0');
            if (gen < 1 || gen > space.n)
                throw std::invalid_argument("parse_multivector: generator e" +
                                            std::to_string(gen) + " out of range");
            const BladeMask bit = BladeMask{1} << (gen - 1);
            if (mask & bit)
                throw std::invalid_argument("parse_multivector: repeated generator in one term");
            mask |= bit;
            saw_blade = true;
            skip_ws();
        }
        if (!saw_number && !saw_blade)
            throw std::invalid_argument("parse_multivector: empty term");
        out.add_term(mask, sign * coeff);
        skip_ws();
    }
    return out;
}

nlohmann::json to_json(const Multivector& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mask, c] : a.terms()) {
        nlohmann::json blades = nlohmann::json::array();
        for (std::size_t j : blade_indices(mask)) blades.push_back(j + 1);
        terms.push_back({{"blades", blades}, {"c", c}});
    }
    return {{"n", a.space().n}, {"diag", a.space().diag}, {"terms", terms}};
}

Multivector multivector_from_json(const nlohmann::json& j) {
    CliffordSpace space(j.at("diag").get<Vec>());
    if (space.n != j.at("n").get<std::size_t>())
        throw std::invalid_argument("multivector JSON: n does not match diag length");
    Multivector out(space);
    for (const auto& term : j.at("terms")) {
        BladeMask mask = 0;
        for (const auto& g : term.at("blades")) {
            const std::size_t gen = g.get<std::size_t>();
            if (gen < 1 || gen > space.n)
                throw std::invalid_argument("multivector JSON: generator out of range");
            mask |= BladeMask{1} << (gen - 1);
        }
        out.add_term(mask, term.at("c").get<double>());
    }
    return out;
}

}  // namespace cliffkit
