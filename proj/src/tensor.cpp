#include "cliffkit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace cliffkit {

namespace {

Mat mat_from_entries(std::size_t rows, std::size_t cols, Vec entries) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("Tensor2: entry count does not match shape");
    Mat m(rows, cols);
    m.data() = std::move(entries);
    return m;
}

}  // namespace

Tensor2::Tensor2(std::size_t rows, std::size_t cols, Vec entries)
    : Tensor2(mat_from_entries(rows, cols, std::move(entries))) {}

Tensor2::Tensor2(Mat m) : mat_(std::move(m)) {
    if (mat_.rows() == 0 || mat_.cols() == 0)
        throw std::invalid_argument("Tensor2: empty shape");
    svals_ = cliffkit::singular_values(mat_);
}

Tensor2 Tensor2::outer(const Vec& x, const Vec& y) {
    Mat m(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
    return Tensor2(std::move(m));
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    if (rows() != o.rows() || cols() != o.cols())
        throw std::invalid_argument("Tensor2: shape mismatch");
    return Tensor2(mat_ + o.mat_);
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    if (rows() != o.rows() || cols() != o.cols())
        throw std::invalid_argument("Tensor2: shape mismatch");
    return Tensor2(mat_ - o.mat_);
}

Tensor2 Tensor2::scaled(double s) const { return Tensor2(s * mat_); }

Tensor2 tensor2(const Vec& x, const Vec& y) { return Tensor2::outer(x, y); }

Tensor2 wedge2(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("wedge2: length mismatch");
    Mat m(x.size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            m(i, j) = 0.5 * (x[i] * y[j] - y[i] * x[j]);
    return Tensor2(std::move(m));
}

Tensor2 vee2(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vee2: length mismatch");
    Mat m(x.size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            m(i, j) = 0.5 * (x[i] * y[j] + y[i] * x[j]);
    return Tensor2(std::move(m));
}

double injective_norm(const Tensor2& t) { return t.singular_values().front(); }

double projective_norm(const Tensor2& t) {
    const Vec& s = t.singular_values();
    return std::accumulate(s.begin(), s.end(), 0.0);
}

double hs_norm(const Tensor2& t) {
    double s = 0.0;
    for (double v : t.singular_values()) s += v * v;
    return std::sqrt(s);
}

double sigma_norm(const Tensor2& t, double agm_tol) {
    if (agm_tol <= 0.0) throw std::invalid_argument("sigma_norm: agm_tol must be positive");
    double a = injective_norm(t);
    double b = projective_norm(t);
    if (b == 0.0) return 0.0;
    while (std::abs(b - a) > agm_tol * 0.5 * (a + b)) {
        const double am = 0.5 * (a + b);
        const double gm = std::sqrt(a * b);
        a = gm;
        b = am;
    }
    return 0.5 * (a + b);
}

TensorP::TensorP(std::vector<std::size_t> dims, Vec entries, TensorSymmetry tag)
    : dims_(std::move(dims)), entries_(std::move(entries)), tag_(tag) {
    if (dims_.empty()) throw std::invalid_argument("TensorP: order must be >= 1");
    std::size_t total = 1, bits = 0;
    for (std::size_t d : dims_) {
        if (d == 0) throw std::invalid_argument("TensorP: zero slot dimension");
        std::size_t b = 0;
        while ((std::size_t{1} << b) < d) ++b;
        bits += b;
        total *= d;
    }
    if (bits > 24) throw std::invalid_argument("TensorP: index space exceeds the 24-bit cap");
    if (entries_.size() != total)
        throw std::invalid_argument("TensorP: entry count does not match shape");
}

TensorP::TensorP(std::vector<std::size_t> dims)
    : TensorP(dims, Vec(std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                                        std::multiplies<>()),
                        0.0)) {}

TensorP TensorP::outer(const std::vector<Vec>& factors) {
    std::vector<std::size_t> dims;
    dims.reserve(factors.size());
    for (const Vec& f : factors) dims.push_back(f.size());
    TensorP t(dims);
    std::vector<std::size_t> idx(factors.size(), 0);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        std::size_t rem = flat;
        double v = 1.0;
        for (std::size_t s = dims.size(); s-- > 0;) {
            idx[s] = rem % dims[s];
            rem /= dims[s];
        }
        for (std::size_t s = 0; s < dims.size(); ++s) v *= factors[s][idx[s]];
        t.entries_[flat] = v;
    }
    return t;
}

std::size_t TensorP::offset(const std::vector<std::size_t>& idx) const {
    if (idx.size() != dims_.size()) throw std::invalid_argument("TensorP: index arity mismatch");
    std::size_t off = 0;
    for (std::size_t s = 0; s < dims_.size(); ++s) {
        if (idx[s] >= dims_[s]) throw std::out_of_range("TensorP: index out of range");
        off = off * dims_[s] + idx[s];
    }
    return off;
}

double TensorP::at(const std::vector<std::size_t>& idx) const { return entries_[offset(idx)]; }
double& TensorP::at(const std::vector<std::size_t>& idx) { return entries_[offset(idx)]; }

int permutation_sign(const std::vector<std::size_t>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

namespace {

TensorP project_symmetry(const TensorP& t, bool signed_sum) {
    const int p = t.order();
    if (p > 8) throw std::invalid_argument("symmetrize: order above the p <= 8 cap");
    for (std::size_t d : t.dims())
        if (d != t.dims()[0])
            throw std::invalid_argument("symmetrize: uniform slot dimensions required");

    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    double factorial = 1.0;
    for (int k = 2; k <= p; ++k) factorial *= k;

    TensorP out(t.dims());
    std::vector<std::size_t> idx(p), pidx(p);
    do {
        const double w = (signed_sum ? permutation_sign(perm) : 1) / factorial;
        for (std::size_t flat = 0; flat < t.size(); ++flat) {
            std::size_t rem = flat;
            for (std::size_t s = static_cast<std::size_t>(p); s-- > 0;) {
                idx[s] = rem % t.dims()[s];
                rem /= t.dims()[s];
            }
            for (int s = 0; s < p; ++s) pidx[s] = idx[perm[s]];
            out.at(idx) += w * t.at(pidx);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return TensorP(t.dims(), out.entries(),
                   signed_sum ? TensorSymmetry::antisym : TensorSymmetry::sym);
}

}  // namespace

TensorP symmetrize(const TensorP& t) { return project_symmetry(t, false); }
TensorP antisymmetrize(const TensorP& t) { return project_symmetry(t, true); }

double tensorp_pairing(const TensorP& a, const TensorP& b) {
    if (a.dims() != b.dims()) throw std::invalid_argument("tensorp_pairing: shape mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a.entries()[k] * b.entries()[k];
    return s;
}

double tensorp_hs_norm(const TensorP& t) {
    double s = 0.0;
    for (double v : t.entries()) s += v * v;
    return std::sqrt(s);
}

double tensorp_injective_lower(const TensorP& t, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int p = t.order();
    double best = 0.0;
    std::vector<Vec> u(p);
    std::vector<std::size_t> idx(p);
    for (int trial = 0; trial < samples; ++trial) {
        for (int s = 0; s < p; ++s) {
            u[s].assign(t.dims()[s], 0.0);
            double nrm = 0.0;
            for (double& v : u[s]) {
                v = gauss(rng);
                nrm += v * v;
            }
            nrm = std::sqrt(nrm);
            for (double& v : u[s]) v /= nrm;
        }
        double acc = 0.0;
        for (std::size_t flat = 0; flat < t.size(); ++flat) {
            std::size_t rem = flat;
            double w = t.entries()[flat];
            if (w == 0.0) continue;
            for (std::size_t s = static_cast<std::size_t>(p); s-- > 0;) {
                idx[s] = rem % t.dims()[s];
                rem /= t.dims()[s];
            }
            for (int s = 0; s < p; ++s) w *= u[s][idx[s]];
            acc += w;
        }
        best = std::max(best, std::abs(acc));
    }
    return best;
}

double tensorp_projective_upper(const TensorP& t) {
    double s = 0.0;
    for (double v : t.entries()) s += std::abs(v);
    return s;
}

double CoeffSequence::norm() const {
    if (ambient == Ambient::l1) {
        double s = 0.0;
        for (double v : coeffs) s += std::abs(v);
        return s;
    }
    return norm2(coeffs);
}

SchauderSplit schauder_truncate(const CoeffSequence& x, std::size_t n) {
    SchauderSplit out;
    out.head.ambient = x.ambient;
    const std::size_t cut = std::min(n, x.coeffs.size());
    out.head.coeffs.assign(x.coeffs.begin(), x.coeffs.begin() + cut);
    CoeffSequence tail{Vec(x.coeffs.begin() + cut, x.coeffs.end()), x.ambient};
    out.tail_norm = tail.norm();
    return out;
}

std::vector<std::pair<int, int>> enumerate_shells(int l_max) {
    if (l_max < 1) throw std::invalid_argument("enumerate_shells: l_max must be >= 1");
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(l_max) * l_max);
    for (int l = 1; l <= l_max; ++l) {
        for (int j = 1; j <= l; ++j) out.emplace_back(j, l);
        for (int k = l - 1; k >= 1; --k) out.emplace_back(l, k);
    }
    return out;
}

double tensor_basis_truncation_error(const CoeffSequence& x, const CoeffSequence& y,
                                     std::size_t n) {
    if (x.ambient != CoeffSequence::Ambient::l2 || y.ambient != CoeffSequence::Ambient::l2)
        throw std::invalid_argument("tensor_basis_truncation_error: l2 ambient required");
    const SchauderSplit sx = schauder_truncate(x, n);
    const SchauderSplit sy = schauder_truncate(y, n);
    const double hx = sx.head.norm(), tx = sx.tail_norm;
    const double hy = sy.head.norm(), ty = sy.tail_norm;
    return hx * ty + tx * hy + tx * ty;
}

nlohmann::json to_json(const Tensor2& t) {
    return {{"shape", {t.rows(), t.cols()}}, {"entries", t.matrix().data()}};
}

Tensor2 tensor2_from_json(const nlohmann::json& j) {
    const auto shape = j.at("shape");
    if (shape.size() != 2) throw std::invalid_argument("tensor JSON: order-2 shape required");
    return Tensor2(shape[0].get<std::size_t>(), shape[1].get<std::size_t>(),
                   j.at("entries").get<Vec>());
}

namespace {

const char* symmetry_name(TensorSymmetry s) {
    switch (s) {
        case TensorSymmetry::sym: return "sym";
        case TensorSymmetry::antisym: return "antisym";
        default: return "none";
    }
}

}  // namespace

nlohmann::json to_json(const TensorP& t) {
    return {{"shape", t.dims()},
            {"entries", t.entries()},
            {"symmetry", symmetry_name(t.symmetry())}};
}

TensorP tensorp_from_json(const nlohmann::json& j) {
    const std::string sym = j.value("symmetry", "none");
    TensorSymmetry tag = TensorSymmetry::none;
    if (sym == "sym") tag = TensorSymmetry::sym;
    else if (sym == "antisym") tag = TensorSymmetry::antisym;
    else if (sym != "none") throw std::invalid_argument("tensor JSON: bad symmetry tag");
    return TensorP(j.at("shape").get<std::vector<std::size_t>>(), j.at("entries").get<Vec>(),
                   tag);
}

}  // namespace cliffkit
