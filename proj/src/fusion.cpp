#include "repring/fusion.hpp"

#include "repring/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace repring {

namespace {

using cd = std::complex<double>;

bool weight_less(const Weight& a, const Weight& b) {
    auto mass = [](const Weight& w) {
        long s = 0;
        for (int v : w) s += std::abs(v);
        return s;
    };
    long ma = mass(a), mb = mass(b);
    if (ma != mb) return ma < mb;
    return a < b;
}

// Doubled points x in the open alcove with x - 2rho all even (integral) or,
// when spin is set, all odd.
std::vector<std::vector<int>> alcove_points(const FusionAlgebraSpec& spec, bool spin) {
    const int m = spec.rank;
    const auto r2 = spec.rho2();
    const int L2 = 2 * spec.level;
    std::vector<std::vector<int>> out;
    std::vector<int> x(static_cast<std::size_t>(m));
    const int parity = spin ? 1 : 0;
    std::function<void(int, int)> go = [&](int i, int hi) {
        if (i == m) {
            if (spec.in_alcove(x)) out.push_back(x);
            return;
        }
        const int lo = (spec.type == LieType::D && i == m - 1) ? -hi : (spec.type == LieType::D ? 0 : 1);
        for (int v = hi; v >= lo; --v) {
            if (((v - r2[static_cast<std::size_t>(i)]) % 2 + 2) % 2 != parity) continue;
            x[static_cast<std::size_t>(i)] = v;
            go(i + 1, v);
        }
    };
    go(0, L2);
    return out;
}

Weight unshift(const std::vector<int>& x, const std::vector<int>& r2) {
    Weight w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) w[i] = (x[i] - r2[i]) / 2;
    return w;
}

void require_label(const FusionAlgebraSpec& spec, const Weight& lambda, const char* who) {
    if (static_cast<int>(lambda.size()) != spec.rank)
        throw std::invalid_argument(std::string(who) + ": wrong weight length");
    auto r2 = spec.rho2();
    std::vector<int> x(lambda.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * lambda[i] + r2[i];
    if (!spec.in_alcove(x)) throw std::invalid_argument(std::string(who) + ": label outside the alcove of " + spec.str());
}

// Sum over the finite Weyl group of eps(w) exp(i a (wX).Y), a = 2 pi c / level,
// by the determinant expansion of signed permutations.
cd alternant(const std::vector<int>& X, const std::vector<int>& Y, LieType type, double a) {
    const int m = static_cast<int>(X.size());
    Eigen::MatrixXcd S(m, m), C(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double t = a * X[static_cast<std::size_t>(i)] * Y[static_cast<std::size_t>(j)];
            S(i, j) = cd(0, 2 * std::sin(t));
            C(i, j) = cd(2 * std::cos(t), 0);
        }
    if (type == LieType::D) return 0.5 * (C.determinant() + S.determinant());
    return S.determinant();
}

struct SpecKey {
    int type, rank, level;
    bool operator<(const SpecKey& o) const {
        return std::tie(type, rank, level) < std::tie(o.type, o.rank, o.level);
    }
};

struct SData {
    std::shared_ptr<const SMatrix> S;
    Eigen::MatrixXcd inverse;
};

std::mutex& s_mutex() {
    static std::mutex m;
    return m;
}
std::map<SpecKey, SData>& s_cache() {
    static std::map<SpecKey, SData> c;
    return c;
}

const SData& sdata(const FusionAlgebraSpec& spec) {
    SpecKey key{static_cast<int>(spec.type), spec.rank, spec.level};
    {
        std::lock_guard lock(s_mutex());
        auto it = s_cache().find(key);
        if (it != s_cache().end()) return it->second;
    }
    auto S = std::make_shared<SMatrix>();
    S->spec = spec;
    for (const auto& x : alcove_points(spec, false)) {
        S->points.push_back(x);
        S->integral.push_back(true);
    }
    if (spec.type != LieType::C)
        for (const auto& x : alcove_points(spec, true)) {
            S->points.push_back(x);
            S->integral.push_back(false);
        }
    const std::size_t n = S->points.size();
    if (n == 0) throw std::invalid_argument("smatrix: empty alcove for " + spec.str());
    // integral labels come first in weight order
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto r2 = spec.rho2();
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (S->integral[a] != S->integral[b]) return static_cast<bool>(S->integral[a]);
        return weight_less(S->points[a], S->points[b]);
    });
    {
        auto pts = S->points;
        auto integ = S->integral;
        for (std::size_t i = 0; i < n; ++i) {
            S->points[i] = pts[idx[i]];
            S->integral[i] = integ[idx[i]];
        }
    }
    // (x, y) = X.Y / 4 on doubled points; half of that for C
    const double c = spec.type == LieType::C ? 1.0 / 8.0 : 1.0 / 4.0;
    const double a = 2 * M_PI * c / spec.level;
    Eigen::MatrixXcd A(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    parallel_for(n, [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j)
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                alternant(S->points[i], S->points[j], spec.type, a);
    });
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        double nrm = A.row(i).norm();
        if (nrm == 0) throw std::logic_error("smatrix: vanishing row");
        A.row(i) /= nrm;
    }
    cd s00 = A(0, 0);
    if (std::abs(s00) < 1e-14) throw std::logic_error("smatrix: vanishing Weyl denominator");
    A *= std::conj(s00) / std::abs(s00);

    S->s.assign(n, std::vector<cd>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) S->s[i][j] = A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    S->symmetry_error = (A - A.transpose()).cwiseAbs().maxCoeff();
    Eigen::MatrixXcd U = A * A.adjoint() - Eigen::MatrixXcd::Identity(A.rows(), A.cols());
    S->unitarity_error = U.cwiseAbs().maxCoeff();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    auto sv = svd.singularValues();
    S->condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;

    SData d;
    if (S->unitarity_error > tolerance::unitarity) {
        S->used_inverse = true;
        d.inverse = A.partialPivLu().inverse();
    } else {
        d.inverse = A.adjoint();
    }
    d.S = S;
    std::lock_guard lock(s_mutex());
    return s_cache().emplace(key, std::move(d)).first->second;
}

}  // namespace

std::vector<Weight> fusion_labels(const FusionAlgebraSpec& spec) {
    if (spec.rank < 1 || spec.level < 1) throw std::invalid_argument("fusion_labels: rank and level must be positive");
    auto r2 = spec.rho2();
    std::vector<Weight> out;
    for (const auto& x : alcove_points(spec, false)) out.push_back(unshift(x, r2));
    std::sort(out.begin(), out.end(), weight_less);
    return out;
}

WeightMap fusion_product(const FusionAlgebraSpec& spec, const Weight& lambda, const Weight& mu) {
    require_label(spec, lambda, "fusion_product");
    require_label(spec, mu, "fusion_product");
    WeightMap out;
    for (const auto& [nu, c] : klimyk_tensor(lambda, mu, spec.type, spec.rank)) {
        auto f = fold_affine_weight(nu, spec);
        if (f.zero) continue;
        add_to(out, f.value, c * f.sign);
    }
    for (const auto& [w, c] : out)
        if (c < 0) throw std::logic_error("fusion_product: negative structure constant in " + spec.str());
    return out;
}

FusionTable fusion_table(const FusionAlgebraSpec& spec) {
    auto labels = fusion_labels(spec);
    const std::size_t n = labels.size();
    std::vector<WeightMap> cells(n * n);
    parallel_for(n * n, [&](std::size_t k) {
        std::size_t i = k / n, j = k % n;
        if (j < i) return;
        cells[k] = fusion_product(spec, labels[i], labels[j]);
    });
    FusionTable t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[{labels[i], labels[j]}] = cells[std::min(i, j) * n + std::max(i, j)];
    return t;
}

int SMatrix::index_of(const Weight& lambda) const {
    if (static_cast<int>(lambda.size()) != spec.rank) return -1;
    auto r2 = spec.rho2();
    std::vector<int> x(lambda.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * lambda[i] + r2[i];
    for (std::size_t i = 0; i < points.size(); ++i)
        if (integral[i] && points[i] == x) return static_cast<int>(i);
    return -1;
}

std::shared_ptr<const SMatrix> smatrix(const FusionAlgebraSpec& spec) { return sdata(spec).S; }

Int verlinde_coefficient(const FusionAlgebraSpec& spec, const Weight& lambda, const Weight& mu, const Weight& nu) {
    const SData& d = sdata(spec);
    const SMatrix& S = *d.S;
    int a = S.index_of(lambda), b = S.index_of(mu), c = S.index_of(nu);
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("verlinde_coefficient: label outside the alcove of " + spec.str());
    const std::size_t n = S.points.size();
    cd sum = 0;
    for (std::size_t s = 0; s < n; ++s)
        sum += S.s[static_cast<std::size_t>(a)][s] * S.s[static_cast<std::size_t>(b)][s] *
               d.inverse(static_cast<Eigen::Index>(s), c) / S.s[0][s];
    double r = std::round(sum.real());
    if (std::abs(sum.real() - r) > tolerance::integrality || std::abs(sum.imag()) > tolerance::integrality)
        throw std::logic_error("verlinde_coefficient: non-integral value in " + spec.str());
    if (r < 0) throw std::logic_error("verlinde_coefficient: negative value in " + spec.str());
    return Int(static_cast<long long>(r));
}

FusionTable verlinde_table(const FusionAlgebraSpec& spec) {
    auto labels = fusion_labels(spec);
    FusionTable t;
    for (const auto& a : labels)
        for (const auto& b : labels) {
            WeightMap row;
            for (const auto& c : labels) add_to(row, c, verlinde_coefficient(spec, a, b, c));
            t[{a, b}] = row;
        }
    return t;
}

}  // namespace repring
