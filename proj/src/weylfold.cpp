#include "repring/weylfold.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace repring {

std::string to_string(Series s) { return s == Series::Orthogonal ? "orthogonal" : "symplectic"; }

std::string to_string(LieType t) {
    switch (t) {
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
    }
    return "?";
}

LieType parse_lie_type(const std::string& s) {
    if (s == "B" || s == "b") return LieType::B;
    if (s == "C" || s == "c") return LieType::C;
    if (s == "D" || s == "d") return LieType::D;
    throw std::invalid_argument("unknown Lie type: " + s);
}

Series parse_series(const std::string& s) {
    if (s == "orthogonal" || s == "O" || s == "o") return Series::Orthogonal;
    if (s == "symplectic" || s == "Sp" || s == "sp") return Series::Symplectic;
    throw std::invalid_argument("unknown series: " + s);
}

std::string SignedFold::str() const {
    if (zero) return "Zero";
    std::string s = sign > 0 ? "(+1,(" : "(-1,(";
    for (std::size_t i = 0; i < value.size(); ++i) s += (i ? "," : "") + std::to_string(value[i]);
    return s + "))";
}

namespace {

// Signed permutation matrix, tracked as rows: current = A * original.
class SignedPerm {
public:
    explicit SignedPerm(std::size_t n) : perm_(n), sgn_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    }
    void swap(std::size_t i, std::size_t j) {
        std::swap(perm_[i], perm_[j]);
        std::swap(sgn_[i], sgn_[j]);
    }
    void negate(std::size_t i) { sgn_[i] = -sgn_[i]; }
    int det() const {
        int d = 1;
        for (int s : sgn_) d *= s;
        std::vector<bool> seen(perm_.size(), false);
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = perm_[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) d = -d;
        }
        return d;
    }

private:
    std::vector<std::size_t> perm_;
    std::vector<int> sgn_;
};

struct Tracker {
    SignedPerm A;
    int refl = 0;
    explicit Tracker(std::size_t n) : A(n) {}
    int sign() const { return refl % 2 ? -1 : 1; }
    void report(FoldTrace* t) const {
        if (!t) return;
        t->reflections = refl;
        t->det = A.det();
    }
};

// bubble sort into decreasing order; each transposition is one reflection
void sort_desc(std::vector<int>& x, Tracker& tr) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j + 1 < x.size() - i; ++j)
            if (x[j] < x[j + 1]) {
                std::swap(x[j], x[j + 1]);
                tr.A.swap(j, j + 1);
                ++tr.refl;
            }
}

bool has_duplicates(const std::vector<int>& sorted_desc) {
    for (std::size_t i = 0; i + 1 < sorted_desc.size(); ++i)
        if (sorted_desc[i] == sorted_desc[i + 1]) return true;
    return false;
}

constexpr int kIterationCap = 1 << 20;

}  // namespace

SignedFold fold_orthogonal_stable(const Partition& lambda, int N, FoldTrace* trace) {
    if (N <= 0) throw std::invalid_argument("fold_orthogonal_stable: cut must be positive");
    const int L = lambda.rows();
    const int K = L + lambda[0] + N + 4;
    const auto Ku = static_cast<std::size_t>(K);
    // doubled shifted coordinates x_i = 2(lambda_i + 1 - N/2 - i), i from 1
    std::vector<int> x(Ku);
    for (int i = 0; i < K; ++i) x[static_cast<std::size_t>(i)] = 2 * lambda[i] + 2 - N - 2 * (i + 1);
    Tracker tr(Ku);
    if (lambda[0] + lambda[1] <= N) {
        tr.report(trace);
        return SignedFold::Of(1, lambda.parts());
    }
    for (int it = 0;; ++it) {
        if (it > kIterationCap) throw std::runtime_error("fold_orthogonal_stable: no termination");
        sort_desc(x, tr);
        if (has_duplicates(x)) return SignedFold::Zero();
        int s = x[0] + x[1];
        if (s == 0) return SignedFold::Zero();
        if (s < 0) break;
        // s_0 (l1,l2,...) -> (-l2,-l1,...)
        int a = x[0], b = x[1];
        x[0] = -b;
        x[1] = -a;
        tr.A.swap(0, 1);
        tr.A.negate(0);
        tr.A.negate(1);
        ++tr.refl;
        std::vector<int> y(x);
        Tracker tmp = tr;
        sort_desc(y, tmp);
        if (!(y[0] + y[1] < s)) throw std::logic_error("fold_orthogonal_stable: loop variant violated");
    }
    // the tail beyond the prefix must be untouched
    const int tail_next = 2 - N - 2 * (K + 1);
    if (x.back() <= tail_next) throw std::logic_error("fold_orthogonal_stable: prefix too short");
    std::vector<int> out(Ku);
    for (int i = 0; i < K; ++i) {
        int v = x[static_cast<std::size_t>(i)] - 2 + N + 2 * (i + 1);
        if (v < 0 || v % 2) throw std::logic_error("fold_orthogonal_stable: bad result");
        out[static_cast<std::size_t>(i)] = v / 2;
    }
    tr.report(trace);
    return SignedFold::Of(tr.sign(), Partition::from_weight(out).parts());
}

SignedFold fold_symplectic_stable(const Partition& lambda, int N, FoldTrace* trace) {
    if (N <= 0 || N % 2) throw std::invalid_argument("fold_symplectic_stable: cut must be positive and even");
    const int h = N / 2;
    const int K = lambda.rows() + lambda[0] + N + 4;
    const auto Ku = static_cast<std::size_t>(K);
    // l_i = lambda_i - N/2 - i
    std::vector<int> l(Ku);
    for (int i = 0; i < K; ++i) l[static_cast<std::size_t>(i)] = lambda[i] - h - (i + 1);
    Tracker tr(Ku);
    if (lambda[0] <= h) {
        tr.report(trace);
        return SignedFold::Of(1, lambda.parts());
    }
    for (int it = 0;; ++it) {
        if (it > kIterationCap) throw std::runtime_error("fold_symplectic_stable: no termination");
        sort_desc(l, tr);
        if (has_duplicates(l)) return SignedFold::Zero();
        if (std::find(l.begin(), l.end(), 0) != l.end()) return SignedFold::Zero();
        if (l[0] < 0) break;
        int before = l[0];
        l[0] = -l[0];
        tr.A.negate(0);
        ++tr.refl;
        int after = std::max(l[0], l.size() > 1 ? l[1] : l[0]);
        if (!(after < before)) throw std::logic_error("fold_symplectic_stable: loop variant violated");
    }
    const int tail_next = -h - (K + 1);
    if (l.back() <= tail_next) throw std::logic_error("fold_symplectic_stable: prefix too short");
    std::vector<int> out(Ku);
    for (int i = 0; i < K; ++i) {
        int v = l[static_cast<std::size_t>(i)] + h + (i + 1);
        if (v < 0) throw std::logic_error("fold_symplectic_stable: bad result");
        out[static_cast<std::size_t>(i)] = v;
    }
    tr.report(trace);
    return SignedFold::Of(tr.sign(), Partition::from_weight(out).parts());
}

SignedFold fold_stable(const Partition& lambda, Series s, int N) {
    return s == Series::Orthogonal ? fold_orthogonal_stable(lambda, N) : fold_symplectic_stable(lambda, N);
}

std::vector<int> FusionAlgebraSpec::rho2() const {
    std::vector<int> r(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) {
        int v = 0;
        switch (type) {
            case LieType::B: v = 2 * rank + 1 - 2 * i; break;
            case LieType::C: v = 2 * (rank + 1 - i); break;
            case LieType::D: v = 2 * (rank - i); break;
        }
        r[static_cast<std::size_t>(i - 1)] = v;
    }
    return r;
}

bool FusionAlgebraSpec::in_alcove(const std::vector<int>& x) const {
    const int m = rank;
    if (static_cast<int>(x.size()) != m) return false;
    for (int i = 0; i + 1 < m; ++i)
        if (!(x[static_cast<std::size_t>(i)] > x[static_cast<std::size_t>(i + 1)])) return false;
    const int L2 = 2 * level;
    switch (type) {
        case LieType::B:
            if (x.back() <= 0) return false;
            return m >= 2 ? x[0] + x[1] < L2 : x[0] < L2;
        case LieType::C:
            if (x.back() <= 0) return false;
            return x[0] < L2;
        case LieType::D:
            if (m >= 2 && !(x[static_cast<std::size_t>(m - 2)] > std::abs(x.back()))) return false;
            if (m == 2) return x[0] + x[1] < L2 && x[0] - x[1] < L2;
            return m >= 3 ? x[0] + x[1] < L2 : std::abs(x[0]) < L2;
    }
    return false;
}

std::string FusionAlgebraSpec::str() const {
    return to_string(type) + std::to_string(rank) + "@" + std::to_string(level);
}

namespace {

// Finite Weyl group dominance on doubled coordinates. Returns false on a wall.
bool finite_dominance(std::vector<int>& x, LieType type, Tracker& tr) {
    const std::size_t m = x.size();
    if (type == LieType::D) {
        int negs = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (x[i] < 0) {
                x[i] = -x[i];
                tr.A.negate(i);
                ++negs;
                ++tr.refl;
            }
        sort_desc(x, tr);
        if (negs % 2) {
            x[m - 1] = -x[m - 1];
            tr.A.negate(m - 1);
            ++tr.refl;
        }
        for (std::size_t i = 0; i + 1 < m; ++i)
            if (std::abs(x[i]) == std::abs(x[i + 1])) return false;
        return true;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (x[i] < 0) {
            x[i] = -x[i];
            tr.A.negate(i);
            ++tr.refl;
        }
    sort_desc(x, tr);
    if (has_duplicates(x)) return false;
    return x.back() != 0;
}

SignedFold fold_affine_impl(const std::vector<int>& x2, const FusionAlgebraSpec& spec, FoldTrace* trace) {
    const int m = spec.rank;
    if (static_cast<int>(x2.size()) != m) throw std::invalid_argument("fold_affine: wrong weight length");
    if (spec.level <= 0) throw std::invalid_argument("fold_affine: level must be positive");
    if (spec.type == LieType::D && m < 2) throw std::invalid_argument("fold_affine: type D needs rank >= 2");
    const int L2 = 2 * spec.level;
    std::vector<int> x(x2);
    Tracker tr(static_cast<std::size_t>(m));
    for (int it = 0;; ++it) {
        if (it > kIterationCap) throw std::runtime_error("fold_affine: no termination");
        if (!finite_dominance(x, spec.type, tr)) return SignedFold::Zero();
        if (spec.type == LieType::C || (spec.type == LieType::B && m == 1)) {
            if (x[0] == L2) return SignedFold::Zero();
            if (x[0] < L2) break;
            x[0] = 2 * L2 - x[0];
            tr.A.negate(0);
            ++tr.refl;
            continue;
        }
        int s = x[0] + x[1];
        if (s == L2) return SignedFold::Zero();
        if (spec.type == LieType::D && m == 2) {
            int d = x[0] - x[1];
            if (d == L2) return SignedFold::Zero();
            if (s < L2 && d < L2) break;
            int a = x[0], b = x[1];
            if (s > L2) {
                x[0] = L2 - b;
                x[1] = L2 - a;
                tr.A.swap(0, 1);
                tr.A.negate(0);
                tr.A.negate(1);
            } else {
                x[0] = L2 + b;
                x[1] = a - L2;
                tr.A.swap(0, 1);
            }
            ++tr.refl;
            continue;
        }
        if (s < L2) break;
        int a = x[0], b = x[1];
        x[0] = L2 - b;
        x[1] = L2 - a;
        tr.A.swap(0, 1);
        tr.A.negate(0);
        tr.A.negate(1);
        ++tr.refl;
    }
    auto r2 = spec.rho2();
    std::vector<int> lam(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < lam.size(); ++i) {
        int d = x[i] - r2[i];
        if (d % 2) throw std::invalid_argument("fold_affine: non-integral weight");
        lam[i] = d / 2;
    }
    tr.report(trace);
    return SignedFold::Of(tr.sign(), lam);
}

}  // namespace

SignedFold fold_affine(const std::vector<int>& x2, const FusionAlgebraSpec& spec, FoldTrace* trace) {
    if (spec.rank < 1) throw std::invalid_argument("fold_affine: rank must be positive");
    if ((spec.type == LieType::B || spec.type == LieType::D) && spec.rank < 2)
        throw std::invalid_argument("fold_affine: types B and D need rank >= 2");
    return fold_affine_impl(x2, spec, trace);
}

SignedFold fold_affine_lowrank(const std::vector<int>& x2, const FusionAlgebraSpec& spec, FoldTrace* trace) {
    if (spec.rank < 1) throw std::invalid_argument("fold_affine: rank must be positive");
    return fold_affine_impl(x2, spec, trace);
}

SignedFold fold_affine_weight(const std::vector<int>& lambda, const FusionAlgebraSpec& spec) {
    if (static_cast<int>(lambda.size()) != spec.rank) throw std::invalid_argument("fold_affine: wrong weight length");
    auto r2 = spec.rho2();
    std::vector<int> x(lambda.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * lambda[i] + r2[i];
    return fold_affine(x, spec);
}

SignedFold dominant_fold_finite(const std::vector<int>& x2, LieType type, int rank) {
    if (static_cast<int>(x2.size()) != rank) throw std::invalid_argument("dominant_fold_finite: wrong length");
    std::vector<int> x(x2);
    Tracker tr(x.size());
    if (x.empty()) return SignedFold::Of(1, x);
    if (!finite_dominance(x, type, tr)) return SignedFold::Zero();
    return SignedFold::Of(tr.A.det(), x);
}

}  // namespace repring
