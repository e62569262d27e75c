#include "repring/fusion.hpp"

#include "repring/parallel.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace repring {

namespace {

constexpr int kIterationCap = 100000;

FusionAlgebraSpec so_spec(int M, int level) {
    return {M % 2 ? LieType::B : LieType::D, M / 2, level};
}

void check_range(int M, int level, const char* who) {
    if (M < 3) throw std::invalid_argument(std::string(who) + ": O(M) fusion needs M >= 3");
    if (level < 1) throw std::invalid_argument(std::string(who) + ": level must be positive");
}

// SO(M) representative of an O(M) label: the one of lambda, t(lambda) with at most m rows.
Partition so_rep(const Partition& lambda, int M) {
    return lambda.rows() <= M / 2 ? lambda : t_map(lambda, M);
}

std::vector<int> shifted(const Weight& w, const std::vector<int>& r2) {
    std::vector<int> x(w.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * w[i] + r2[i];
    return x;
}

// Fold of the first m-1 shifted coordinates of a t-fixed D_m weight under the
// group acting on the t-orbit. Returns the parity of the twist, or -1 on a wall.
int orbit_twist(std::vector<int> y, int m, int level) {
    const int L2 = 2 * level;
    int tw = 0;
    for (int it = 0; it < kIterationCap; ++it) {
        for (auto& v : y)
            if (v < 0) {
                v = -v;
                tw ^= 1;
            }
        std::sort(y.begin(), y.end(), std::greater<int>());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] == 0) return -1;
            if (i + 1 < y.size() && y[i] == y[i + 1]) return -1;
        }
        if (m == 2) {
            if (y[0] == L2) return -1;
            if (y[0] < L2) return tw;
            y[0] = 2 * L2 - y[0];
            tw ^= 1;
            continue;
        }
        int s = y[0] + y[1];
        if (s == L2) return -1;
        if (s < L2) return tw;
        int a = y[0];
        y[0] = L2 - y[1];
        y[1] = L2 - a;
    }
    throw std::runtime_error("orbit_twist: no termination");
}

Partition abs_partition(const Weight& w) {
    std::vector<int> a;
    for (int v : w)
        if (v) a.push_back(std::abs(v));
    return Partition(a);
}

}  // namespace

bool o_label_in_alcove(const Partition& lambda, int M, int level) {
    if (!o_admissible(lambda, M)) return false;
    auto spec = so_spec(M, level);
    auto x = shifted(so_rep(lambda, M).padded(spec.rank), spec.rho2());
    return spec.in_alcove(x);
}

std::vector<Partition> o_labels(int M, int level) {
    check_range(M, level, "o_labels");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int hi) {
        Partition p(cur);
        if (!o_admissible(p, M)) return;
        if (o_label_in_alcove(p, M, level)) out.push_back(p);
        if (static_cast<int>(cur.size()) == M) return;
        for (int v = 1; v <= hi; ++v) {
            cur.push_back(v);
            go(v);
            cur.pop_back();
        }
    };
    go(level);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

RingVector o_classical_product(const Partition& lambda, const Partition& mu, int M) {
    if (!o_admissible(lambda, M) || !o_admissible(mu, M))
        throw std::invalid_argument("o_classical_product: diagram not admissible for O(" + std::to_string(M) + ")");
    RingVector out;
    const RingVector prod = stable_product(lambda, mu);
    for (const auto& [nu, c] : prod.terms()) {
        auto f = fold_orthogonal_stable(nu.transpose(), M);
        if (f.zero) continue;
        out.add(f.partition().transpose(), c * f.sign);
    }
    return out;
}

RingVector o_level_fold(const Partition& nu, int M, int level) {
    check_range(M, level, "o_level_fold");
    if (!o_admissible(nu, M)) throw std::invalid_argument("o_level_fold: diagram not admissible for O(M)");
    const auto spec = so_spec(M, level);
    const int m = spec.rank;
    const bool even = M % 2 == 0;
    const auto r2 = spec.rho2();

    bool twist = false;
    Partition base = nu;
    if (base.rows() > m) {
        base = t_map(base, M);
        twist = true;
    }
    const bool pair = even && base.rows() == m;
    std::vector<Weight> weights{base.padded(m)};
    if (pair) {
        Weight w = weights[0];
        w.back() = -w.back();
        weights.push_back(w);
    }
    // doubled coefficients, halved at the end
    std::map<Partition, Int, GradedLex> acc;
    for (const auto& w : weights) {
        const auto x = shifted(w, r2);
        auto f = fold_affine_lowrank(x, spec);
        if (f.zero) continue;
        const Weight& mu = f.value;
        const int s = f.sign;
        if (pair) {
            Partition k = abs_partition(mu);
            acc[k] += s;
            if (mu.back() == 0) acc[t_map(k, M)] += s;
            continue;
        }
        Partition k = abs_partition(mu);
        bool tk = twist;
        if (!even && (k.size() - base.size()) % 2) tk = !tk;
        if (even) {
            std::vector<int> y(x.begin(), x.end() - 1);
            int tw = orbit_twist(y, m, level);
            if (tw < 0) throw std::logic_error("o_level_fold: orbit fold hit a wall the weight fold missed");
            if (tw) tk = !tk;
        }
        if (tk) k = t_map(k, M);
        acc[k] += 2 * s;
    }
    RingVector out;
    for (const auto& [k, c] : acc) {
        if (c % 2) throw std::logic_error("o_level_fold: half-integral coefficient");
        out.add(k, c / 2);
    }
    return out;
}

RingVector o_fusion_product(int M, int level, const Partition& lambda, const Partition& mu) {
    check_range(M, level, "o_fusion_product");
    for (const auto* p : {&lambda, &mu})
        if (!o_label_in_alcove(*p, M, level))
            throw std::invalid_argument("o_fusion_product: " + p->str() + " is not a label of O(" + std::to_string(M) +
                                        ") at level " + std::to_string(level));
    RingVector out;
    const RingVector classical = o_classical_product(lambda, mu, M);
    for (const auto& [nu, c] : classical.terms()) out += o_level_fold(nu, M, level) * c;
    for (const auto& [k, c] : out.terms()) {
        if (c < 0) throw std::logic_error("o_fusion_product: negative structure constant");
        if (!o_label_in_alcove(k, M, level)) throw std::logic_error("o_fusion_product: result outside the label set");
    }
    return out;
}

namespace {
bool pair_less(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b) {
    GradedLex lt;
    if (lt(a.first, b.first)) return true;
    if (lt(b.first, a.first)) return false;
    return lt(a.second, b.second);
}
}  // namespace

OFusionTable o_fusion_table(int M, int level) {
    auto labels = o_labels(M, level);
    const std::size_t n = labels.size();
    std::vector<RingVector> cells(n * n);
    parallel_for(n * n, [&](std::size_t k) {
        std::size_t i = k / n, j = k % n;
        if (j < i) return;
        cells[k] = o_fusion_product(M, level, labels[i], labels[j]);
    });
    OFusionTable t(pair_less);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[{labels[i], labels[j]}] = cells[std::min(i, j) * n + std::max(i, j)];
    return t;
}

Partition o_level_rank_image(const Partition& lambda, int M, int level) {
    const int K = level + 2 - M;
    if (K >= 1 && lambda == t_map(Partition{K}, M)) return t_map(Partition{M}, K);
    return lambda.transpose();
}

namespace {

template <class Table>
void compare_tables(const std::vector<Partition>& src, const Table& a, const Table& b,
                    const std::function<Partition(const Partition&)>& phi, LevelRankReport& rep) {
    std::map<Partition, Partition, GradedLex> image;
    for (const auto& p : src) image.emplace(p, phi(p));
    for (const auto& x : src)
        for (const auto& y : src) {
            const RingVector& l = a.at({x, y});
            const RingVector& r = b.at({image.at(x), image.at(y)});
            for (const auto& z : src) {
                ++rep.triples;
                Int u = l.coeff(z), v = r.coeff(image.at(z));
                if (u != v)
                    rep.mismatches.push_back("N(" + x.str() + ";" + y.str() + ";" + z.str() + ") = " + u.str() +
                                             " vs " + v.str());
            }
        }
}

bool same_set(std::vector<Partition> a, std::vector<Partition> b) {
    std::sort(a.begin(), a.end(), GradedLex{});
    std::sort(b.begin(), b.end(), GradedLex{});
    return a == b;
}

}  // namespace

LevelRankReport level_rank_transpose_check(int N, int level) {
    const int K = level + 2 - N;
    if (N < 3 || K < 3)
        throw std::invalid_argument("level_rank_transpose_check: needs 3 <= N <= level - 1");
    LevelRankReport rep;
    rep.source = "O(" + std::to_string(N) + ")@" + std::to_string(level);
    rep.target = "O(" + std::to_string(K) + ")@" + std::to_string(level);
    auto src = o_labels(N, level);
    auto dst = o_labels(K, level);
    rep.labels = src.size();
    auto phi = [&](const Partition& p) { return o_level_rank_image(p, N, level); };
    std::vector<Partition> img;
    for (const auto& p : src) img.push_back(phi(p));
    if (!same_set(img, dst)) {
        rep.mismatches.push_back("label sets do not correspond");
        return rep;
    }
    auto a = o_fusion_table(N, level);
    auto b = N == K ? a : o_fusion_table(K, level);
    compare_tables(src, a, b, phi, rep);
    return rep;
}

std::vector<Partition> sp_labels(int N, int level) {
    if (N < 2 || N % 2) throw std::invalid_argument("sp_labels: N must be even and positive");
    FusionAlgebraSpec spec{LieType::C, N / 2, level};
    std::vector<Partition> out;
    for (const auto& w : fusion_labels(spec)) out.push_back(Partition::from_weight(w));
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

RingVector sp_fusion_product(int N, int level, const Partition& lambda, const Partition& mu) {
    if (N < 2 || N % 2) throw std::invalid_argument("sp_fusion_product: N must be even and positive");
    const int m = N / 2;
    FusionAlgebraSpec spec{LieType::C, m, level};
    return to_ring_vector(fusion_product(spec, pad_weight(lambda, m), pad_weight(mu, m)));
}

LevelRankReport sp_level_rank_check(int N, int level) {
    if (N < 2 || N % 2) throw std::invalid_argument("sp_level_rank_check: N must be even and positive");
    const int K = 2 * level - 2 - N;
    if (K < 2) throw std::invalid_argument("sp_level_rank_check: dual rank must be positive");
    LevelRankReport rep;
    rep.source = "Sp(" + std::to_string(N) + ")@" + std::to_string(level);
    rep.target = "Sp(" + std::to_string(K) + ")@" + std::to_string(level);
    auto src = sp_labels(N, level);
    auto dst = sp_labels(K, level);
    rep.labels = src.size();
    std::vector<Partition> img;
    for (const auto& p : src) img.push_back(p.transpose());
    if (!same_set(img, dst)) {
        rep.mismatches.push_back("label sets do not correspond");
        return rep;
    }
    auto table = [&](int n, const std::vector<Partition>& labels) {
        OFusionTable t(pair_less);
        for (const auto& x : labels)
            for (const auto& y : labels) t[{x, y}] = sp_fusion_product(n, level, x, y);
        return t;
    };
    auto a = table(N, src);
    auto b = table(K, dst);
    compare_tables(src, a, b, [](const Partition& p) { return p.transpose(); }, rep);
    return rep;
}

}  // namespace repring
