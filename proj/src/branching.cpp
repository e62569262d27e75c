#include "repring/branching.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace repring {

namespace {

bool even_rows(const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 0; });
}

bool even_columns(const Partition& p) { return even_rows(p.transpose()); }

void check_group(Series series, int N, const char* who) {
    if (N < 1) throw std::invalid_argument(std::string(who) + ": N must be positive");
    if (series == Series::Symplectic && N % 2)
        throw std::invalid_argument(std::string(who) + ": symplectic groups need even N");
}

LieType so_type(Series series, int N) {
    if (series == Series::Symplectic) return LieType::C;
    return N % 2 ? LieType::B : LieType::D;
}

}  // namespace

RingVector littlewood_stable(const Partition& lambda, Series series) {
    RingVector out;
    const int n = lambda.size();
    for (int k = 0; k <= n; ++k)
        for (const auto& nu : partitions_of(n - k)) {
            if (!lambda.contains(nu)) continue;
            if (series == Series::Orthogonal ? !even_rows(nu) : !even_columns(nu)) continue;
            for (const auto& mu : partitions_of(k)) {
                if (!lambda.contains(mu)) continue;
                out.add(mu, lr_coefficient(mu, nu, lambda));
            }
        }
    return out;
}

BranchTable branch(const Partition& lambda, Series series, int N) {
    check_group(series, N, "branch");
    if (lambda.rows() > N) throw std::invalid_argument("branch: diagram has more rows than N");
    BranchTable t{lambda, series, N, {}};
    const RingVector stable = littlewood_stable(lambda, series);
    for (const auto& [nu, b] : stable.terms()) {
        auto f = fold_stable(nu.transpose(), series, N);
        if (f.zero) continue;
        t.entries.add(f.partition().transpose(), b * f.sign);
    }
    if (!t.entries.nonnegative()) throw std::logic_error("branch: negative multiplicity for " + lambda.str());
    return t;
}

Int branch_dimension(const BranchTable& t) {
    Int d = 0;
    for (const auto& [mu, b] : t.entries.terms()) d += b * weyl_dimension(mu, t.series, t.N);
    return d;
}

DualityReport transpose_duality_check(const Partition& lambda, int bound) {
    DualityReport rep;
    const RingVector o = littlewood_stable(lambda, Series::Orthogonal);
    const RingVector sp = littlewood_stable(lambda.transpose(), Series::Symplectic);
    for (const auto& mu : partitions_upto(bound)) {
        Int a = o.coeff(mu), b = sp.coeff(mu.transpose());
        if (a != b)
            rep.mismatches.push_back("lambda=" + lambda.str() + " mu=" + mu.str() + ": " + a.str() + " vs " + b.str());
    }
    return rep;
}

WeightMap branch_character_oracle(const Partition& lambda, Series series, int N) {
    check_group(series, N, "branch_character_oracle");
    if (lambda.rows() > N) throw std::invalid_argument("branch_character_oracle: diagram has more rows than N");
    const int m = N / 2;
    const LieType type = so_type(series, N);
    // Gl(N) weights are compositions of |lambda| into N parts with Kostka multiplicity.
    // The torus eigenvalues are x_1..x_m, x_1^-1..x_m^-1 (and 1 for odd N).
    WeightMap chars;
    std::vector<int> a(static_cast<std::size_t>(N), 0);
    std::function<void(int, int)> go = [&](int i, int left) {
        if (i == N - 1) {
            a[static_cast<std::size_t>(i)] = left;
            Int k = kostka(lambda, a);
            if (k == 0) return;
            Weight w(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j)
                w[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(m + j)];
            add_to(chars, w, k);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[static_cast<std::size_t>(i)] = v;
            go(i + 1, left - v);
        }
    };
    go(0, lambda.size());
    WeightMap out;
    while (!chars.empty()) {
        // lexicographically largest dominant weight is maximal in the dominance order
        const Weight* top = nullptr;
        for (const auto& [w, c] : chars)
            if (is_dominant(w, type) && (!top || w > *top)) top = &w;
        if (!top) throw std::logic_error("branch_character_oracle: no dominant weight left");
        const Weight hw = *top;
        const Int c = chars.at(hw);
        if (c < 0) throw std::logic_error("branch_character_oracle: negative multiplicity");
        add_to(out, hw, c);
        for (const auto& [w, k] : freudenthal_weights(hw, type, m)) add_to(chars, w, -c * k);
    }
    return out;
}

WeightMap branch_restricted(const BranchTable& t) {
    WeightMap out;
    for (const auto& [mu, b] : t.entries.terms()) {
        if (t.series == Series::Symplectic) {
            add_to(out, pad_weight(mu, t.N / 2), b);
            continue;
        }
        for (const auto& w : o_to_so_restrict(mu, t.N).weights) add_to(out, w, b);
    }
    return out;
}

}  // namespace repring
