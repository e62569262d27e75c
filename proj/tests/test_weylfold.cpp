#include <doctest.h>

#include "repring/weylfold.hpp"

using namespace repring;

namespace {
SignedFold pos(std::vector<int> v) { return SignedFold::Of(1, std::move(v)); }
SignedFold neg(std::vector<int> v) { return SignedFold::Of(-1, std::move(v)); }
}  // namespace

TEST_CASE("orthogonal stable fold examples") {
    CHECK(fold_orthogonal_stable(Partition{2}, 3) == pos({2}));
    CHECK(fold_orthogonal_stable(Partition{3, 1}, 2) == neg({2}));
    CHECK(fold_orthogonal_stable(Partition{2, 1}, 2).zero);
}

TEST_CASE("symplectic stable fold examples") {
    CHECK(fold_symplectic_stable(Partition{1, 1, 1}, 2) == pos({1, 1, 1}));
    CHECK(fold_symplectic_stable(Partition{2}, 2).zero);
    CHECK(fold_symplectic_stable(Partition{3}, 2) == neg({1}));
    CHECK_THROWS(fold_symplectic_stable(Partition{1}, 3));
}

TEST_CASE("affine fold examples") {
    FusionAlgebraSpec c24{LieType::C, 2, 4};
    CHECK(fold_affine_weight({1, 0}, c24) == pos({1, 0}));
    CHECK(fold_affine_weight({3, 0}, c24) == neg({1, 0}));
    CHECK(fold_affine_weight({2, 0}, c24).zero);
    CHECK_THROWS(fold_affine_weight({1, 0}, FusionAlgebraSpec{LieType::B, 1, 4}));
    CHECK_THROWS(fold_affine_weight({1, 0, 0}, c24));
}

TEST_CASE("finite dominance fold examples") {
    CHECK(dominant_fold_finite({2, 1}, LieType::B, 2) == pos({2, 1}));
    CHECK(dominant_fold_finite({1, 2}, LieType::B, 2) == neg({2, 1}));
    CHECK(dominant_fold_finite({2, 0}, LieType::B, 2).zero);
    CHECK_THROWS(dominant_fold_finite({2, 1, 0}, LieType::B, 2));
}

TEST_CASE("stable folds are idempotent and shrink the diagram") {
    for (int N = 1; N <= 6; ++N)
        for (const auto& lam : partitions_upto(9)) {
            auto f = fold_orthogonal_stable(lam, N);
            if (!f.zero) {
                Partition k = f.partition();
                CHECK(k[0] + k[1] <= N);
                CHECK(lam.contains(k));
                CHECK(fold_orthogonal_stable(k, N) == pos(k.parts()));
            }
            if (N % 2 == 0) {
                auto g = fold_symplectic_stable(lam, N);
                if (!g.zero) {
                    Partition k = g.partition();
                    CHECK(k[0] <= N / 2);
                    CHECK(fold_symplectic_stable(k, N) == pos(k.parts()));
                }
            }
        }
}

TEST_CASE("reflection parity equals determinant") {
    for (int N = 1; N <= 5; ++N)
        for (const auto& lam : partitions_upto(8)) {
            FoldTrace t;
            auto f = fold_orthogonal_stable(lam, N, &t);
            CHECK(t.det == (t.reflections % 2 ? -1 : 1));
            if (!f.zero) CHECK(f.sign == t.det);
        }
}

TEST_CASE("stable folds match affine folds at two ranks") {
    for (int N = 1; N <= 6; ++N)
        for (const auto& lam : partitions_upto(7)) {
            auto f = fold_orthogonal_stable(lam, N);
            const int m0 = std::max(lam.size(), 2);
            for (int m : {m0, m0 + 1}) {
                auto g = fold_affine_weight(lam.padded(m), FusionAlgebraSpec{LieType::B, m, N + 2 * m - 1});
                CHECK(f.zero == g.zero);
                if (!f.zero && !g.zero) {
                    CHECK(f.sign == g.sign);
                    CHECK(f.partition() == g.partition());
                }
            }
            if (N % 2) continue;
            auto s = fold_symplectic_stable(lam, N);
            const int k0 = std::max(lam.size(), 1);
            for (int m : {k0, k0 + 1}) {
                auto g = fold_affine_weight(lam.padded(m), FusionAlgebraSpec{LieType::C, m, N / 2 + m + 1});
                CHECK(s.zero == g.zero);
                if (!s.zero && !g.zero) {
                    CHECK(s.sign == g.sign);
                    CHECK(s.partition() == g.partition());
                }
            }
        }
}

TEST_CASE("alcove membership") {
    FusionAlgebraSpec b{LieType::B, 2, 5};
    CHECK(b.rho2() == std::vector<int>{3, 1});
    CHECK(b.in_alcove({3, 1}));
    CHECK_FALSE(b.in_alcove({9, 1}));  // x1+x2 = 5
    FusionAlgebraSpec c{LieType::C, 2, 4};
    CHECK(c.rho2() == std::vector<int>{4, 2});
    CHECK(c.in_alcove({6, 2}));
    CHECK_FALSE(c.in_alcove({8, 2}));
    FusionAlgebraSpec d{LieType::D, 3, 6};
    CHECK(d.rho2() == std::vector<int>{4, 2, 0});
    CHECK(d.in_alcove({4, 2, 0}));
}

TEST_CASE("affine folds land in the alcove") {
    for (LieType t : {LieType::B, LieType::C, LieType::D})
        for (int level = 3; level <= 7; ++level) {
            FusionAlgebraSpec spec{t, t == LieType::D ? 3 : 2, level};
            auto r2 = spec.rho2();
            for (const auto& lam : partitions_upto(8)) {
                if (lam.rows() > spec.rank) continue;
                auto f = fold_affine_weight(lam.padded(spec.rank), spec);
                if (f.zero) continue;
                std::vector<int> x(r2.size());
                for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * f.value[i] + r2[i];
                CHECK(spec.in_alcove(x));
                CHECK(fold_affine_weight(f.value, spec) == pos(f.value));
            }
        }
}

TEST_CASE("series and type names") {
    CHECK(parse_series("orthogonal") == Series::Orthogonal);
    CHECK(parse_series("symplectic") == Series::Symplectic);
    CHECK(parse_lie_type("C") == LieType::C);
    CHECK_THROWS(parse_lie_type("E"));
}
