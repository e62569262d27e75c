#include <doctest.h>

#include "repring/fusion.hpp"

#include <cmath>
#include <cstdlib>

using namespace repring;

namespace {
WeightMap single(const Weight& w) { return {{w, 1}}; }
}  // namespace

TEST_CASE("fusion product examples") {
    FusionAlgebraSpec c13{LieType::C, 1, 3}, c14{LieType::C, 1, 4};
    CHECK(fusion_product(c13, {1}, {1}) == single({0}));
    CHECK(fusion_product(c14, {1}, {1}) == WeightMap{{{0}, 1}, {{2}, 1}});
    for (const auto& spec : {FusionAlgebraSpec{LieType::B, 2, 5}, FusionAlgebraSpec{LieType::C, 2, 4},
                             FusionAlgebraSpec{LieType::D, 3, 6}})
        for (const auto& l : fusion_labels(spec)) CHECK(fusion_product(spec, Weight(spec.rank, 0), l) == single(l));
    CHECK_THROWS(fusion_product(c13, {2}, {0}));
}

TEST_CASE("label sets") {
    CHECK(fusion_labels({LieType::C, 1, 3}).size() == 2);
    CHECK(fusion_labels({LieType::C, 2, 4}).size() == 3);
    // B2 at level 5: lambda + rho with x1 + x2 < 5
    CHECK(fusion_labels({LieType::B, 2, 5}).size() == 4);
    for (const auto& l : fusion_labels({LieType::B, 2, 6})) CHECK(l[0] >= l[1]);
}

TEST_CASE("S matrix basics") {
    auto S = smatrix({LieType::C, 1, 3});
    REQUIRE(S->s.size() == 2);
    CHECK(S->s[0][0].real() > 0);
    CHECK(std::isfinite(S->condition));
    auto B = smatrix({LieType::B, 2, 4});
    CHECK(B->symmetry_error < tolerance::symmetry);
    CHECK(B->unitarity_error < tolerance::unitarity);
    CHECK(B->index_of({0, 0}) >= 0);
}

TEST_CASE("Verlinde examples") {
    FusionAlgebraSpec c13{LieType::C, 1, 3};
    CHECK(verlinde_coefficient(c13, {1}, {1}, {0}) == 1);
    for (const auto& spec : {FusionAlgebraSpec{LieType::B, 2, 5}, FusionAlgebraSpec{LieType::C, 2, 5}})
        for (const auto& l : fusion_labels(spec)) CHECK(verlinde_coefficient(spec, Weight(2, 0), l, l) == 1);
}

TEST_CASE("fusion table equals Verlinde table") {
    for (int level = 3; level <= 6; ++level) CHECK(fusion_table({LieType::B, 2, level}) == verlinde_table({LieType::B, 2, level}));
    for (int m = 1; m <= 2; ++m)
        for (int level = 2; level <= 6; ++level) CHECK(fusion_table({LieType::C, m, level}) == verlinde_table({LieType::C, m, level}));
    CHECK(fusion_table({LieType::D, 3, 5}) == verlinde_table({LieType::D, 3, 5}));
}

TEST_CASE("fusion is commutative, positive and associative") {
    for (const auto& spec : {FusionAlgebraSpec{LieType::B, 2, 6}, FusionAlgebraSpec{LieType::C, 2, 5}}) {
        auto labels = fusion_labels(spec);
        auto F = fusion_table(spec);
        for (const auto& a : labels)
            for (const auto& b : labels) {
                CHECK(F.at({a, b}) == F.at({b, a}));
                for (const auto& [w, c] : F.at({a, b})) CHECK(c > 0);
                for (const auto& c : labels) {
                    WeightMap left, right;
                    for (const auto& [x, k] : F.at({a, b}))
                        for (const auto& [y, j] : F.at({x, c})) add_to(left, y, k * j);
                    for (const auto& [x, k] : F.at({b, c}))
                        for (const auto& [y, j] : F.at({a, x})) add_to(right, y, k * j);
                    CHECK(left == right);
                }
            }
    }
}

TEST_CASE("tables do not depend on the thread count") {
    FusionAlgebraSpec spec{LieType::C, 2, 6};
    setenv("REPRING_THREADS", "1", 1);
    auto one = fusion_table(spec);
    auto o_one = o_fusion_table(5, 7);
    setenv("REPRING_THREADS", "4", 1);
    auto four = fusion_table(spec);
    auto o_four = o_fusion_table(5, 7);
    unsetenv("REPRING_THREADS");
    CHECK(one == four);
    CHECK(o_one.size() == o_four.size());
    for (const auto& [k, v] : o_one) CHECK(o_four.at(k) == v);
}
