#include <doctest.h>

#include "repring/brauer.hpp"
#include "repring/kldecomp.hpp"

using namespace repring;

TEST_CASE("linkage orbits") {
    CHECK(linkage_orbit(Partition{2}, 2, 2).wall_fixed);
    auto o = linkage_orbit(Partition{}, 2, 4);
    CHECK_FALSE(o.wall_fixed);
    CHECK(o.members == std::vector<Partition>{Partition{}, Partition{4}});
    auto big = linkage_orbit(Partition{2, 1}, 10, 5);
    CHECK(big.members == std::vector<Partition>{Partition{2, 1}});
    CHECK_THROWS(linkage_orbit(Partition{1}, 2, 4));
}

TEST_CASE("parabolic KL basics") {
    auto one = LaurentPolynomial::constant(1);
    CHECK(parabolic_kl(Partition{}, Partition{}, 2, 4) == one);
    CHECK(parabolic_kl(Partition{}, Partition{4}, 2, 4) == one);
    CHECK(parabolic_kl(Partition{4}, Partition{}, 2, 4).is_zero());
    CHECK(parabolic_kl(Partition{1, 1}, Partition{4}, 2, 4).is_zero());
}

TEST_CASE("decomposition matrix examples") {
    auto d2 = decomposition_matrix(2, 2);
    CHECK(d2.labels == std::vector<Partition>{Partition{}, Partition{1, 1}});
    CHECK(d2.wall_fixed == std::vector<Partition>{Partition{2}});
    CHECK(d2.entries.size() == 2);
    auto d4 = decomposition_matrix(4, 2);
    CHECK(d4.entry(Partition{4}, Partition{}) == 1);
    CHECK(d4.entry(Partition{3, 1}, Partition{1, 1}) == 1);
    std::size_t off = 0;
    for (const auto& [k, v] : d4.entries)
        if (k.first != k.second) ++off;
    CHECK(off == 2);
    auto big = decomposition_matrix(4, 10);
    for (const auto& [k, v] : big.entries) CHECK(k.first == k.second);
}

TEST_CASE("unitriangular, positive, Bruhat supported") {
    for (int N : {2, 4})
        for (int n = 0; n <= kl_limits::max_boxes; ++n) {
            auto d = decomposition_matrix(n, N);
            for (const auto& l : d.labels) CHECK(d.entry(l, l) == 1);
            for (const auto& [k, v] : d.entries) {
                CHECK(v > 0);
                if (k.first == k.second) continue;
                Partition lam(k.first), mu(k.second);
                CHECK(d.orbit_base.at(lam) == d.orbit_base.at(mu));
                CHECK(d.length.at(mu) < d.length.at(lam));
            }
            for (const auto& [k, p] : d.polynomials)
                for (const auto& [e, c] : p.terms()) CHECK(c >= 0);
        }
}

TEST_CASE("stabilization inside finite affine type C") {
    for (int N : {2, 4})
        for (int n = 1; n <= kl_limits::max_boxes; ++n) {
            auto d = decomposition_matrix(n, N);
            for (int M : {2 * n, 2 * n + 2}) {
                auto a = affine_decomposition_matrix(n, N, M);
                CHECK(a.entries == d.entries);
                CHECK(a.wall_fixed == d.wall_fixed);
            }
        }
}

TEST_CASE("simple dimensions") {
    auto s = simple_dims(4, 2);
    CHECK(s.dims.at(Partition{}) == 2);
    CHECK(s.dims.at(Partition{1, 1}) == 3);
    CHECK(sl2_isotypic_multiplicity(4, 0) == 2);
    CHECK(sl2_isotypic_multiplicity(4, 2) == 3);
    CHECK(simple_dims(3, 8).dims == generic_dims(3));
    for (int N : {2, 4})
        for (int n = 0; n <= 7; ++n) {
            auto g = generic_dims(n);
            for (const auto& [p, d] : simple_dims(n, N).dims) {
                CHECK(d > 0);
                CHECK(d <= g.at(p.transpose()));
            }
        }
}

TEST_CASE("surviving simples match tensor-space multiplicities") {
    for (int n = 0; n <= 6; ++n) {
        auto s = simple_dims(n, 2);
        for (const auto& [p, d] : s.dims)
            if (p[0] <= 1) CHECK(d == sl2_isotypic_multiplicity(n, p.rows()));
    }
    for (int n = 0; n <= 6; ++n) {
        auto mult = admissible_mults(n, 4, Series::Symplectic);
        auto s = simple_dims(n, 4);
        for (const auto& [p, d] : s.dims)
            if (p[0] <= 2) CHECK(d == mult.at(p));
    }
}

TEST_CASE("box limit is enforced") {
    CHECK_THROWS(decomposition_matrix(kl_limits::max_boxes + 1, 2));
}
