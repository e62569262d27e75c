#include <doctest.h>

#include "repring/stablering.hpp"

using namespace repring;

TEST_CASE("stable product examples") {
    CHECK(stable_product(Partition{1}, Partition{1}) ==
          RingVector{{Partition{}, 1}, {Partition{1, 1}, 1}, {Partition{2}, 1}});
    CHECK(stable_product(Partition{}, Partition{2, 1}) == RingVector{{Partition{2, 1}, 1}});
    CHECK(stable_product(Partition{1}, Partition{2}) ==
          RingVector{{Partition{1}, 1}, {Partition{2, 1}, 1}, {Partition{3}, 1}});
    // V_(1,1) (x) V_(1,1) for large SO
    CHECK(stable_product(Partition{1, 1}, Partition{1, 1}) ==
          RingVector{{Partition{}, 1}, {Partition{1, 1}, 1}, {Partition{2}, 1}, {Partition{1, 1, 1, 1}, 1},
                     {Partition{2, 1, 1}, 1}, {Partition{2, 2}, 1}});
}

TEST_CASE("klimyk examples") {
    CHECK(to_ring_vector(klimyk_tensor({1, 0}, {1, 0}, LieType::B, 2)) ==
          RingVector{{Partition{}, 1}, {Partition{1, 1}, 1}, {Partition{2}, 1}});
    CHECK(to_ring_vector(klimyk_tensor({1, 0}, {1, 0}, LieType::C, 2)) ==
          RingVector{{Partition{}, 1}, {Partition{1, 1}, 1}, {Partition{2}, 1}});
    for (LieType t : {LieType::B, LieType::C, LieType::D}) {
        Weight mu{2, 1, 0};
        WeightMap r = klimyk_tensor({0, 0, 0}, mu, t, 3);
        CHECK(r.size() == 1);
        CHECK(r.at(mu) == 1);
    }
    CHECK_THROWS(klimyk_tensor({0, 1}, {1, 0}, LieType::B, 2));
}

TEST_CASE("freudenthal examples") {
    auto v = freudenthal_weights({1, 0}, LieType::B, 2);
    CHECK(v.size() == 5);
    for (const auto& w : std::vector<Weight>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {0, 0}}) CHECK(v.at(w) == 1);
    auto triv = freudenthal_weights({0, 0}, LieType::C, 2);
    CHECK(triv.size() == 1);
    CHECK(triv.at({0, 0}) == 1);
    CHECK(freudenthal_weights({2, 0}, LieType::C, 2).at({0, 0}) == 2);
    CHECK_THROWS(freudenthal_weights({0, 1}, LieType::C, 2));
}

TEST_CASE("weight tables: dimension, top weight, Weyl symmetry") {
    for (LieType t : {LieType::B, LieType::C, LieType::D})
        for (const auto& lam : partitions_upto(4)) {
            const int m = 3;
            if (lam.rows() > m) continue;
            Weight w = lam.padded(m);
            auto table = freudenthal_weights(w, t, m);
            Int total = 0;
            for (const auto& [mu, c] : table) {
                CHECK(c > 0);
                total += c;
            }
            CHECK(total == weyl_dimension(w, t, m));
            CHECK(table.at(w) == 1);
            for (const auto& [mu, c] : table)
                for (const auto& img : weyl_orbit(mu, t)) CHECK(table.at(img) == c);
        }
}

TEST_CASE("Weyl dimensions") {
    CHECK(weyl_dimension(Partition{2}, Series::Orthogonal, 3) == 5);
    CHECK(weyl_dimension(Partition{1}, Series::Symplectic, 4) == 4);
    CHECK(weyl_dimension(Partition{2, 1}, Series::Orthogonal, 3) == 5);
    CHECK(weyl_dimension(Partition{1, 1}, Series::Orthogonal, 4) == 6);
    CHECK(weyl_dimension(Partition{1}, Series::Orthogonal, 2) == 2);
    CHECK(weyl_dimension(Partition{1, 1}, Series::Symplectic, 4) == 5);
    CHECK(weyl_dimension({1, 1}, LieType::B, 2) == 10);
    CHECK_THROWS(weyl_dimension(Partition{2, 2}, Series::Orthogonal, 3));
}

TEST_CASE("t map and restriction to SO") {
    CHECK(t_map(Partition{1, 1}, 2) == Partition{});
    CHECK(t_map(Partition{1}, 2) == Partition{1});
    CHECK(t_map(Partition{}, 3) == Partition{1, 1, 1});
    for (int M = 1; M <= 6; ++M)
        for (const auto& lam : partitions_upto(6))
            if (o_admissible(lam, M)) CHECK(t_map(t_map(lam, M), M) == lam);
    CHECK(o_to_so_restrict(Partition{1, 1}, 2).weights == std::vector<Weight>{{0}});
    CHECK(o_to_so_restrict(Partition{2, 1}, 3).weights == std::vector<Weight>{{2}});
    CHECK(o_to_so_restrict(Partition{1}, 2).weights == std::vector<Weight>{{1}, {-1}});
    CHECK_THROWS(t_map(Partition{1, 1, 1}, 2));
}

TEST_CASE("stable product is commutative, unital and associative") {
    auto ps = partitions_upto(3);
    for (const auto& a : ps) {
        CHECK(stable_product(Partition{}, a) == RingVector{{a, 1}});
        for (const auto& b : ps) {
            RingVector ab = stable_product(a, b);
            CHECK(ab == stable_product(b, a));
            CHECK(ab.nonnegative());
            for (const auto& [nu, c] : ab.terms()) CHECK((a.size() + b.size() - nu.size()) % 2 == 0);
            if (a.size() + b.size() > 5) continue;
            for (const auto& c : ps) {
                if (a.size() + b.size() + c.size() > 6) continue;
                RingVector left, right;
                for (const auto& [nu, k] : ab.terms()) left += stable_product(nu, c) * k;
                const RingVector bc = stable_product(b, c);
                for (const auto& [nu, k] : bc.terms()) right += stable_product(a, nu) * k;
                CHECK(left == right);
            }
        }
    }
}

TEST_CASE("stable product against Klimyk at two ranks") {
    auto ps = partitions_upto(4);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            if (a.size() + b.size() > 4) continue;
            const int m0 = std::max(a.size() + b.size(), 2);
            RingVector s = stable_product(a, b);
            for (int m : {m0, m0 + 1}) CHECK(to_ring_vector(klimyk_tensor(a.padded(m), b.padded(m), LieType::B, m)) == s);
        }
}

TEST_CASE("triple-sum coefficient matches") {
    auto ps = partitions_upto(4);
    for (const auto& a : ps)
        for (const auto& b : ps) {
            const RingVector ab = stable_product(a, b);
            for (const auto& [nu, c] : ab.terms()) CHECK(newell_littlewood_coefficient(a, b, nu) == c);
        }
}
