#include <doctest.h>

#include "repring/branching.hpp"

using namespace repring;

TEST_CASE("Littlewood examples") {
    CHECK(littlewood_stable(Partition{1, 1}, Series::Orthogonal) == RingVector{{Partition{1, 1}, 1}});
    CHECK(littlewood_stable(Partition{1, 1}, Series::Symplectic) == RingVector{{Partition{}, 1}, {Partition{1, 1}, 1}});
    CHECK(littlewood_stable(Partition{2}, Series::Orthogonal) == RingVector{{Partition{}, 1}, {Partition{2}, 1}});
    for (const auto& l : partitions_upto(6))
        for (Series s : {Series::Orthogonal, Series::Symplectic}) {
            auto b = littlewood_stable(l, s);
            CHECK(b.coeff(l) == 1);
            for (const auto& [mu, c] : b.terms()) CHECK(l.contains(mu));
        }
}

TEST_CASE("branch examples") {
    CHECK(branch(Partition{1, 1}, Series::Symplectic, 2).entries == RingVector{{Partition{}, 1}});
    auto o3 = branch(Partition{2, 1}, Series::Orthogonal, 3);
    CHECK(o3.entries == RingVector{{Partition{1}, 1}, {Partition{2, 1}, 1}});
    CHECK(branch_dimension(o3) == 8);
    auto o2 = branch(Partition{2, 1}, Series::Orthogonal, 2);
    CHECK(o2.entries == RingVector{{Partition{1}, 1}});
    CHECK(branch_dimension(o2) == 2);
    CHECK_THROWS(branch(Partition{1, 1, 1}, Series::Orthogonal, 2));
}

TEST_CASE("dimension identity") {
    for (int N = 2; N <= 6; ++N)
        for (const auto& l : partitions_upto(5)) {
            if (l.rows() > N) continue;
            for (Series s : {Series::Orthogonal, Series::Symplectic}) {
                if (s == Series::Symplectic && N % 2) continue;
                auto t = branch(l, s, N);
                CHECK(t.entries.nonnegative());
                CHECK(branch_dimension(t) == gl_dimension(l, N));
            }
        }
}

TEST_CASE("stable regime agrees with Littlewood") {
    for (const auto& l : partitions_upto(4))
        for (Series s : {Series::Orthogonal, Series::Symplectic}) {
            const int N = std::max(2 * l.size(), 2);
            CHECK(branch(l, s, N).entries == littlewood_stable(l, s));
        }
}

TEST_CASE("transpose duality") {
    CHECK(transpose_duality_check(Partition{2, 1}, 3).ok());
    CHECK(transpose_duality_check(Partition{}, 0).ok());
    for (const auto& l : partitions_upto(5)) CHECK(transpose_duality_check(l, l.size()).ok());
}

TEST_CASE("character restriction oracle") {
    for (int N = 2; N <= 4; ++N)
        for (const auto& l : partitions_upto(4)) {
            if (l.rows() > N) continue;
            for (Series s : {Series::Orthogonal, Series::Symplectic}) {
                if (s == Series::Symplectic && N % 2) continue;
                CHECK(branch_restricted(branch(l, s, N)) == branch_character_oracle(l, s, N));
            }
        }
}
