#pragma once

#include "repring/partition.hpp"
#include "repring/stablering.hpp"
#include "repring/weylfold.hpp"

#include <string>
#include <vector>

namespace repring {

// b^lambda_mu for the stable restriction Gl -> O (nu with even rows) or
// Gl -> Sp (nu with even columns).
RingVector littlewood_stable(const Partition& lambda, Series series);

struct BranchTable {
    Partition source;
    Series series = Series::Orthogonal;
    int N = 0;
    RingVector entries;  // O(N) or Sp(N) labels -> multiplicity
};

// Restriction of the Gl(N) module of lambda to O(N) or Sp(N).
BranchTable branch(const Partition& lambda, Series series, int N);

// sum_mu b_mu dim V_mu; compare with gl_dimension(lambda, N).
Int branch_dimension(const BranchTable& t);

struct DualityReport {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// b^lambda_mu(O) = b^{lambda'}_{mu'}(Sp) for all mu with at most `bound` boxes.
DualityReport transpose_duality_check(const Partition& lambda, int bound);

// Independent oracle: restrict the Gl(N) character to a maximal torus of
// SO(N) or Sp(N) and peel off highest weights. Returns SO(N)/Sp(N) dominant
// weights with multiplicities.
WeightMap branch_character_oracle(const Partition& lambda, Series series, int N);
// Same data computed from branch(), O labels restricted to SO(N).
WeightMap branch_restricted(const BranchTable& t);

}  // namespace repring
