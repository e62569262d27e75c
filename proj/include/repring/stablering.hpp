#pragma once

#include "repring/partition.hpp"
#include "repring/weylfold.hpp"

#include <map>
#include <vector>

namespace repring {

using Weight = std::vector<int>;
// Combination of (integral) weights; used where labels need not be partitions.
using WeightMap = std::map<Weight, Int>;

void add_to(WeightMap& m, const Weight& w, const Int& c);
RingVector to_ring_vector(const WeightMap& m);  // throws if a key is not a partition
Weight pad_weight(const Partition& p, int rank);

bool is_dominant(const Weight& w, LieType type);
// dominant representative in the finite Weyl orbit
Weight dominant_rep(const Weight& w, LieType type);
std::vector<Weight> weyl_orbit(const Weight& w, LieType type);

// All dominant mu <= lambda (lambda - mu a non-negative sum of simple roots).
std::vector<Weight> dominant_weights_below(const Weight& lambda, LieType type);

using WeightMultiplicityTable = std::map<Weight, Int>;
// Full table (all weights, not only dominant ones). Cached per (type, rank, lambda).
WeightMultiplicityTable freudenthal_weights(const Weight& lambda, LieType type, int rank);
// Dominant part only.
WeightMultiplicityTable freudenthal_dominant(const Weight& lambda, LieType type, int rank);

WeightMap klimyk_tensor(const Weight& lambda, const Weight& mu, LieType type, int rank);

// Weyl dimension formula for a dominant weight of the given type and rank.
Int weyl_dimension(const Weight& lambda, LieType type, int rank);

// O(N) and Sp(N) labels as diagrams.
Partition t_map(const Partition& lambda, int M);
bool o_admissible(const Partition& lambda, int M);
struct SOWeights {
    std::vector<Weight> weights;  // one, or two in the self-associate case
};
SOWeights o_to_so_restrict(const Partition& lambda, int M);
Int o_dimension(const Partition& lambda, int N);
Int sp_dimension(const Partition& lambda, int N);
Int weyl_dimension(const Partition& lambda, Series group, int N);

// Gr(O(infinity)) product.
RingVector stable_product(const Partition& lambda, const Partition& mu);
// Coefficient-wise triple sum, used as a consistency check of stable_product.
Int newell_littlewood_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace repring
