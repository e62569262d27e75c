#pragma once

#include "repring/stablering.hpp"
#include "repring/weylfold.hpp"

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace repring {

namespace tolerance {
inline constexpr double integrality = 1e-6;
inline constexpr double symmetry = 1e-10;
inline constexpr double unitarity = 1e-8;
}  // namespace tolerance

// Integral dominant weights lambda with lambda + rho in the open alcove, graded-lex
// on |lambda| then lexicographic.
std::vector<Weight> fusion_labels(const FusionAlgebraSpec& spec);

// Generic product followed by the level fold.
WeightMap fusion_product(const FusionAlgebraSpec& spec, const Weight& lambda, const Weight& mu);

using FusionTable = std::map<std::pair<Weight, Weight>, WeightMap>;
FusionTable fusion_table(const FusionAlgebraSpec& spec);

struct SMatrix {
    FusionAlgebraSpec spec;
    // Doubled shifted points 2(lambda+rho). For B and D the list also holds the
    // spin points, so the matrix is square and unitary.
    std::vector<std::vector<int>> points;
    std::vector<bool> integral;  // point comes from an integral weight
    std::vector<std::vector<std::complex<double>>> s;
    double symmetry_error = 0;   // max |s_ij - s_ji|
    double unitarity_error = 0;  // max |(S S^*)_ij - delta_ij|
    double condition = 0;        // 2-norm condition number
    bool used_inverse = false;   // Verlinde contraction via an explicit inverse

    // index of the integral weight lambda, -1 if absent
    int index_of(const Weight& lambda) const;
};

std::shared_ptr<const SMatrix> smatrix(const FusionAlgebraSpec& spec);

Int verlinde_coefficient(const FusionAlgebraSpec& spec, const Weight& lambda, const Weight& mu, const Weight& nu);
FusionTable verlinde_table(const FusionAlgebraSpec& spec);

// --- full orthogonal group O(M) at level l ---------------------------------

// O(M)-admissible diagrams whose SO(M) representative lies in the open alcove.
std::vector<Partition> o_labels(int M, int level);
bool o_label_in_alcove(const Partition& lambda, int M, int level);

// Classical O(M) product: stable product with every term folded to an O(M) label.
RingVector o_classical_product(const Partition& lambda, const Partition& mu, int M);
// Reduce an O(M) label of the classical ring into the level-l quotient.
RingVector o_level_fold(const Partition& nu, int M, int level);
RingVector o_fusion_product(int M, int level, const Partition& lambda, const Partition& mu);

using OFusionTable = std::map<std::pair<Partition, Partition>, RingVector,
                              std::function<bool(const std::pair<Partition, Partition>&,
                                                 const std::pair<Partition, Partition>&)>>;
OFusionTable o_fusion_table(int M, int level);

// Label bijection O(M)_l -> O(l+2-M)_l: transpose, except for the corner label
// t_M((l+2-M)) which goes to t_{l+2-M}((M)).
Partition o_level_rank_image(const Partition& lambda, int M, int level);

struct LevelRankReport {
    std::string source;
    std::string target;
    std::size_t labels = 0;
    std::size_t triples = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

LevelRankReport level_rank_transpose_check(int N, int level);

// Sp(N) at level l against Sp(2l-2-N) at level l, labels transposed.
std::vector<Partition> sp_labels(int N, int level);
RingVector sp_fusion_product(int N, int level, const Partition& lambda, const Partition& mu);
LevelRankReport sp_level_rank_check(int N, int level);

}  // namespace repring
