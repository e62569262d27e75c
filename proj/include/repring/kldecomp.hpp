#pragma once

#include "repring/partition.hpp"
#include "repring/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace repring {

enum class KLConvention { Antispherical, Spherical };
std::string to_string(KLConvention c);

namespace kl_limits {
inline constexpr int max_boxes = 8;
inline constexpr int max_diameter = 6;
}  // namespace kl_limits

// One dot-action orbit of Sp(N) diagrams cut at n boxes.
struct LinkageClass {
    int N = 0;
    int n = 0;
    bool wall_fixed = false;
    std::vector<Partition> members;  // increasing length
    std::vector<int> lengths;
    int diameter() const { return lengths.empty() ? 0 : lengths.back() - lengths.front(); }
};

// Shifted sequence l_i = lambda_i - N/2 - i, i = 1..count.
std::vector<int> symplectic_shifted(const Partition& lambda, int N, int count);

LinkageClass linkage_orbit(const Partition& lambda, int N, int n);

// Parabolic KL polynomial in q for the cosets of mu and lambda (zero unless
// mu <= lambda in the same orbit).
LaurentPolynomial parabolic_kl(const Partition& mu, const Partition& lambda, int N, int n,
                               KLConvention conv = KLConvention::Antispherical);

struct DecompositionMatrix {
    int N = 0;
    int n = 0;
    std::vector<Partition> labels;      // regular labels, graded-lex
    std::vector<Partition> wall_fixed;  // excluded
    std::map<Partition, int, GradedLex> length;  // coset length inside the orbit
    std::map<Partition, Partition, GradedLex> orbit_base;
    // a^lambda_mu keyed by (lambda, mu); only non-zero entries stored
    std::map<std::pair<std::vector<int>, std::vector<int>>, Int> entries;
    // all KL polynomials with mu < lambda, for inspection
    std::map<std::pair<std::vector<int>, std::vector<int>>, LaurentPolynomial> polynomials;

    Int entry(const Partition& lambda, const Partition& mu) const;
};

DecompositionMatrix decomposition_matrix(int n, int N, KLConvention conv = KLConvention::Antispherical);

// Same numbers inside affine type C_{M/2} at level (N+M+2)/2.
DecompositionMatrix affine_decomposition_matrix(int n, int N, int M,
                                                KLConvention conv = KLConvention::Antispherical);

struct SimpleDims {
    std::map<Partition, Int, GradedLex> dims;
    std::vector<Partition> wall_fixed;
};

// Unitriangular solve d_mu = sum_lambda L_lambda a^lambda_mu.
SimpleDims simple_dims(int n, int N, KLConvention conv = KLConvention::Antispherical);
SimpleDims simple_dims(const DecompositionMatrix& a);

// Multiplicity of spin k/2 in the n-th tensor power of the 2-dimensional
// representation, by highest-weight counting.
Int sl2_isotypic_multiplicity(int n, int k);

}  // namespace repring
