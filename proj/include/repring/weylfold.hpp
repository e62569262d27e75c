#pragma once

#include "repring/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace repring {

enum class Series { Orthogonal, Symplectic };
enum class LieType { B, C, D };

std::string to_string(Series s);
std::string to_string(LieType t);
LieType parse_lie_type(const std::string& s);
Series parse_series(const std::string& s);

// Zero, or a sign together with the folded value. The meaning of `value`
// depends on the producer: diagram parts, a dominant weight, or a doubled
// shifted point.
struct SignedFold {
    bool zero = true;
    int sign = 0;
    std::vector<int> value;

    static SignedFold Zero() { return {}; }
    static SignedFold Of(int s, std::vector<int> v) { return {false, s, std::move(v)}; }
    Partition partition() const { return Partition::from_weight(value); }
    friend bool operator==(const SignedFold& a, const SignedFold& b) {
        if (a.zero || b.zero) return a.zero == b.zero;
        return a.sign == b.sign && a.value == b.value;
    }
    std::string str() const;
};

// Bookkeeping used to cross-check the two ways of computing the sign.
struct FoldTrace {
    int reflections = 0;  // number of reflections applied
    int det = 1;          // determinant of the accumulated orthogonal map
};

SignedFold fold_orthogonal_stable(const Partition& lambda, int N, FoldTrace* trace = nullptr);
SignedFold fold_symplectic_stable(const Partition& lambda, int N, FoldTrace* trace = nullptr);
SignedFold fold_stable(const Partition& lambda, Series s, int N);

struct FusionAlgebraSpec {
    LieType type = LieType::B;
    int rank = 2;
    int level = 1;

    // doubled rho
    std::vector<int> rho2() const;
    // Open alcove test on a doubled shifted point.
    bool in_alcove(const std::vector<int>& x2) const;
    std::string str() const;
};

// x2 = 2(lambda+rho). Result value is the dominant weight w.lambda.
SignedFold fold_affine(const std::vector<int>& x2, const FusionAlgebraSpec& spec, FoldTrace* trace = nullptr);
// Convenience: fold lambda+rho for an integral weight lambda.
SignedFold fold_affine_weight(const std::vector<int>& lambda, const FusionAlgebraSpec& spec);

// Same as fold_affine but also accepts the rank-one B, rank-one and rank-two D
// cases needed by SO(3), SO(2) and SO(4). B_1 uses the wall x_1 = level.
SignedFold fold_affine_lowrank(const std::vector<int>& x2, const FusionAlgebraSpec& spec, FoldTrace* trace = nullptr);

// Finite Weyl group only; x2 doubled, the result value is the doubled dominant point.
SignedFold dominant_fold_finite(const std::vector<int>& x2, LieType type, int rank);

}  // namespace repring
