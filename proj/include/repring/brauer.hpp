#pragma once

#include "repring/linalg.hpp"
#include "repring/partition.hpp"
#include "repring/polynomial.hpp"
#include "repring/weylfold.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace repring {

// Perfect matching on vertices 1..2n; 1..n bottom row, n+1..2n top row.
class BrauerDiagram {
public:
    BrauerDiagram() = default;
    // partner[v-1] is the vertex joined to v; throws if not a perfect matching
    BrauerDiagram(int n, std::vector<int> partner);
    static BrauerDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    static BrauerDiagram identity(int n);
    // e_i: caps on bottom i,i+1 and top i,i+1 (1-based); e(2,1) is the diagram e
    static BrauerDiagram e(int n, int i);
    // s_i: strands i and i+1 crossed
    static BrauerDiagram s(int n, int i);

    int n() const { return n_; }
    int partner(int v) const { return partner_[static_cast<std::size_t>(v - 1)]; }
    // canonical form: pairs sorted by smaller endpoint
    std::vector<std::pair<int, int>> pairs() const;
    int crossings() const;
    int through_strands() const;

    std::string str() const;  // "(1,3)(2,4)"
    // n = 0 infers the strand count from the number of pairs
    static BrauerDiagram parse(std::string_view text, int n = 0);

    friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.n_ == b.n_ && a.partner_ == b.partner_;
    }
    friend bool operator!=(const BrauerDiagram& a, const BrauerDiagram& b) { return !(a == b); }
    friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.pairs() < b.pairs();
    }

private:
    int n_ = 0;
    std::vector<int> partner_;
};

struct DiagramWord {
    LaurentPolynomial coefficient;
    BrauerDiagram diagram;
    int cycles = 0;
};

// a stacked on top of b (b acts first); closed loops become powers of x.
DiagramWord multiply(const BrauerDiagram& a, const BrauerDiagram& b);
BrauerDiagram tensor(const BrauerDiagram& a, const BrauerDiagram& b);
int closure_cycles(const BrauerDiagram& a);
LaurentPolynomial closure_trace(const BrauerDiagram& a);

// All (2n-1)!! diagrams, lexicographic on canonical pair lists.
std::vector<BrauerDiagram> all_diagrams(int n);

// Matrix of the diagram on V^{(x)n}, rows indexed by the top multi-index.
// Symplectic: x specialises to -N.
IntMatrix phi_matrix(const BrauerDiagram& a, int N, Series series);
// x value under which phi_matrix is multiplicative
int phi_parameter(int N, Series series);
// Rank of the span of phi_matrix over all diagrams.
int phi_span_rank(int n, int N, Series series);

std::map<Partition, Int, GradedLex> generic_dims(int n);
std::map<Partition, Int, GradedLex> admissible_mults(int n, int N, Series series);
bool brauer_admissible(const Partition& lambda, int N, Series series);

// Rank of [tr(ab)](x0) over the diagram basis.
int gram_rank(int n, const Rational& x0);

// Labels of the level-l quotient at n strands.
std::vector<Partition> truncated_labels(int n, int M, int level, Series series);

}  // namespace repring
