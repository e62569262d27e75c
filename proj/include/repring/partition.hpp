#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace repring {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Young diagram, parts weakly decreasing and strictly positive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws on invalid input
    Partition(std::initializer_list<int> parts);

    // Accepts trailing zeros and unsorted-free input only; zeros are stripped.
    static Partition from_weight(const std::vector<int>& w);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0; }

    // Column lengths, i.e. the parts of the transpose.
    std::vector<int> columns() const;
    Partition transpose() const;
    bool contains(const Partition& mu) const;
    // Padded copy of length n (n must be >= rows()).
    std::vector<int> padded(int n) const;

    std::string str() const;  // "3,1", "0" for the empty diagram
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
};

// graded lex: size first, then lexicographic on the part sequence
struct GradedLex {
    bool operator()(const Partition& a, const Partition& b) const;
};

// Sparse integer combination of diagrams; zero coefficients are never stored.
class RingVector {
public:
    using Map = std::map<Partition, Int, GradedLex>;

    RingVector() = default;
    RingVector(std::initializer_list<std::pair<const Partition, Int>> init);

    void add(const Partition& p, const Int& c);
    Int coeff(const Partition& p) const;
    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool nonnegative() const;

    RingVector& operator+=(const RingVector& o);
    RingVector& operator-=(const RingVector& o);
    RingVector operator*(const Int& s) const;
    friend bool operator==(const RingVector& a, const RingVector& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RingVector& a, const RingVector& b) { return !(a == b); }

    std::string str() const;  // "[2] + [1,1] + [0]"

private:
    Map terms_;
};

std::vector<Partition> partitions_of(int n);
// All diagrams with at most max_boxes boxes, graded-lex order.
std::vector<Partition> partitions_upto(int max_boxes);

Partition transpose(const Partition& lambda);

// Multiplicity of nu in lambda (x) mu for Gl.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
RingVector gl_product(const Partition& lambda, const Partition& mu);

// Number of semistandard tableaux of shape nu and weight w (any composition).
Int kostka(const Partition& nu, const std::vector<int>& weight);

// Schur polynomial product expanded by monomials, no LR rule involved.
RingVector schur_product_oracle(const Partition& lambda, const Partition& mu, int nvars);

Int gl_dimension(const Partition& lambda, int N);

}  // namespace repring
