#include <doctest.h>

#include "repring/brauer.hpp"
#include "repring/stablering.hpp"

#include <random>

using namespace repring;

namespace {
const LaurentPolynomial x = LaurentPolynomial::monomial(1);
const LaurentPolynomial one = LaurentPolynomial::constant(1);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.size(), std::vector<Int>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

IntMatrix scaled(IntMatrix a, const Int& s) {
    for (auto& r : a)
        for (auto& v : r) v *= s;
    return a;
}

Int power(int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}
}  // namespace

TEST_CASE("parse and print diagrams") {
    auto d = BrauerDiagram::parse("(1,4)(2,3)");
    CHECK(d.n() == 2);
    CHECK(d.str() == "(1,4)(2,3)");
    CHECK(BrauerDiagram::parse("(3,4)(1,2)").str() == "(1,2)(3,4)");
    CHECK_THROWS(BrauerDiagram::parse("(1,2)(2,3)"));
    CHECK_THROWS(BrauerDiagram::parse("(1,2)", 2));
    CHECK_THROWS(BrauerDiagram::parse("(1,2"));
    for (const auto& a : all_diagrams(3)) CHECK(BrauerDiagram::parse(a.str()) == a);
}

TEST_CASE("multiplication examples") {
    auto e = BrauerDiagram::e(2, 1), s = BrauerDiagram::s(2, 1), id = BrauerDiagram::identity(2);
    auto ee = multiply(e, e);
    CHECK(ee.coefficient == x);
    CHECK(ee.diagram == e);
    auto ss = multiply(s, s);
    CHECK(ss.coefficient == one);
    CHECK(ss.diagram == id);
    auto se = multiply(s, e);
    CHECK(se.coefficient == one);
    CHECK(se.diagram == e);
    CHECK_THROWS(multiply(e, BrauerDiagram::identity(3)));
}

TEST_CASE("tensor examples") {
    CHECK(tensor(BrauerDiagram::identity(2), BrauerDiagram::identity(1)) == BrauerDiagram::identity(3));
    CHECK(tensor(BrauerDiagram::e(2, 1), BrauerDiagram::identity(1)) == BrauerDiagram::e(3, 1));
    auto w = multiply(tensor(BrauerDiagram::e(2, 1), BrauerDiagram::identity(1)),
                      tensor(BrauerDiagram::identity(1), BrauerDiagram::e(2, 1)));
    CHECK(w.cycles == 0);
    CHECK(w.diagram.str() == "(1,6)(2,3)(4,5)");
}

TEST_CASE("interchange law on disjoint supports") {
    for (const auto& a : all_diagrams(2))
        for (const auto& b : all_diagrams(2))
            for (const auto& c : all_diagrams(1))
                for (const auto& d : all_diagrams(1)) {
                    auto lhs = multiply(tensor(a, c), tensor(b, d));
                    auto ab = multiply(a, b), cd = multiply(c, d);
                    CHECK(lhs.diagram == tensor(ab.diagram, cd.diagram));
                    CHECK(lhs.coefficient == ab.coefficient * cd.coefficient);
                }
}

TEST_CASE("traces") {
    CHECK(closure_trace(BrauerDiagram::identity(3)) == one);
    CHECK(closure_trace(BrauerDiagram::e(2, 1)) == LaurentPolynomial::monomial(-1));
    CHECK(closure_trace(BrauerDiagram::s(2, 1)) == LaurentPolynomial::monomial(-1));
    CHECK(closure_trace(BrauerDiagram::e(2, 1)).str() == "x^-1");
}

TEST_CASE("Markov property") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : all_diagrams(n))
            for (const auto& chi : {BrauerDiagram::identity(1), BrauerDiagram::e(2, 1), BrauerDiagram::s(2, 1)})
                CHECK(closure_trace(tensor(a, chi)) == closure_trace(a) * closure_trace(chi));
}

TEST_CASE("associativity") {
    for (int n = 1; n <= 3; ++n) {
        auto ds = all_diagrams(n);
        for (const auto& a : ds)
            for (const auto& b : ds) {
                auto ab = multiply(a, b);
                CHECK(ab.cycles >= 0);
                CHECK(ab.cycles <= n);
                CHECK(ab.coefficient == LaurentPolynomial::monomial(ab.cycles));
                for (const auto& c : ds) {
                    auto l = multiply(ab.diagram, c);
                    auto bc = multiply(b, c);
                    auto r = multiply(a, bc.diagram);
                    CHECK(l.diagram == r.diagram);
                    CHECK(l.cycles + ab.cycles == r.cycles + bc.cycles);
                }
            }
    }
    std::mt19937 rng(7);
    auto ds = all_diagrams(4);
    std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto &a = ds[pick(rng)], &b = ds[pick(rng)], &c = ds[pick(rng)];
        auto ab = multiply(a, b), bc = multiply(b, c);
        auto l = multiply(ab.diagram, c), r = multiply(a, bc.diagram);
        CHECK(l.diagram == r.diagram);
        CHECK(l.cycles + ab.cycles == r.cycles + bc.cycles);
    }
}

TEST_CASE("tensor-space representation") {
    auto e = BrauerDiagram::e(2, 1);
    for (int N : {2, 3}) {
        auto P = phi_matrix(e, N, Series::Orthogonal);
        CHECK(matmul(P, P) == scaled(P, N));
        auto I = phi_matrix(BrauerDiagram::identity(2), N, Series::Orthogonal);
        for (std::size_t i = 0; i < I.size(); ++i)
            for (std::size_t j = 0; j < I.size(); ++j) CHECK(I[i][j] == (i == j ? 1 : 0));
    }
    for (int n = 1; n <= 3; ++n) {
        auto ds = all_diagrams(n);
        for (auto [N, series] : std::vector<std::pair<int, Series>>{
                 {2, Series::Orthogonal}, {3, Series::Orthogonal}, {2, Series::Symplectic}, {4, Series::Symplectic}}) {
            if (n == 3 && N == 4) continue;
            const int xv = phi_parameter(N, series);
            for (const auto& a : ds)
                for (const auto& b : ds) {
                    auto w = multiply(a, b);
                    CHECK(matmul(phi_matrix(a, N, series), phi_matrix(b, N, series)) ==
                          scaled(phi_matrix(w.diagram, N, series), w.cycles ? power(xv, w.cycles) : Int(1)));
                }
        }
    }
}

TEST_CASE("symplectic parameter is -N") {
    CHECK(phi_parameter(2, Series::Symplectic) == -2);
    auto e = BrauerDiagram::e(2, 1);
    auto P = phi_matrix(e, 2, Series::Symplectic);
    CHECK(matmul(P, P) == scaled(P, -2));
    CHECK(matmul(P, P) != scaled(P, 2));
}

TEST_CASE("span ranks") {
    CHECK(phi_span_rank(2, 3, Series::Orthogonal) == 3);
    CHECK(phi_span_rank(3, 4, Series::Orthogonal) == 15);
    CHECK(phi_span_rank(2, 1, Series::Orthogonal) == 1);
}

TEST_CASE("generic dimensions") {
    auto d3 = generic_dims(3);
    CHECK(d3.at(Partition{3}) == 1);
    CHECK(d3.at(Partition{1}) == 3);
    Int sq = 0;
    for (const auto& [p, c] : d3) sq += c * c;
    CHECK(sq == 15);
    for (int n = 0; n <= 10; ++n) {
        Int s = 0, df = 1;
        for (const auto& [p, c] : generic_dims(n)) {
            s += c * c;
            CHECK(c > 0);
        }
        for (int k = 2 * n - 1; k > 1; k -= 2) df *= k;
        CHECK(s == df);
        CHECK(generic_dims(n).at(Partition::from_weight({n})) == 1);
    }
}

TEST_CASE("admissible multiplicities") {
    auto o1 = admissible_mults(2, 1, Series::Orthogonal);
    CHECK(o1.size() == 1);
    CHECK(o1.at(Partition{}) == 1);
    auto o2 = admissible_mults(2, 2, Series::Orthogonal);
    CHECK(o2.size() == 3);
    CHECK(admissible_mults(3, 4, Series::Orthogonal) == generic_dims(3));
    // dimension count: sum m * dim V = N^n
    for (int N = 1; N <= 4; ++N)
        for (int n = 0; n <= 5; ++n) {
            Int total = 0, expect = power(N, n);
            for (const auto& [p, m] : admissible_mults(n, N, Series::Orthogonal)) total += m * weyl_dimension(p, Series::Orthogonal, N);
            CHECK(total == expect);
        }
}

TEST_CASE("Gram ranks") {
    CHECK(gram_rank(2, Rational(1)) == 1);
    CHECK(gram_rank(2, Rational(2)) == 3);
    CHECK(gram_rank(2, Rational(17)) == 3);
    for (int n = 1; n <= 4; ++n) {
        for (int N = 1; N <= 3; ++N) {
            Int sq = 0;
            for (const auto& [p, m] : admissible_mults(n, N, Series::Orthogonal)) sq += m * m;
            CHECK(Int(gram_rank(n, Rational(N))) == sq);
        }
        Int sq = 0;
        for (const auto& [p, m] : admissible_mults(n, 2, Series::Symplectic)) sq += m * m;
        CHECK(Int(gram_rank(n, Rational(-2))) == sq);
    }
}

TEST_CASE("truncated labels") {
    auto t = truncated_labels(2, 3, 7, Series::Orthogonal);
    CHECK(t.size() == 3);
    CHECK(truncated_labels(2, 2, 5, Series::Orthogonal) == std::vector<Partition>{Partition{}, Partition{1, 1}, Partition{2}});
    auto big = truncated_labels(3, 8, 20, Series::Orthogonal);
    CHECK(big.size() == generic_dims(3).size());
    for (auto [M, level] : std::vector<std::pair<int, int>>{{3, 5}, {3, 7}, {4, 6}})
        for (int n = 0; n <= 6; ++n) {
            auto a = truncated_labels(n, M, level, Series::Orthogonal);
            auto b = truncated_labels(n, level + 2 - M, level, Series::Orthogonal);
            std::vector<Partition> at;
            for (const auto& p : a) at.push_back(p.transpose());
            std::sort(at.begin(), at.end(), GradedLex{});
            CHECK(at == b);
        }
    CHECK_THROWS(truncated_labels(2, 1, 5, Series::Orthogonal));
}

TEST_CASE("Laurent polynomial printing") {
    CHECK(LaurentPolynomial::monomial(-1).str() == "x^-1");
    auto p = LaurentPolynomial::monomial(2, 2) - x + LaurentPolynomial::constant(3);
    CHECK(p.str() == "2x^2 - x + 3");
    CHECK(p.eval(Rational(2)) == 9);
    CHECK(LaurentPolynomial().str() == "0");
}
