#pragma once

#include "repring/partition.hpp"

#include <map>
#include <string>

namespace repring {

// Integer Laurent polynomial in one variable; zero coefficients are never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial monomial(int exponent, const Int& c = 1);
    static LaurentPolynomial constant(const Int& c) { return monomial(0, c); }

    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int e) const;
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const;  // requires non-zero
    int max_degree() const;

    void add(int e, const Int& c);
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator*(const Int& s) const;

    // v -> v^-1
    LaurentPolynomial bar() const;
    Rational eval(const Rational& x) const;  // throws on x = 0 with negative exponents
    Int eval_at_one() const;

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    // "x^-1", "2x^2 - x + 3"
    std::string str(const std::string& var = "x") const;

private:
    std::map<int, Int> terms_;
};

}  // namespace repring
