#include "repring/polynomial.hpp"

#include <stdexcept>

namespace repring {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const Int& c) {
    LaurentPolynomial p;
    p.add(exponent, c);
    return p;
}

Int LaurentPolynomial::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPolynomial::min_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_degree() const {
    if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPolynomial::add(int e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [e, c] : a.terms_)
        for (const auto& [f, d] : b.terms_) r.add(e + f, c * d);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Int& s) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.add(e, c * s);
    return r;
}

LaurentPolynomial LaurentPolynomial::bar() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.add(-e, c);
    return r;
}

Rational LaurentPolynomial::eval(const Rational& x) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0 && x == 0) throw std::domain_error("Laurent polynomial evaluated at 0");
        Rational p = 1;
        Rational base = e < 0 ? Rational(1) / x : x;
        for (int k = 0; k < std::abs(e); ++k) p *= base;
        total += p * c;
    }
    return total;
}

Int LaurentPolynomial::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentPolynomial::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Int c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (e == 0) {
            out += c.str();
            continue;
        }
        if (c != 1) out += c.str();
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace repring
