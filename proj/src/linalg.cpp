#include "repring/linalg.hpp"

#include <utility>

namespace repring {

int integer_rank(IntMatrix a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int rational_rank(const RationalMatrix& a) {
    IntMatrix m;
    m.reserve(a.size());
    for (const auto& row : a) {
        Int l = 1;
        for (const auto& v : row) {
            Int d = boost::multiprecision::denominator(v);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        std::vector<Int> ir;
        ir.reserve(row.size());
        for (const auto& v : row) ir.push_back(boost::multiprecision::numerator(v) * (l / boost::multiprecision::denominator(v)));
        m.push_back(std::move(ir));
    }
    return integer_rank(std::move(m));
}

}  // namespace repring
