#include "repring/brauer.hpp"

#include "repring/stablering.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace repring {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int k) : p(static_cast<std::size_t>(k)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) {
            p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
            x = p[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

BrauerDiagram::BrauerDiagram(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {
    if (n < 0) throw std::invalid_argument("BrauerDiagram: negative strand count");
    if (static_cast<int>(partner_.size()) != 2 * n) throw std::invalid_argument("BrauerDiagram: wrong number of vertices");
    for (int v = 1; v <= 2 * n; ++v) {
        int w = partner_[static_cast<std::size_t>(v - 1)];
        if (w < 1 || w > 2 * n || w == v || partner_[static_cast<std::size_t>(w - 1)] != v)
            throw std::invalid_argument("BrauerDiagram: not a perfect matching");
    }
}

BrauerDiagram BrauerDiagram::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (static_cast<int>(pairs.size()) != n) throw std::invalid_argument("BrauerDiagram: expected " + std::to_string(n) + " pairs");
    std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b)
            throw std::invalid_argument("BrauerDiagram: vertex out of range");
        auto& pa = partner[static_cast<std::size_t>(a - 1)];
        auto& pb = partner[static_cast<std::size_t>(b - 1)];
        if (pa || pb) throw std::invalid_argument("BrauerDiagram: vertex used twice");
        pa = b;
        pb = a;
    }
    return BrauerDiagram(n, partner);
}

BrauerDiagram BrauerDiagram::identity(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 1; i <= n; ++i) p.emplace_back(i, n + i);
    return from_pairs(n, p);
}

BrauerDiagram BrauerDiagram::e(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("BrauerDiagram::e: index out of range");
    std::vector<std::pair<int, int>> p{{i, i + 1}, {n + i, n + i + 1}};
    for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1) p.emplace_back(j, n + j);
    return from_pairs(n, p);
}

BrauerDiagram BrauerDiagram::s(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("BrauerDiagram::s: index out of range");
    std::vector<std::pair<int, int>> p{{i, n + i + 1}, {i + 1, n + i}};
    for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1) p.emplace_back(j, n + j);
    return from_pairs(n, p);
}

std::vector<std::pair<int, int>> BrauerDiagram::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v <= 2 * n_; ++v)
        if (v < partner(v)) out.emplace_back(v, partner(v));
    return out;
}

int BrauerDiagram::through_strands() const {
    int t = 0;
    for (int v = 1; v <= n_; ++v)
        if (partner(v) > n_) ++t;
    return t;
}

int BrauerDiagram::crossings() const {
    // bottom row at positions 1..n, top row above; caps and cups drawn as arcs
    enum Kind { Cap, Cup, Through };
    auto ch = pairs();
    auto kind = [this](const std::pair<int, int>& c) {
        if (c.second <= n_) return Cap;
        if (c.first > n_) return Cup;
        return Through;
    };
    int cr = 0;
    for (std::size_t i = 0; i < ch.size(); ++i)
        for (std::size_t j = i + 1; j < ch.size(); ++j) {
            auto c1 = ch[i], c2 = ch[j];
            Kind k1 = kind(c1), k2 = kind(c2);
            if (k1 == Through && k2 == Through) {
                if ((c1.first - c2.first) * (c1.second - c2.second) < 0) ++cr;
            } else if (k1 == k2) {
                auto [a, b] = c1;
                auto [c, d] = c2;
                if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) ++cr;
            } else if (k1 == Through || k2 == Through) {
                auto arc = k1 == Through ? c2 : c1;
                auto t = k1 == Through ? c1 : c2;
                int pos = kind(arc) == Cap ? t.first : t.second;
                if (arc.first < pos && pos < arc.second) ++cr;
            }
        }
    return cr;
}

std::string BrauerDiagram::str() const {
    std::string s;
    for (auto [a, b] : pairs()) s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return s;
}

BrauerDiagram BrauerDiagram::parse(std::string_view text, int n) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&] {
        skip();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("diagram: expected a vertex number in \"" + std::string(text) + "\"");
        return std::stoi(std::string(text.substr(start, i - start)));
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument(std::string("diagram: expected '") + c + "' in \"" + std::string(text) + "\"");
        ++i;
    };
    skip();
    while (i < text.size()) {
        expect('(');
        int a = number();
        expect(',');
        int b = number();
        expect(')');
        pairs.emplace_back(a, b);
        skip();
    }
    if (n == 0) n = static_cast<int>(pairs.size());
    return from_pairs(n, pairs);
}

DiagramWord multiply(const BrauerDiagram& a, const BrauerDiagram& b) {
    const int n = a.n();
    if (b.n() != n) throw std::invalid_argument("multiply: strand counts differ");
    // nodes 0..n-1 bottom of b, n..2n-1 middle, 2n..3n-1 top of a
    UnionFind uf(3 * n);
    auto nb = [n](int v) { return v <= n ? v - 1 : n + (v - n - 1); };
    auto na = [n](int v) { return v <= n ? n + v - 1 : 2 * n + (v - n - 1); };
    for (int v = 1; v <= 2 * n; ++v) {
        uf.unite(nb(v), nb(b.partner(v)));
        uf.unite(na(v), na(a.partner(v)));
    }
    std::vector<int> first(static_cast<std::size_t>(3 * n), -1);
    std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
    auto label = [n](int node) { return node < n ? node + 1 : n + (node - 2 * n) + 1; };
    std::vector<bool> external_root(static_cast<std::size_t>(3 * n), false);
    for (int node = 0; node < 3 * n; ++node) {
        if (node >= n && node < 2 * n) continue;
        int r = uf.find(node);
        external_root[static_cast<std::size_t>(r)] = true;
        int& f = first[static_cast<std::size_t>(r)];
        if (f < 0) {
            f = node;
        } else {
            partner[static_cast<std::size_t>(label(f) - 1)] = label(node);
            partner[static_cast<std::size_t>(label(node) - 1)] = label(f);
        }
    }
    int cycles = 0;
    std::vector<bool> seen(static_cast<std::size_t>(3 * n), false);
    for (int node = n; node < 2 * n; ++node) {
        int r = uf.find(node);
        if (external_root[static_cast<std::size_t>(r)] || seen[static_cast<std::size_t>(r)]) continue;
        seen[static_cast<std::size_t>(r)] = true;
        ++cycles;
    }
    return {LaurentPolynomial::monomial(cycles), BrauerDiagram(n, partner), cycles};
}

BrauerDiagram tensor(const BrauerDiagram& a, const BrauerDiagram& b) {
    const int na = a.n(), nb = b.n(), n = na + nb;
    auto map_a = [&](int v) { return v <= na ? v : n + (v - na); };
    auto map_b = [&](int v) { return v <= nb ? na + v : n + na + (v - nb); };
    std::vector<std::pair<int, int>> p;
    for (auto [x, y] : a.pairs()) p.emplace_back(map_a(x), map_a(y));
    for (auto [x, y] : b.pairs()) p.emplace_back(map_b(x), map_b(y));
    return BrauerDiagram::from_pairs(n, p);
}

int closure_cycles(const BrauerDiagram& a) {
    const int n = a.n();
    UnionFind uf(2 * n);
    for (int v = 1; v <= 2 * n; ++v) uf.unite(v - 1, a.partner(v) - 1);
    for (int i = 1; i <= n; ++i) uf.unite(i - 1, n + i - 1);
    int c = 0;
    for (int v = 0; v < 2 * n; ++v)
        if (uf.find(v) == v) ++c;
    return c;
}

LaurentPolynomial closure_trace(const BrauerDiagram& a) {
    return LaurentPolynomial::monomial(closure_cycles(a) - a.n());
}

std::vector<BrauerDiagram> all_diagrams(int n) {
    if (n < 0) throw std::invalid_argument("all_diagrams: negative strand count");
    std::vector<BrauerDiagram> out;
    std::vector<int> partner(static_cast<std::size_t>(2 * n), 0);
    std::function<void()> go = [&] {
        int v = 0;
        while (v < 2 * n && partner[static_cast<std::size_t>(v)]) ++v;
        if (v == 2 * n) {
            out.emplace_back(n, partner);
            return;
        }
        for (int w = v + 1; w < 2 * n; ++w) {
            if (partner[static_cast<std::size_t>(w)]) continue;
            partner[static_cast<std::size_t>(v)] = w + 1;
            partner[static_cast<std::size_t>(w)] = v + 1;
            go();
            partner[static_cast<std::size_t>(v)] = 0;
            partner[static_cast<std::size_t>(w)] = 0;
        }
    };
    go();
    return out;
}

int phi_parameter(int N, Series series) { return series == Series::Orthogonal ? N : -N; }

IntMatrix phi_matrix(const BrauerDiagram& a, int N, Series series) {
    if (N < 1) throw std::invalid_argument("phi_matrix: N must be positive");
    if (series == Series::Symplectic && N % 2) throw std::invalid_argument("phi_matrix: symplectic needs even N");
    const int n = a.n();
    std::size_t dim = 1;
    for (int i = 0; i < n; ++i) dim *= static_cast<std::size_t>(N);
    const int m = N / 2;
    // symplectic form: (v_i, v_{i+m}) = 1 = -(v_{i+m}, v_i)
    auto omega = [m](int i, int j) {
        if (j == i + m && i < m) return 1;
        if (i == j + m && j < m) return -1;
        return 0;
    };
    const bool sp = series == Series::Symplectic;
    const int global = sp && a.crossings() % 2 ? -1 : 1;
    const auto ch = a.pairs();
    IntMatrix M(dim, std::vector<Int>(dim, 0));
    std::vector<int> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    auto decode = [&](std::size_t idx, std::vector<int>& digits) {
        for (int k = n - 1; k >= 0; --k) {
            digits[static_cast<std::size_t>(k)] = static_cast<int>(idx % static_cast<std::size_t>(N));
            idx /= static_cast<std::size_t>(N);
        }
    };
    for (std::size_t J = 0; J < dim; ++J) {
        decode(J, out);
        for (std::size_t I = 0; I < dim; ++I) {
            decode(I, in);
            auto lab = [&](int v) {
                return v <= n ? in[static_cast<std::size_t>(v - 1)] : out[static_cast<std::size_t>(v - n - 1)];
            };
            int val = global;
            for (auto [p, q] : ch) {
                int x = lab(p), y = lab(q);
                bool through = p <= n && q > n;
                if (through || !sp)
                    val *= x == y ? 1 : 0;
                else if (q <= n)
                    val *= omega(x, y);
                else
                    val *= -omega(x, y);
                if (!val) break;
            }
            if (val) M[J][I] = val;
        }
    }
    return M;
}

int phi_span_rank(int n, int N, Series series) {
    IntMatrix rows;
    for (const auto& d : all_diagrams(n)) {
        auto M = phi_matrix(d, N, series);
        std::vector<Int> flat;
        for (auto& r : M)
            for (auto& v : r) flat.push_back(v);
        rows.push_back(std::move(flat));
    }
    return integer_rank(std::move(rows));
}

namespace {

std::vector<Partition> neighbours(const Partition& p) {
    std::vector<Partition> out;
    const auto& parts = p.parts();
    // remove a box
    for (int i = 0; i < p.rows(); ++i)
        if (i + 1 == p.rows() || parts[static_cast<std::size_t>(i)] > parts[static_cast<std::size_t>(i + 1)]) {
            auto q = parts;
            --q[static_cast<std::size_t>(i)];
            out.push_back(Partition::from_weight(q));
        }
    // add a box
    for (int i = 0; i <= p.rows(); ++i)
        if (i == 0 || p[i - 1] > p[i]) {
            auto q = p.padded(p.rows() + 1);
            ++q[static_cast<std::size_t>(i)];
            out.push_back(Partition::from_weight(q));
        }
    return out;
}

std::map<Partition, Int, GradedLex> walk(int n, const std::function<bool(const Partition&)>& allowed) {
    if (n < 0) throw std::invalid_argument("Bratteli walk: negative strand count");
    std::map<Partition, Int, GradedLex> level{{Partition{}, 1}};
    for (int k = 0; k < n; ++k) {
        std::map<Partition, Int, GradedLex> next;
        for (const auto& [p, c] : level)
            for (const auto& q : neighbours(p))
                if (allowed(q)) next[q] += c;
        level = std::move(next);
    }
    return level;
}

}  // namespace

std::map<Partition, Int, GradedLex> generic_dims(int n) {
    return walk(n, [](const Partition&) { return true; });
}

bool brauer_admissible(const Partition& lambda, int N, Series series) {
    if (series == Series::Orthogonal) return o_admissible(lambda, std::abs(N));
    return 2 * lambda[0] <= std::abs(N);
}

std::map<Partition, Int, GradedLex> admissible_mults(int n, int N, Series series) {
    if (series == Series::Symplectic && N % 2) throw std::invalid_argument("admissible_mults: symplectic needs even N");
    return walk(n, [&](const Partition& p) { return brauer_admissible(p, N, series); });
}

int gram_rank(int n, const Rational& x0) {
    if (n < 0 || n > 5) throw std::invalid_argument("gram_rank: supported for 0 <= n <= 5");
    if (x0 == 0) throw std::invalid_argument("gram_rank: the trace has poles at x = 0");
    const auto basis = all_diagrams(n);
    const std::size_t k = basis.size();
    // exponents range over [-n, n]
    std::vector<Rational> pw(static_cast<std::size_t>(2 * n + 1));
    for (int e = -n; e <= n; ++e) pw[static_cast<std::size_t>(e + n)] = LaurentPolynomial::monomial(e).eval(x0);
    RationalMatrix G(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto w = multiply(basis[i], basis[j]);
            int e = w.cycles + closure_cycles(w.diagram) - n;
            G[i][j] = pw[static_cast<std::size_t>(e + n)];
        }
    return rational_rank(G);
}

std::vector<Partition> truncated_labels(int n, int M, int level, Series series) {
    if (n < 0) throw std::invalid_argument("truncated_labels: negative strand count");
    std::function<bool(const Partition&)> keep;
    if (series == Series::Orthogonal) {
        if (!(1 < M && M < level)) throw std::invalid_argument("truncated_labels: needs 1 < M < level");
        keep = [=](const Partition& p) { return o_admissible(p, M) && p[0] + p[1] <= level + 2 - M; };
    } else {
        if (M == 0 || M % 2) throw std::invalid_argument("truncated_labels: symplectic needs nonzero even M");
        const int m = std::abs(M) / 2;
        if (level - m - 1 < 0) throw std::invalid_argument("truncated_labels: level too small for M");
        keep = [=](const Partition& p) { return p[0] <= m && p.rows() <= level - m - 1; };
    }
    std::vector<Partition> out;
    for (int k = n; k >= 0; k -= 2)
        for (const auto& p : partitions_of(k))
            if (keep(p)) out.push_back(p);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

}  // namespace repring
