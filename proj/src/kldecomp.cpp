#include "repring/kldecomp.hpp"

#include "repring/brauer.hpp"
#include "repring/weylfold.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace repring {

std::string to_string(KLConvention c) { return c == KLConvention::Antispherical ? "antispherical" : "spherical"; }

namespace {

enum class Move { Up, Down, Fixed, Outside };

// Right cosets of a parabolic subgroup inside one regular orbit, cut at n boxes.
struct CosetGraph {
    std::vector<Partition> nodes;  // BFS order, so lengths are non-decreasing
    std::map<Partition, int, GradedLex> index;
    std::vector<int> length;
    std::vector<Partition> outside;
    std::map<Partition, int, GradedLex> outside_index;
    // edges[x][s] = (move, target); target indexes `outside` for Move::Outside
    std::vector<std::vector<std::pair<Move, int>>> edges;
};

using Successor = std::function<Partition(const Partition&, int)>;

CosetGraph build_graph(const Partition& base, int gens, int n, const Successor& act) {
    CosetGraph g;
    g.nodes.push_back(base);
    g.index.emplace(base, 0);
    g.length.push_back(0);
    std::vector<std::vector<std::pair<int, Partition>>> raw;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const Partition x = g.nodes[k];
        raw.emplace_back();
        for (int s = 0; s < gens; ++s) {
            Partition y = act(x, s);
            raw.back().emplace_back(s, y);
            if (y == x || y.size() > n || g.index.count(y)) continue;
            g.index.emplace(y, static_cast<int>(g.nodes.size()));
            g.nodes.push_back(y);
            g.length.push_back(g.length[k] + 1);
        }
    }
    g.edges.resize(g.nodes.size());
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const Partition& x = g.nodes[k];
        for (const auto& [s, y] : raw[k]) {
            if (y == x) {
                g.edges[k].emplace_back(Move::Fixed, static_cast<int>(k));
                continue;
            }
            if (y.size() > n) {
                auto it = g.outside_index.find(y);
                int o;
                if (it == g.outside_index.end()) {
                    o = static_cast<int>(g.outside.size());
                    g.outside.push_back(y);
                    g.outside_index.emplace(y, o);
                } else {
                    o = it->second;
                }
                g.edges[k].emplace_back(Move::Outside, o);
                continue;
            }
            int t = g.index.at(y);
            int d = g.length[static_cast<std::size_t>(t)] - g.length[k];
            if (d == 1) {
                // moving up never removes boxes; the cut at n boxes relies on it
                if (y.size() < x.size()) throw std::logic_error("coset graph: box count drops along an upward edge");
                g.edges[k].emplace_back(Move::Up, t);
            } else if (d == -1) {
                g.edges[k].emplace_back(Move::Down, t);
            } else {
                throw std::logic_error("coset graph: edge does not change length by one");
            }
        }
    }
    return g;
}

using Column = std::map<int, LaurentPolynomial>;

// Canonical basis of the (anti)spherical module restricted to the graph:
// result[x][y] = n_{y,x}(v).
std::vector<Column> canonical_basis(const CosetGraph& g, KLConvention conv) {
    const std::size_t count = g.nodes.size();
    std::vector<Column> C(count);
    const LaurentPolynomial v = LaurentPolynomial::monomial(1);
    const LaurentPolynomial vinv = LaurentPolynomial::monomial(-1);
    const LaurentPolynomial fixed = conv == KLConvention::Antispherical ? LaurentPolynomial::monomial(1, -1) : vinv;
    C[0][0] = LaurentPolynomial::constant(1);
    std::vector<std::size_t> by_length(count);
    for (std::size_t i = 0; i < count; ++i) by_length[i] = i;
    for (std::size_t x = 1; x < count; ++x) {
        int s = -1, xs = -1;
        for (std::size_t k = 0; k < g.edges[x].size(); ++k)
            if (g.edges[x][k].first == Move::Down) {
                s = static_cast<int>(k);
                xs = g.edges[x][k].second;
                break;
            }
        if (s < 0) throw std::logic_error("canonical_basis: no descent for a non-minimal coset");
        Column acc;
        std::map<int, LaurentPolynomial> overflow;
        for (const auto& [y, c] : C[static_cast<std::size_t>(xs)]) {
            acc[y] += c * v;
            auto [mv, t] = g.edges[static_cast<std::size_t>(y)][static_cast<std::size_t>(s)];
            switch (mv) {
                case Move::Up: acc[t] += c; break;
                case Move::Down:
                    acc[t] += c;
                    acc[y] += c * (vinv - v);
                    break;
                case Move::Fixed: acc[y] += c * fixed; break;
                case Move::Outside: overflow[t] += c; break;
            }
        }
        for (const auto& [o, c] : overflow)
            if (!c.is_zero()) throw std::logic_error("canonical_basis: support leaves the box cut");
        // subtract constant terms from the top down
        for (int len = g.length[x]; len >= 0; --len)
            for (std::size_t z = 0; z < count; ++z) {
                if (g.length[z] != len || z == x) continue;
                auto it = acc.find(static_cast<int>(z));
                if (it == acc.end()) continue;
                Int k = it->second.coeff(0);
                if (k == 0) continue;
                for (const auto& [y, c] : C[z]) acc[y] -= c * k;
            }
        Column clean;
        for (auto& [y, c] : acc) {
            if (c.is_zero()) continue;
            if (static_cast<std::size_t>(y) == x) {
                if (c != LaurentPolynomial::constant(1)) throw std::logic_error("canonical_basis: leading coefficient is not 1");
            } else {
                if (c.min_degree() < 1) throw std::logic_error("canonical_basis: coefficient not in vZ[v]");
                for (const auto& [e, k] : c.terms())
                    if (k < 0) throw std::logic_error("canonical_basis: negative KL coefficient");
            }
            clean.emplace(y, std::move(c));
        }
        C[x] = std::move(clean);
    }
    return C;
}

// n_{y,x}(v) = sum c_k v^k  ->  P(q) = sum c_k q^{(d-k)/2}, d = l(x) - l(y)
LaurentPolynomial to_q_polynomial(const LaurentPolynomial& nv, int d) {
    LaurentPolynomial p;
    for (const auto& [k, c] : nv.terms()) {
        if ((d - k) % 2 || d - k < 0) throw std::logic_error("KL polynomial: parity or degree mismatch");
        p.add((d - k) / 2, c);
    }
    return p;
}

// ----- stable symplectic model -----

struct StableOrbit {
    int N = 0, K = 0;
    std::vector<int> a;  // sorted absolute values, first K
    bool wall = false;
    Partition base;
};

StableOrbit stable_orbit(const Partition& lambda, int N, int n) {
    StableOrbit o;
    o.N = N;
    o.K = n + 2;
    auto l = symplectic_shifted(lambda, N, o.K);
    std::set<int> seen;
    for (int v : l) {
        if (v == 0 || !seen.insert(std::abs(v)).second) {
            o.wall = true;
            return o;
        }
    }
    o.a.assign(seen.begin(), seen.end());
    std::vector<int> parts;
    for (int i = 1; i <= o.K; ++i) parts.push_back(-o.a[static_cast<std::size_t>(i - 1)] + N / 2 + i);
    o.base = Partition::from_weight(parts);
    return o;
}

Partition stable_act(const StableOrbit& o, const Partition& x, int s) {
    auto l = symplectic_shifted(x, o.N, o.K);
    std::vector<bool> pos(static_cast<std::size_t>(o.K) + 1, false);
    for (int v : l) {
        auto it = std::lower_bound(o.a.begin(), o.a.end(), std::abs(v));
        if (it == o.a.end() || *it != std::abs(v)) throw std::logic_error("linkage: label left its orbit");
        if (v > 0) pos[static_cast<std::size_t>(it - o.a.begin()) + 1] = true;
    }
    if (s == 0) {
        pos[1] = !pos[1];
    } else {
        std::swap(pos[static_cast<std::size_t>(s)], pos[static_cast<std::size_t>(s) + 1]);
    }
    std::vector<int> seq;
    for (int j = o.K; j >= 1; --j)
        if (pos[static_cast<std::size_t>(j)]) seq.push_back(o.a[static_cast<std::size_t>(j - 1)]);
    for (int j = 1; j <= o.K && static_cast<int>(seq.size()) < o.K; ++j)
        if (!pos[static_cast<std::size_t>(j)]) seq.push_back(-o.a[static_cast<std::size_t>(j - 1)]);
    std::vector<int> parts;
    for (int i = 1; i <= o.K; ++i) {
        int p = seq[static_cast<std::size_t>(i - 1)] + o.N / 2 + i;
        if (p < 0) throw std::logic_error("linkage: negative part");
        parts.push_back(p);
    }
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw std::logic_error("linkage: sequence not decreasing");
    return Partition::from_weight(parts);
}

void check_inputs(const Partition& lambda, int N, int n) {
    if (N < 2 || N % 2) throw std::invalid_argument("linkage: N must be even and positive");
    if (n < 0 || n > kl_limits::max_boxes)
        throw std::invalid_argument("linkage: n must lie in [0, " + std::to_string(kl_limits::max_boxes) + "]");
    if (lambda.size() > n || (n - lambda.size()) % 2)
        throw std::invalid_argument("linkage: |lambda| must be at most n with the parity of n");
}

CosetGraph stable_graph(const StableOrbit& o, int n) {
    return build_graph(o.base, o.K, n, [&o](const Partition& x, int s) { return stable_act(o, x, s); });
}

// ----- affine type C model -----

struct AffineOrbit {
    int m = 0, level = 0;
    std::vector<int> nu;  // lambda + rho in the fundamental alcove
    bool wall = false;
    Partition base;
};

AffineOrbit affine_orbit(const Partition& lambda, int m, int level) {
    AffineOrbit o;
    o.m = m;
    o.level = level;
    FusionAlgebraSpec spec{LieType::C, m, level};
    auto f = fold_affine_weight(lambda.padded(m), spec);
    if (f.zero) {
        o.wall = true;
        return o;
    }
    o.base = Partition::from_weight(f.value);
    o.nu.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) o.nu[static_cast<std::size_t>(i)] = f.value[static_cast<std::size_t>(i)] + m - i;
    return o;
}

Partition affine_act(const AffineOrbit& o, const Partition& x, int s) {
    const int m = o.m, L2 = 2 * o.level;
    std::vector<int> p(static_cast<std::size_t>(m)), eps(p.size()), perm(p.size()), t(p.size());
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = x[i] + m - i;
    // p = w(nu): p_i = eps_i nu_{perm_i} + L2 t_i
    for (std::size_t i = 0; i < p.size(); ++i) {
        int r = ((p[i] % L2) + L2) % L2;
        bool found = false;
        for (std::size_t j = 0; j < o.nu.size() && !found; ++j)
            for (int e : {1, -1})
                if ((((e * o.nu[j]) % L2) + L2) % L2 == r) {
                    eps[i] = e;
                    perm[i] = static_cast<int>(j);
                    t[i] = (p[i] - e * o.nu[j]) / L2;
                    found = true;
                    break;
                }
        if (!found) throw std::logic_error("linkage: point is not in the affine orbit");
    }
    std::vector<int> y(o.nu);
    if (s == 0) {
        y[0] = L2 - y[0];
    } else if (s < m) {
        std::swap(y[static_cast<std::size_t>(s - 1)], y[static_cast<std::size_t>(s)]);
    } else {
        y[static_cast<std::size_t>(m - 1)] = -y[static_cast<std::size_t>(m - 1)];
    }
    std::vector<int> q(p.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        q[i] = std::abs(eps[i] * y[static_cast<std::size_t>(perm[i])] + L2 * t[i]);
    std::sort(q.begin(), q.end(), std::greater<int>());
    std::vector<int> parts(q.size());
    for (int i = 0; i < m; ++i) parts[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] - (m - i);
    return Partition::from_weight(parts);
}

template <class Orbit, class Graph>
void fill_matrix(DecompositionMatrix& dm, const std::vector<Partition>& labels, const std::function<Orbit(const Partition&)>& orbit_of,
                 const Graph& graph_of, KLConvention conv) {
    std::set<std::vector<int>> done;
    for (const auto& lambda : labels) {
        Orbit o = orbit_of(lambda);
        if (o.wall) {
            dm.wall_fixed.push_back(lambda);
            continue;
        }
        dm.labels.push_back(lambda);
        if (!done.insert(o.base.parts()).second) continue;
        CosetGraph g = graph_of(o);
        const int diam = g.length.back();
        if (diam > kl_limits::max_diameter)
            throw std::invalid_argument("decomposition_matrix: orbit diameter " + std::to_string(diam) + " exceeds the cap");
        auto C = canonical_basis(g, conv);
        for (std::size_t x = 0; x < g.nodes.size(); ++x) {
            dm.length[g.nodes[x]] = g.length[x];
            dm.orbit_base[g.nodes[x]] = o.base;
            for (const auto& [y, c] : C[x]) {
                auto key = std::make_pair(g.nodes[x].parts(), g.nodes[static_cast<std::size_t>(y)].parts());
                dm.entries[key] = c.eval_at_one();
                if (static_cast<std::size_t>(y) != x)
                    dm.polynomials[key] = to_q_polynomial(c, g.length[x] - g.length[static_cast<std::size_t>(y)]);
            }
        }
    }
    std::sort(dm.labels.begin(), dm.labels.end(), GradedLex{});
    std::sort(dm.wall_fixed.begin(), dm.wall_fixed.end(), GradedLex{});
}

std::vector<Partition> labels_upto(int n) {
    std::vector<Partition> out;
    for (int k = n; k >= 0; k -= 2)
        for (const auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

}  // namespace

std::vector<int> symplectic_shifted(const Partition& lambda, int N, int count) {
    std::vector<int> l(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) l[static_cast<std::size_t>(i - 1)] = lambda[i - 1] - N / 2 - i;
    return l;
}

LinkageClass linkage_orbit(const Partition& lambda, int N, int n) {
    check_inputs(lambda, N, n);
    LinkageClass c;
    c.N = N;
    c.n = n;
    auto o = stable_orbit(lambda, N, n);
    if (o.wall) {
        c.wall_fixed = true;
        c.members.push_back(lambda);
        c.lengths.push_back(0);
        return c;
    }
    auto g = stable_graph(o, n);
    std::vector<std::size_t> order(g.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (g.length[a] != g.length[b]) return g.length[a] < g.length[b];
        return GradedLex{}(g.nodes[a], g.nodes[b]);
    });
    for (auto i : order) {
        c.members.push_back(g.nodes[i]);
        c.lengths.push_back(g.length[i]);
    }
    if (c.diameter() > kl_limits::max_diameter)
        throw std::invalid_argument("linkage_orbit: orbit diameter exceeds the cap");
    return c;
}

LaurentPolynomial parabolic_kl(const Partition& mu, const Partition& lambda, int N, int n, KLConvention conv) {
    check_inputs(lambda, N, n);
    auto o = stable_orbit(lambda, N, n);
    if (o.wall) throw std::invalid_argument("parabolic_kl: lambda is fixed by a reflection");
    auto g = stable_graph(o, n);
    auto ix = g.index.find(lambda), iy = g.index.find(mu);
    if (iy == g.index.end()) return {};
    auto C = canonical_basis(g, conv);
    const auto& col = C[static_cast<std::size_t>(ix->second)];
    auto it = col.find(iy->second);
    if (it == col.end()) return {};
    return to_q_polynomial(it->second, g.length[static_cast<std::size_t>(ix->second)] - g.length[static_cast<std::size_t>(iy->second)]);
}

Int DecompositionMatrix::entry(const Partition& lambda, const Partition& mu) const {
    auto it = entries.find({lambda.parts(), mu.parts()});
    return it == entries.end() ? Int(0) : it->second;
}

DecompositionMatrix decomposition_matrix(int n, int N, KLConvention conv) {
    if (N < 2 || N % 2) throw std::invalid_argument("decomposition_matrix: N must be even and positive");
    if (n < 0 || n > kl_limits::max_boxes)
        throw std::invalid_argument("decomposition_matrix: n must lie in [0, " + std::to_string(kl_limits::max_boxes) + "]");
    DecompositionMatrix dm;
    dm.N = N;
    dm.n = n;
    std::function<StableOrbit(const Partition&)> orbit_of = [&](const Partition& p) { return stable_orbit(p, N, n); };
    fill_matrix<StableOrbit>(dm, labels_upto(n), orbit_of, [&](const StableOrbit& o) { return stable_graph(o, n); }, conv);
    return dm;
}

DecompositionMatrix affine_decomposition_matrix(int n, int N, int M, KLConvention conv) {
    if (N < 2 || N % 2 || M < 2 || M % 2) throw std::invalid_argument("affine_decomposition_matrix: N and M must be even and positive");
    if (n < 0 || n > kl_limits::max_boxes) throw std::invalid_argument("affine_decomposition_matrix: n out of range");
    const int m = M / 2, level = (N + M + 2) / 2;
    if (m < n) throw std::invalid_argument("affine_decomposition_matrix: rank M/2 must be at least n");
    DecompositionMatrix dm;
    dm.N = N;
    dm.n = n;
    std::function<AffineOrbit(const Partition&)> orbit_of = [&](const Partition& p) { return affine_orbit(p, m, level); };
    fill_matrix<AffineOrbit>(
        dm, labels_upto(n), orbit_of,
        [&](const AffineOrbit& o) {
            return build_graph(o.base, m + 1, n, [&o](const Partition& x, int s) { return affine_act(o, x, s); });
        },
        conv);
    return dm;
}

SimpleDims simple_dims(const DecompositionMatrix& a) {
    SimpleDims out;
    out.wall_fixed = a.wall_fixed;
    const auto generic = generic_dims(a.n);
    // members of each orbit, longest first
    std::map<Partition, std::vector<Partition>, GradedLex> orbits;
    for (const auto& p : a.labels) orbits[a.orbit_base.at(p)].push_back(p);
    for (auto& [base, members] : orbits) {
        std::stable_sort(members.begin(), members.end(),
                         [&](const Partition& x, const Partition& y) { return a.length.at(x) > a.length.at(y); });
        for (const auto& mu : members) {
            Int d = generic.at(mu.transpose());
            for (const auto& [lambda, L] : out.dims)
                if (a.orbit_base.at(lambda) == base && lambda != mu) d -= L * a.entry(lambda, mu);
            if (d <= 0 || d > generic.at(mu.transpose()))
                throw std::logic_error("simple_dims: non-positive or oversized solution at " + mu.str());
            out.dims[mu] = d;
        }
    }
    return out;
}

SimpleDims simple_dims(int n, int N, KLConvention conv) { return simple_dims(decomposition_matrix(n, N, conv)); }

Int sl2_isotypic_multiplicity(int n, int k) {
    if (n < 0 || k < 0) return 0;
    std::vector<Int> cur(static_cast<std::size_t>(n) + 2, 0);
    cur[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<Int> next(cur.size(), 0);
        for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
            if (cur[j] == 0) continue;
            next[j + 1] += cur[j];
            if (j > 0) next[j - 1] += cur[j];
        }
        cur = std::move(next);
    }
    return k < static_cast<int>(cur.size()) ? cur[static_cast<std::size_t>(k)] : Int(0);
}

}  // namespace repring
