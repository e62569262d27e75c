#include "repring/stablering.hpp"

#include <algorithm>
#include <functional>
#include <list>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace repring {

void add_to(WeightMap& m, const Weight& w, const Int& c) {
    if (c == 0) return;
    auto it = m.find(w);
    if (it == m.end()) {
        m.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) m.erase(it);
}

RingVector to_ring_vector(const WeightMap& m) {
    RingVector r;
    for (const auto& [w, c] : m) r.add(Partition::from_weight(w), c);
    return r;
}

Weight pad_weight(const Partition& p, int rank) {
    if (p.rows() > rank) throw std::invalid_argument("diagram has more rows than the rank");
    return p.padded(rank);
}

namespace {

std::vector<Weight> positive_roots(LieType type, int m) {
    std::vector<Weight> roots;
    auto unit = [m](int i) {
        Weight e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return e;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Weight a = unit(i), b = unit(i);
            a[static_cast<std::size_t>(j)] = -1;
            b[static_cast<std::size_t>(j)] = 1;
            roots.push_back(a);
            roots.push_back(b);
        }
    for (int i = 0; i < m; ++i) {
        if (type == LieType::B) roots.push_back(unit(i));
        if (type == LieType::C) {
            Weight e = unit(i);
            e[static_cast<std::size_t>(i)] = 2;
            roots.push_back(e);
        }
    }
    return roots;
}

long dot(const Weight& a, const Weight& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

std::vector<int> rho2_of(LieType type, int m) {
    if (m == 0) return {};
    return FusionAlgebraSpec{type, m, 1}.rho2();
}

// simple-root coefficients of d = lambda - mu; false if not a non-negative integral combination
bool root_coefficients(const Weight& d, LieType type, std::vector<long>& c) {
    const std::size_t m = d.size();
    c.assign(m, 0);
    if (m == 0) return true;
    std::vector<long> P(m);
    long acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
        acc += d[i];
        P[i] = acc;
    }
    switch (type) {
        case LieType::B:
            for (std::size_t i = 0; i < m; ++i) c[i] = P[i];
            break;
        case LieType::C:
            for (std::size_t i = 0; i + 1 < m; ++i) c[i] = P[i];
            if (P[m - 1] % 2) return false;
            c[m - 1] = P[m - 1] / 2;
            break;
        case LieType::D:
            if (m == 1) {
                // no roots: only lambda itself
                return d[0] == 0;
            }
            for (std::size_t i = 0; i + 2 < m; ++i) c[i] = P[i];
            {
                long a = P[m - 2] - d[m - 1];
                long b = P[m - 2] + d[m - 1];
                if (a % 2 || b % 2) return false;
                c[m - 2] = a / 2;
                c[m - 1] = b / 2;
            }
            break;
    }
    return std::all_of(c.begin(), c.end(), [](long v) { return v >= 0; });
}

struct TableKey {
    int type;
    int rank;
    Weight lambda;
    bool operator<(const TableKey& o) const {
        return std::tie(type, rank, lambda) < std::tie(o.type, o.rank, o.lambda);
    }
};

class TableCache {
public:
    bool get(const TableKey& k, WeightMultiplicityTable& out) {
        std::lock_guard lock(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void put(const TableKey& k, const WeightMultiplicityTable& v) {
        std::lock_guard lock(mu_);
        if (map_.count(k)) return;
        if (order_.size() >= kCapacity) {
            map_.erase(order_.front());
            order_.pop_front();
        }
        map_.emplace(k, v);
        order_.push_back(k);
    }

private:
    static constexpr std::size_t kCapacity = 512;
    std::mutex mu_;
    std::map<TableKey, WeightMultiplicityTable> map_;
    std::list<TableKey> order_;
};

TableCache& dominant_cache() {
    static TableCache c;
    return c;
}
TableCache& full_cache() {
    static TableCache c;
    return c;
}

void check_weight(const Weight& w, LieType type, int rank, const char* who) {
    if (static_cast<int>(w.size()) != rank) throw std::invalid_argument(std::string(who) + ": wrong weight length");
    if (!is_dominant(w, type)) throw std::invalid_argument(std::string(who) + ": weight is not dominant");
}

}  // namespace

bool is_dominant(const Weight& w, LieType type) {
    const std::size_t m = w.size();
    if (m == 0) return true;
    for (std::size_t i = 0; i + 2 < m; ++i)
        if (w[i] < w[i + 1]) return false;
    if (type == LieType::D) {
        if (m == 1) return true;
        return w[m - 2] >= std::abs(w[m - 1]);
    }
    if (m >= 2 && w[m - 2] < w[m - 1]) return false;
    return w[m - 1] >= 0;
}

Weight dominant_rep(const Weight& w, LieType type) {
    if (type == LieType::D && w.size() == 1) return w;  // D_1 has no reflections
    Weight r(w);
    int negs = 0;
    bool zero = false;
    for (auto& x : r) {
        if (x < 0) {
            x = -x;
            ++negs;
        }
        if (x == 0) zero = true;
    }
    std::sort(r.begin(), r.end(), std::greater<int>());
    if (type == LieType::D && negs % 2 && !zero && !r.empty()) r.back() = -r.back();
    return r;
}

std::vector<Weight> weyl_orbit(const Weight& w, LieType type) {
    if (type == LieType::D && w.size() == 1) return {w};
    Weight base = dominant_rep(w, type);
    std::vector<int> a(base);
    for (auto& x : a) x = std::abs(x);
    std::sort(a.begin(), a.end());
    std::set<Weight> out;
    const std::size_t m = a.size();
    do {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            Weight v(a);
            int negs = 0;
            bool ok = true;
            for (std::size_t i = 0; i < m; ++i)
                if (mask >> i & 1u) {
                    if (v[i] == 0) {
                        ok = false;
                        break;
                    }
                    v[i] = -v[i];
                    ++negs;
                }
            if (!ok) continue;
            if (type == LieType::D && dominant_rep(v, type) != base) continue;
            out.insert(v);
            (void)negs;
        }
    } while (std::next_permutation(a.begin(), a.end()));
    return {out.begin(), out.end()};
}

std::vector<Weight> dominant_weights_below(const Weight& lambda, LieType type) {
    const std::size_t m = lambda.size();
    std::vector<Weight> out;
    if (m == 0 || (type == LieType::D && m == 1)) {
        out.push_back(lambda);
        return out;
    }
    const int top = std::abs(lambda[0]);
    Weight cur(m, 0);
    std::vector<long> c;
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int bound) {
        if (i == m) {
            Weight d(m);
            for (std::size_t j = 0; j < m; ++j) d[j] = lambda[j] - cur[j];
            if (root_coefficients(d, type, c)) out.push_back(cur);
            return;
        }
        bool last_d = type == LieType::D && i == m - 1 && m >= 2;
        int lo = last_d ? -bound : 0;
        for (int v = bound; v >= lo; --v) {
            cur[i] = v;
            go(i + 1, v);
        }
    };
    go(0, top);
    return out;
}

WeightMultiplicityTable freudenthal_dominant(const Weight& lambda, LieType type, int rank) {
    check_weight(lambda, type, rank, "freudenthal_weights");
    TableKey key{static_cast<int>(type), rank, lambda};
    WeightMultiplicityTable cached;
    if (dominant_cache().get(key, cached)) return cached;

    auto doms = dominant_weights_below(lambda, type);
    std::vector<std::pair<long, Weight>> order;
    std::vector<long> c;
    for (const auto& mu : doms) {
        Weight d(mu.size());
        for (std::size_t j = 0; j < mu.size(); ++j) d[j] = lambda[j] - mu[j];
        root_coefficients(d, type, c);
        order.emplace_back(std::accumulate(c.begin(), c.end(), 0L), mu);
    }
    std::sort(order.begin(), order.end());
    const auto roots = positive_roots(type, rank);
    const auto r2 = rho2_of(type, rank);
    auto shifted_norm = [&](const Weight& w) {
        Weight s(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) s[i] = 2 * w[i] + r2[i];
        return dot(s, s);
    };
    const long top = shifted_norm(lambda);
    WeightMultiplicityTable mult;
    for (const auto& [h, mu] : order) {
        if (h == 0) {
            mult[mu] = 1;
            continue;
        }
        Int num = 0;
        for (const auto& a : roots) {
            Weight nu(mu);
            for (int k = 1;; ++k) {
                for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += a[i];
                auto it = mult.find(dominant_rep(nu, type));
                if (it == mult.end()) break;
                num += it->second * dot(nu, a);
            }
        }
        long den = top - shifted_norm(mu);
        if (den <= 0) throw std::logic_error("freudenthal: non-positive denominator");
        Int total = num * 8;
        if (total % den != 0) throw std::logic_error("freudenthal: inexact division");
        Int v = total / den;
        if (v != 0) mult[mu] = v;
    }
    dominant_cache().put(key, mult);
    return mult;
}

WeightMultiplicityTable freudenthal_weights(const Weight& lambda, LieType type, int rank) {
    check_weight(lambda, type, rank, "freudenthal_weights");
    TableKey key{static_cast<int>(type), rank, lambda};
    WeightMultiplicityTable cached;
    if (full_cache().get(key, cached)) return cached;
    WeightMultiplicityTable full;
    for (const auto& [mu, k] : freudenthal_dominant(lambda, type, rank))
        for (const auto& w : weyl_orbit(mu, type)) full[w] = k;
    full_cache().put(key, full);
    return full;
}

Int weyl_dimension(const Weight& lambda, LieType type, int rank) {
    if (static_cast<int>(lambda.size()) != rank) throw std::invalid_argument("weyl_dimension: wrong weight length");
    if (rank == 0) return 1;
    const auto r2 = rho2_of(type, rank);
    Weight x(lambda.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * lambda[i] + r2[i];
    Int num = 1, den = 1;
    for (const auto& a : positive_roots(type, rank)) {
        num *= dot(x, a);
        den *= dot(r2, a);
    }
    if (num % den != 0) throw std::logic_error("weyl_dimension: inexact");
    Int d = num / den;
    return d < 0 ? Int(-d) : d;
}

WeightMap klimyk_tensor(const Weight& lambda, const Weight& mu, LieType type, int rank) {
    check_weight(lambda, type, rank, "klimyk_tensor");
    check_weight(mu, type, rank, "klimyk_tensor");
    const Weight* hi = &lambda;
    const Weight* lo = &mu;
    if (weyl_dimension(mu, type, rank) > weyl_dimension(lambda, type, rank)) std::swap(hi, lo);
    const auto r2 = rho2_of(type, rank);
    WeightMap out;
    for (const auto& [nu, k] : freudenthal_weights(*lo, type, rank)) {
        Weight x(static_cast<std::size_t>(rank));
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * ((*hi)[i] + nu[i]) + r2[i];
        auto f = dominant_fold_finite(x, type, rank);
        if (f.zero) continue;
        Weight w(x.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = (f.value[i] - r2[i]) / 2;
        add_to(out, w, k * f.sign);
    }
    for (const auto& [w, c] : out)
        if (c < 0) throw std::logic_error("klimyk_tensor: negative multiplicity");
    return out;
}

bool o_admissible(const Partition& lambda, int M) {
    auto c = lambda.columns();
    int c1 = c.size() > 0 ? c[0] : 0, c2 = c.size() > 1 ? c[1] : 0;
    return c1 + c2 <= M;
}

Partition t_map(const Partition& lambda, int M) {
    if (M < 0 || !o_admissible(lambda, M)) throw std::invalid_argument("t_map: diagram not admissible for O(M)");
    auto c = lambda.columns();
    if (c.empty()) c.push_back(0);
    c[0] = M - c[0];
    std::vector<int> cols;
    for (int x : c)
        if (x) cols.push_back(x);
    std::sort(cols.begin(), cols.end(), std::greater<int>());
    return Partition(cols).transpose();
}

SOWeights o_to_so_restrict(const Partition& lambda, int M) {
    if (M <= 0 || !o_admissible(lambda, M)) throw std::invalid_argument("o_to_so_restrict: diagram not admissible for O(M)");
    const int m = M / 2;
    SOWeights r;
    if (M % 2) {
        Partition k = lambda.rows() <= m ? lambda : t_map(lambda, M);
        r.weights.push_back(pad_weight(k, m));
        return r;
    }
    if (lambda.rows() < m) {
        r.weights.push_back(pad_weight(lambda, m));
    } else if (lambda.rows() > m) {
        r.weights.push_back(pad_weight(t_map(lambda, M), m));
    } else {
        Weight w = pad_weight(lambda, m), wb = w;
        wb.back() = -wb.back();
        r.weights.push_back(w);
        r.weights.push_back(wb);
    }
    return r;
}

Int o_dimension(const Partition& lambda, int N) {
    auto so = o_to_so_restrict(lambda, N);
    const int m = N / 2;
    LieType t = N % 2 ? LieType::B : LieType::D;
    Int d = 0;
    for (const auto& w : so.weights) d += weyl_dimension(w, t, m);
    return d;
}

Int sp_dimension(const Partition& lambda, int N) {
    if (N <= 0 || N % 2) throw std::invalid_argument("sp_dimension: N must be positive and even");
    if (lambda.rows() > N / 2) throw std::invalid_argument("sp_dimension: label not admissible for Sp(N)");
    return weyl_dimension(pad_weight(lambda, N / 2), LieType::C, N / 2);
}

Int weyl_dimension(const Partition& lambda, Series group, int N) {
    return group == Series::Orthogonal ? o_dimension(lambda, N) : sp_dimension(lambda, N);
}

namespace {
std::mutex& product_mutex() {
    static std::mutex m;
    return m;
}
std::map<std::pair<Partition, Partition>, RingVector, std::function<bool(const std::pair<Partition, Partition>&, const std::pair<Partition, Partition>&)>>& product_cache() {
    static std::map<std::pair<Partition, Partition>, RingVector, std::function<bool(const std::pair<Partition, Partition>&, const std::pair<Partition, Partition>&)>> c(
        [](const auto& a, const auto& b) {
            GradedLex lt;
            if (lt(a.first, b.first)) return true;
            if (lt(b.first, a.first)) return false;
            return lt(a.second, b.second);
        });
    return c;
}
RingVector stable_product_uncached(const Partition& lambda, const Partition& mu);
}  // namespace

RingVector stable_product(const Partition& lambda, const Partition& mu) {
    auto key = GradedLex{}(mu, lambda) ? std::make_pair(mu, lambda) : std::make_pair(lambda, mu);
    {
        std::lock_guard lock(product_mutex());
        auto it = product_cache().find(key);
        if (it != product_cache().end()) return it->second;
    }
    RingVector r = stable_product_uncached(key.first, key.second);
    std::lock_guard lock(product_mutex());
    product_cache().emplace(key, r);
    return r;
}

namespace {
RingVector stable_product_uncached(const Partition& lambda, const Partition& mu) {
    RingVector out;
    const int amax = std::min(lambda.size(), mu.size());
    for (int k = 0; k <= amax; ++k) {
        for (const auto& alpha : partitions_of(k)) {
            if (!lambda.contains(alpha) || !mu.contains(alpha)) continue;
            for (const auto& beta : partitions_of(lambda.size() - k)) {
                Int x = lr_coefficient(alpha, beta, lambda);
                if (x == 0) continue;
                for (const auto& gamma : partitions_of(mu.size() - k)) {
                    Int y = lr_coefficient(alpha, gamma, mu);
                    if (y == 0) continue;
                    out += gl_product(beta, gamma) * (x * y);
                }
            }
        }
    }
    return out;
}
}  // namespace

Int newell_littlewood_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    int twice_a = lambda.size() + mu.size() - nu.size();
    if (twice_a < 0 || twice_a % 2) return 0;
    int a = twice_a / 2;
    int b = lambda.size() - a, g = mu.size() - a;
    if (b < 0 || g < 0) return 0;
    Int total = 0;
    for (const auto& alpha : partitions_of(a))
        for (const auto& beta : partitions_of(b)) {
            Int x = lr_coefficient(alpha, beta, lambda);
            if (x == 0) continue;
            for (const auto& gamma : partitions_of(g)) {
                Int y = lr_coefficient(alpha, gamma, mu);
                if (y == 0) continue;
                total += x * y * lr_coefficient(beta, gamma, nu);
            }
        }
    return total;
}

}  // namespace repring
