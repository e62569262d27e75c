#include "repring/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace repring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_weight(const std::vector<int>& w) {
    std::vector<int> p;
    for (int x : w)
        if (x != 0) p.push_back(x);
    return Partition(p);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::columns() const {
    std::vector<int> c;
    if (parts_.empty()) return c;
    c.assign(static_cast<std::size_t>(parts_[0]), 0);
    for (int r : parts_)
        for (int j = 0; j < r; ++j) ++c[static_cast<std::size_t>(j)];
    return c;
}

Partition Partition::transpose() const { return Partition(columns()); }

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 0; i < mu.rows(); ++i)
        if (mu[i] > (*this)[i]) return false;
    return true;
}

std::vector<int> Partition::padded(int n) const {
    if (n < rows()) throw std::invalid_argument("padding shorter than partition");
    std::vector<int> v(parts_);
    v.resize(static_cast<std::size_t>(n), 0);
    return v;
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(std::string_view text) {
    std::string t;
    for (char ch : text)
        if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') t += ch;
    if (t.empty() || t == "0") return Partition();
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition text: " + std::string(text));
        parts.push_back(std::stoi(item));
    }
    if (std::any_of(parts.begin(), parts.end(), [](int x) { return x == 0; }) && parts.size() > 1) {
        // allow trailing zeros only
        auto first_zero = std::find(parts.begin(), parts.end(), 0);
        if (std::any_of(first_zero, parts.end(), [](int x) { return x != 0; }))
            throw std::invalid_argument("bad partition text: " + std::string(text));
    }
    return Partition(parts);
}

bool GradedLex::operator()(const Partition& a, const Partition& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts() < b.parts();
}

RingVector::RingVector(std::initializer_list<std::pair<const Partition, Int>> init) {
    for (const auto& [p, c] : init) add(p, c);
}

void RingVector::add(const Partition& p, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Int RingVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Int(0) : it->second;
}

bool RingVector::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

RingVector& RingVector::operator+=(const RingVector& o) {
    if (&o == this) return *this = *this * Int(2);
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

RingVector& RingVector::operator-=(const RingVector& o) {
    if (&o == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

RingVector RingVector::operator*(const Int& s) const {
    RingVector r;
    if (s == 0) return r;
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, c * s);
    return r;
}

std::string RingVector::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        first = false;
        Int a = c < 0 ? Int(-c) : c;
        if (a != 1) s += a.str() + "*";
        s += "[" + p.str() + "]";
    }
    return s;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 7);
        return h;
    }
};

// shared memo; readers take a shared lock, writers an exclusive one
template <class V>
class Memo {
public:
    bool get(const std::vector<int>& k, V& out) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void put(const std::vector<int>& k, const V& v) {
        std::unique_lock lock(mu_);
        map_.emplace(k, v);
    }

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::vector<int>, V, VecHash> map_;
};

std::vector<int> key3(const Partition& a, const Partition& b, const Partition& c) {
    std::vector<int> k;
    for (const auto* p : {&a, &b, &c}) {
        k.push_back(-1 - p->rows());
        k.insert(k.end(), p->parts().begin(), p->parts().end());
    }
    return k;
}

// LR tableaux of shape nu/lambda with content mu, filled row by row, each row right to left
class LRCounter {
public:
    LRCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : nu_(nu.parts()), mu_(mu.parts()) {
        lam_ = lambda.padded(nu.rows());
        for (int r = 0; r < nu.rows(); ++r) {
            row_start_.push_back(static_cast<int>(cells_.size()));
            for (int c = nu_[static_cast<std::size_t>(r)] - 1; c >= lam_[static_cast<std::size_t>(r)]; --c)
                cells_.push_back({r, c});
        }
        fill_.assign(static_cast<std::size_t>(nu.rows()), std::vector<int>());
        for (int r = 0; r < nu.rows(); ++r) fill_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu_[static_cast<std::size_t>(r)]), 0);
        cnt_.assign(mu_.size() + 1, 0);
    }

    Int count() { return rec(0); }

private:
    struct Cell {
        int r, c;
    };
    std::vector<int> nu_, mu_, lam_, row_start_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> fill_;
    std::vector<int> cnt_;

    Int rec(std::size_t i) {
        if (i == cells_.size()) return 1;
        auto [r, c] = cells_[i];
        auto& row = fill_[static_cast<std::size_t>(r)];
        int hi = static_cast<int>(mu_.size());
        if (c + 1 < nu_[static_cast<std::size_t>(r)]) hi = std::min(hi, row[static_cast<std::size_t>(c + 1)]);
        int lo = 1;
        if (r > 0 && c >= lam_[static_cast<std::size_t>(r - 1)] && c < nu_[static_cast<std::size_t>(r - 1)])
            lo = fill_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1;
        lo = std::max(lo, 1);
        hi = std::min(hi, r + 1);  // entry v needs at least v rows above it, lattice plus column strictness
        Int total = 0;
        for (int v = lo; v <= hi; ++v) {
            auto vi = static_cast<std::size_t>(v);
            if (cnt_[vi] >= mu_[vi - 1]) continue;
            if (v > 1 && cnt_[vi] >= cnt_[vi - 1]) continue;
            row[static_cast<std::size_t>(c)] = v;
            ++cnt_[vi];
            total += rec(i + 1);
            --cnt_[vi];
        }
        row[static_cast<std::size_t>(c)] = 0;
        return total;
    }
};

Memo<Int>& lr_memo() {
    static Memo<Int> m;
    return m;
}

Memo<Int>& kostka_memo() {
    static Memo<Int> m;
    return m;
}

Int kostka_rec(const std::vector<int>& nu, const std::vector<int>& w) {
    int total = std::accumulate(nu.begin(), nu.end(), 0);
    if (w.empty()) return total == 0 ? 1 : 0;
    std::vector<int> key(nu);
    key.push_back(-1);
    key.insert(key.end(), w.begin(), w.end());
    Int cached;
    if (kostka_memo().get(key, cached)) return cached;
    int k = w.back();
    std::vector<int> rest(w.begin(), w.end() - 1);
    Int result = 0;
    // remove a horizontal strip of size k: kappa_i in [nu_{i+1}, nu_i]
    std::vector<int> kappa(nu.size());
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
        if (i == nu.size()) {
            if (left == 0) {
                std::vector<int> kp;
                for (int x : kappa)
                    if (x) kp.push_back(x);
                result += kostka_rec(kp, rest);
            }
            return;
        }
        int lo = i + 1 < nu.size() ? nu[i + 1] : 0;
        for (int x = nu[i]; x >= lo; --x) {
            int take = nu[i] - x;
            if (take > left) break;
            kappa[i] = x;
            go(i + 1, left - take);
        }
    };
    go(0, k);
    kostka_memo().put(key, result);
    return result;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen_partitions(n, n, cur, out);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

std::vector<Partition> partitions_upto(int max_boxes) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_boxes; ++n) {
        auto p = partitions_of(n);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

Partition transpose(const Partition& lambda) { return lambda.transpose(); }

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
    if (mu.empty()) return 1;
    if (lambda.empty()) return 1;
    auto key = key3(lambda, mu, nu);
    Int cached;
    if (lr_memo().get(key, cached)) return cached;
    Int r = LRCounter(lambda, mu, nu).count();
    lr_memo().put(key, r);
    return r;
}

RingVector gl_product(const Partition& lambda, const Partition& mu) {
    RingVector out;
    for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
        if (!nu.contains(lambda) || !nu.contains(mu)) continue;
        out.add(nu, lr_coefficient(lambda, mu, nu));
    }
    return out;
}

Int kostka(const Partition& nu, const std::vector<int>& weight) {
    std::vector<int> w;
    for (int x : weight) {
        if (x < 0) return 0;
        if (x > 0) w.push_back(x);
    }
    return kostka_rec(nu.parts(), w);
}

RingVector schur_product_oracle(const Partition& lambda, const Partition& mu, int nvars) {
    if (nvars <= 0) throw std::invalid_argument("schur_product_oracle: nvars must be positive");
    const int total = lambda.size() + mu.size();
    const auto n = static_cast<std::size_t>(nvars);
    // monomial coefficient of x^kappa in s_lambda s_mu, kappa a partition with <= nvars parts
    std::map<Partition, Int, GradedLex> mono;
    std::vector<Partition> kappas;
    for (const auto& k : partitions_of(total))
        if (k.rows() <= nvars) kappas.push_back(k);
    for (const auto& kappa : kappas) {
        auto kv = kappa.padded(nvars);
        std::vector<int> a(n, 0);
        Int p = 0;
        std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
            if (i == n) {
                if (left != 0) return;
                std::vector<int> b(n);
                for (std::size_t j = 0; j < n; ++j) b[j] = kv[j] - a[j];
                Int k1 = kostka(lambda, a);
                if (k1 == 0) return;
                p += k1 * kostka(mu, b);
                return;
            }
            for (int x = 0; x <= std::min(left, kv[i]); ++x) {
                a[i] = x;
                go(i + 1, left - x);
            }
            a[i] = 0;
        };
        go(0, lambda.size());
        mono[kappa] = p;
    }
    // unitriangular solve against Kostka numbers, largest kappa (lex) first
    std::vector<Partition> order(kappas);
    std::sort(order.begin(), order.end(), [](const Partition& x, const Partition& y) { return x.parts() > y.parts(); });
    std::map<Partition, Int, GradedLex> coef;
    for (const auto& kappa : order) {
        Int c = mono[kappa];
        for (const auto& [nu, cn] : coef)
            if (cn != 0) c -= cn * kostka(nu, kappa.parts());
        coef[kappa] = c;
    }
    RingVector out;
    for (const auto& [nu, c] : coef) out.add(nu, c);
    return out;
}

Int gl_dimension(const Partition& lambda, int N) {
    if (lambda.rows() > N) return 0;
    if (N <= 0) return lambda.empty() ? 1 : 0;
    Int num = 1, den = 1;
    auto cols = lambda.columns();
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            num *= N + j - i;
            den *= (lambda[i] - j - 1) + (cols[static_cast<std::size_t>(j)] - i - 1) + 1;
        }
    return num / den;
}

}  // namespace repring
