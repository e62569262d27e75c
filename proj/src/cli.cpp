#include "repring/cli.hpp"

#include "repring/branching.hpp"
#include "repring/brauer.hpp"
#include "repring/fusion.hpp"
#include "repring/kldecomp.hpp"
#include "repring/partition.hpp"
#include "repring/stablering.hpp"
#include "repring/weylfold.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace repring::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    json doc;
    std::vector<std::vector<std::string>> rows;  // first row is the header
    std::vector<std::string> mismatches;
    std::size_t oracle_checked = 0;
    bool oracle_ran = false;
};

json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

json parts_json(const std::vector<int>& v) { return json(v); }

Partition parse_diagram(const std::string& flag, const std::string& text) {
    try {
        return Partition::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Weight parse_weight(const std::string& flag, const std::string& text, int rank) {
    Weight w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("trailing characters");
            w.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + ": \"" + text + "\" is not a comma-separated list of integers");
        }
    }
    while (static_cast<int>(w.size()) > rank && !w.empty() && w.back() == 0) w.pop_back();
    if (static_cast<int>(w.size()) > rank) throw UsageError(flag + ": weight longer than the rank");
    w.resize(static_cast<std::size_t>(rank), 0);
    return w;
}

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash)), den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw UsageError(flag + ": \"" + text + "\" is not a rational number");
    }
}

BrauerDiagram parse_brauer(const std::string& flag, const std::string& text, int n) {
    try {
        return BrauerDiagram::parse(text, n);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Series parse_series_flag(const std::string& text) {
    try {
        return parse_series(text);
    } catch (const std::exception&) {
        throw UsageError("--series: expected orthogonal or symplectic, got \"" + text + "\"");
    }
}

LieType parse_type_flag(const std::string& text) {
    try {
        return parse_lie_type(text);
    } catch (const std::exception&) {
        throw UsageError("--type: expected B, C or D, got \"" + text + "\"");
    }
}

std::string weight_str(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s.empty() ? "0" : s;
}

void ring_output(Output& o, const RingVector& v) {
    o.doc = json::object();
    o.rows.push_back({"label", "coefficient"});
    for (const auto& [p, c] : v.terms()) {
        o.doc[p.str()] = int_json(c);
        o.rows.push_back({p.str(), c.str()});
    }
}

void weight_output(Output& o, const WeightMap& v) {
    o.doc = json::object();
    o.rows.push_back({"label", "coefficient"});
    for (const auto& [w, c] : v) {
        o.doc[weight_str(w)] = int_json(c);
        o.rows.push_back({weight_str(w), c.str()});
    }
}

void emit(const Output& o, const std::string& format, std::ostream& out) {
    if (format == "tsv") {
        for (const auto& r : o.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
            out << "\n";
        }
        return;
    }
    out << o.doc.dump() << "\n";
}

// The oracle summary goes to stderr so stdout is the same with or without --oracle.
void attach_oracle(Output& o, std::size_t checked) {
    o.oracle_ran = true;
    o.oracle_checked = checked;
}

// ---------------------------------------------------------------- commands

struct FoldArgs {
    std::string series, diagram, type, weight;
    int cut = 0, rank = 0, level = 0;
};

Output cmd_fold(const FoldArgs& a, bool oracle) {
    Output o;
    std::size_t checked = 0;
    if (!a.series.empty()) {
        if (a.cut <= 0) throw UsageError("--cut: required and positive for stable folds");
        if (a.diagram.empty()) throw UsageError("--diagram: required");
        Series s = parse_series_flag(a.series);
        if (s == Series::Symplectic && a.cut % 2) throw UsageError("--cut: symplectic cut must be even");
        Partition lam = parse_diagram("--diagram", a.diagram);
        SignedFold f = fold_stable(lam, s, a.cut);
        o.rows.push_back({"sign", "diagram"});
        if (f.zero) {
            o.doc["zero"] = true;
            o.rows.push_back({"0", ""});
        } else {
            o.doc["sign"] = f.sign;
            o.doc["diagram"] = parts_json(f.partition().parts());
            o.rows.push_back({std::to_string(f.sign), f.partition().str()});
        }
        if (oracle) {
            const int floor = s == Series::Orthogonal ? 2 : 1;
            const int m0 = std::max(lam.size(), floor);
            for (int m : {m0, m0 + 1}) {
                FusionAlgebraSpec spec = s == Series::Orthogonal ? FusionAlgebraSpec{LieType::B, m, a.cut + 2 * m - 1}
                                                                 : FusionAlgebraSpec{LieType::C, m, a.cut / 2 + m + 1};
                auto g = fold_affine_weight(lam.padded(m), spec);
                ++checked;
                bool same = f.zero ? g.zero : (!g.zero && g.sign == f.sign && g.partition() == f.partition());
                if (!same) o.mismatches.push_back(spec.str() + ": " + g.str() + " vs " + f.str());
            }
        }
    } else if (!a.type.empty()) {
        if (a.rank <= 0 || a.level <= 0) throw UsageError("--rank/--level: required and positive for affine folds");
        if (a.weight.empty()) throw UsageError("--weight: required");
        FusionAlgebraSpec spec{parse_type_flag(a.type), a.rank, a.level};
        Weight w = parse_weight("--weight", a.weight, a.rank);
        auto r2 = spec.rho2();
        std::vector<int> x(w.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * w[i] + r2[i];
        FoldTrace tr;
        SignedFold f;
        try {
            f = fold_affine(x, spec, &tr);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--rank: ") + e.what());
        }
        o.rows.push_back({"sign", "weight"});
        if (f.zero) {
            o.doc["zero"] = true;
            o.rows.push_back({"0", ""});
        } else {
            o.doc["sign"] = f.sign;
            o.doc["weight"] = parts_json(f.value);
            o.rows.push_back({std::to_string(f.sign), weight_str(f.value)});
            if (oracle) {
                ++checked;
                int parity = tr.reflections % 2 ? -1 : 1;
                if (parity != tr.det || parity != f.sign) o.mismatches.push_back("reflection parity differs from determinant");
            }
        }
    } else {
        throw UsageError("fold: give --series/--cut/--diagram or --type/--rank/--level/--weight");
    }
    if (oracle) attach_oracle(o, checked);
    return o;
}

struct PairArgs {
    std::string lhs, rhs;
};

Output cmd_tensor(const PairArgs& a, bool oracle) {
    if (a.lhs.empty() || a.rhs.empty()) throw UsageError("--lhs/--rhs: required");
    Partition l = parse_diagram("--lhs", a.lhs), r = parse_diagram("--rhs", a.rhs);
    Output o;
    RingVector prod = stable_product(l, r);
    ring_output(o, prod);
    if (oracle) {
        std::size_t checked = 0;
        const int m0 = std::max(l.size() + r.size(), 2);
        for (int m : {m0, m0 + 1}) {
            ++checked;
            RingVector k = to_ring_vector(klimyk_tensor(l.padded(m), r.padded(m), LieType::B, m));
            if (k != prod) o.mismatches.push_back("B" + std::to_string(m) + " decomposition " + k.str());
        }
        for (const auto& [nu, c] : prod.terms()) {
            ++checked;
            if (newell_littlewood_coefficient(l, r, nu) != c) o.mismatches.push_back("triple sum differs at " + nu.str());
        }
        attach_oracle(o, checked);
    }
    return o;
}

struct FuseArgs {
    std::string type, series, lhs, rhs;
    int rank = 0, cut = 0, level = 0;
};

Output cmd_fuse(const FuseArgs& a, bool oracle) {
    if (a.lhs.empty() || a.rhs.empty()) throw UsageError("--lhs/--rhs: required");
    if (a.level <= 0) throw UsageError("--level: required and positive");
    Output o;
    std::size_t checked = 0;
    if (!a.type.empty()) {
        if (a.rank <= 0) throw UsageError("--rank: required and positive");
        FusionAlgebraSpec spec{parse_type_flag(a.type), a.rank, a.level};
        if ((spec.type != LieType::C) && spec.rank < 2) throw UsageError("--rank: types B and D need rank >= 2");
        Weight l = parse_weight("--lhs", a.lhs, a.rank), r = parse_weight("--rhs", a.rhs, a.rank);
        WeightMap prod;
        try {
            prod = fusion_product(spec, l, r);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--lhs/--rhs: ") + e.what());
        }
        weight_output(o, prod);
        if (oracle) {
            for (const auto& nu : fusion_labels(spec)) {
                ++checked;
                Int v = verlinde_coefficient(spec, l, r, nu);
                auto it = prod.find(nu);
                Int f = it == prod.end() ? Int(0) : it->second;
                if (v != f) o.mismatches.push_back("Verlinde " + weight_str(nu) + ": " + v.str() + " vs " + f.str());
            }
        }
    } else if (!a.series.empty()) {
        Series s = parse_series_flag(a.series);
        Partition l = parse_diagram("--lhs", a.lhs), r = parse_diagram("--rhs", a.rhs);
        RingVector prod;
        try {
            prod = s == Series::Orthogonal ? o_fusion_product(a.cut, a.level, l, r) : sp_fusion_product(a.cut, a.level, l, r);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--cut/--lhs/--rhs: ") + e.what());
        }
        ring_output(o, prod);
        if (oracle) {
            RingVector dual;
            if (s == Series::Orthogonal) {
                const int K = a.level + 2 - a.cut;
                if (a.cut < 3 || K < 3) throw UsageError("--cut: the level-rank oracle needs 3 <= M <= level - 1");
                auto phi = [&](const Partition& p) { return o_level_rank_image(p, a.cut, a.level); };
                const RingVector d = o_fusion_product(K, a.level, phi(l), phi(r));
                for (const auto& nu : o_labels(a.cut, a.level)) {
                    ++checked;
                    if (d.coeff(phi(nu)) != prod.coeff(nu)) o.mismatches.push_back("level-rank dual differs at " + nu.str());
                }
            } else {
                const int K = 2 * a.level - 2 - a.cut;
                if (K < 2) throw UsageError("--cut: no symplectic level-rank dual at this level");
                const RingVector d = sp_fusion_product(K, a.level, l.transpose(), r.transpose());
                for (const auto& nu : sp_labels(a.cut, a.level)) {
                    ++checked;
                    if (d.coeff(nu.transpose()) != prod.coeff(nu)) o.mismatches.push_back("level-rank dual differs at " + nu.str());
                }
            }
        }
    } else {
        throw UsageError("fuse: give --type/--rank or --series/--cut");
    }
    if (oracle) attach_oracle(o, checked);
    return o;
}

struct SpecArgs {
    std::string type;
    int rank = 0, level = 0;
};

FusionAlgebraSpec spec_from(const SpecArgs& a) {
    if (a.type.empty()) throw UsageError("--type: required");
    if (a.rank <= 0) throw UsageError("--rank: required and positive");
    if (a.level <= 0) throw UsageError("--level: required and positive");
    FusionAlgebraSpec spec{parse_type_flag(a.type), a.rank, a.level};
    if (spec.type != LieType::C && spec.rank < 2) throw UsageError("--rank: types B and D need rank >= 2");
    return spec;
}

std::string point_label(const std::vector<int>& x, const std::vector<int>& r2, bool integral) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        int d = x[i] - r2[i];
        s += i ? "," : "";
        s += integral ? std::to_string(d / 2) : std::to_string(d) + "/2";
    }
    return s;
}

Output cmd_smatrix(const SpecArgs& a, bool oracle) {
    FusionAlgebraSpec spec = spec_from(a);
    std::shared_ptr<const SMatrix> S;
    try {
        S = smatrix(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--level: ") + e.what());
    }
    Output o;
    const auto r2 = spec.rho2();
    json labels = json::array(), re = json::array(), im = json::array();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < S->points.size(); ++i) {
        names.push_back(point_label(S->points[i], r2, S->integral[i]));
        labels.push_back({{"weight", names.back()}, {"integral", static_cast<bool>(S->integral[i])}});
    }
    auto clean = [](double v) { return std::abs(v) < 1e-14 ? 0.0 : v; };
    std::vector<std::string> header{"label"};
    for (const auto& n : names) header.push_back(n);
    o.rows.push_back(header);
    for (std::size_t i = 0; i < S->s.size(); ++i) {
        json rr = json::array(), ii = json::array();
        std::vector<std::string> row{names[i]};
        for (const auto& z : S->s[i]) {
            rr.push_back(clean(z.real()));
            ii.push_back(clean(z.imag()));
            std::ostringstream cell;
            cell << std::setprecision(12) << clean(z.real());
            if (clean(z.imag()) != 0) cell << (z.imag() > 0 ? "+" : "") << clean(z.imag()) << "i";
            row.push_back(cell.str());
        }
        re.push_back(rr);
        im.push_back(ii);
        o.rows.push_back(row);
    }
    o.doc["spec"] = spec.str();
    o.doc["labels"] = labels;
    o.doc["re"] = re;
    o.doc["im"] = im;
    o.doc["symmetry_error"] = S->symmetry_error;
    o.doc["unitarity_error"] = S->unitarity_error;
    o.doc["condition"] = S->condition;
    if (oracle) {
        if (S->symmetry_error > tolerance::symmetry) o.mismatches.push_back("S is not symmetric");
        if (S->unitarity_error > tolerance::unitarity) o.mismatches.push_back("S is not unitary");
        attach_oracle(o, 2);
    }
    return o;
}

struct BranchArgs {
    std::string series, diagram;
    int cut = 0;
};

Output cmd_branch(const BranchArgs& a, bool oracle) {
    if (a.series.empty()) throw UsageError("--series: required");
    if (a.cut <= 0) throw UsageError("--cut: required and positive");
    if (a.diagram.empty()) throw UsageError("--diagram: required");
    Series s = parse_series_flag(a.series);
    if (s == Series::Symplectic && a.cut % 2) throw UsageError("--cut: symplectic cut must be even");
    Partition lam = parse_diagram("--diagram", a.diagram);
    if (lam.rows() > a.cut) throw UsageError("--diagram: more rows than --cut");
    BranchTable t = branch(lam, s, a.cut);
    Output o;
    ring_output(o, t.entries);
    if (oracle) {
        std::size_t checked = 1;
        if (branch_dimension(t) != gl_dimension(lam, a.cut)) o.mismatches.push_back("dimension identity fails");
        if (a.cut <= 4) {
            ++checked;
            if (branch_restricted(t) != branch_character_oracle(lam, s, a.cut))
                o.mismatches.push_back("character restriction differs");
        }
        attach_oracle(o, checked);
    }
    return o;
}

struct BrauerArgs {
    std::string lhs, rhs, diagram, series, x;
    int n = 0, cut = 0;
};

json laurent_json(const LaurentPolynomial& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = int_json(c);
    return j;
}

Output cmd_brauer_mult(const BrauerArgs& a, bool oracle) {
    if (a.lhs.empty() || a.rhs.empty()) throw UsageError("--lhs/--rhs: required");
    BrauerDiagram l = parse_brauer("--lhs", a.lhs, a.n), r = parse_brauer("--rhs", a.rhs, a.n);
    if (l.n() != r.n()) throw UsageError("--rhs: strand count differs from --lhs");
    DiagramWord w = multiply(l, r);
    Output o;
    o.doc["coefficient"] = laurent_json(w.coefficient);
    o.doc["diagram"] = w.diagram.str();
    o.rows.push_back({"coefficient", "diagram"});
    o.rows.push_back({w.coefficient.str(), w.diagram.str()});
    if (oracle) {
        std::size_t checked = 0;
        for (int N : {2, 3}) {
            if (l.n() > 4) break;
            ++checked;
            auto A = phi_matrix(l, N, Series::Orthogonal), B = phi_matrix(r, N, Series::Orthogonal);
            auto C = phi_matrix(w.diagram, N, Series::Orthogonal);
            Int xc = 1;
            for (int k = 0; k < w.cycles; ++k) xc *= N;
            bool ok = true;
            for (std::size_t i = 0; i < A.size() && ok; ++i)
                for (std::size_t j = 0; j < A.size() && ok; ++j) {
                    Int s = 0;
                    for (std::size_t k = 0; k < A.size(); ++k) s += A[i][k] * B[k][j];
                    ok = s == C[i][j] * xc;
                }
            if (!ok) o.mismatches.push_back("tensor-space image is not multiplicative at N=" + std::to_string(N));
        }
        attach_oracle(o, checked);
    }
    return o;
}

Output cmd_brauer_trace(const BrauerArgs& a, bool oracle) {
    if (a.diagram.empty()) throw UsageError("--diagram: required");
    BrauerDiagram d = parse_brauer("--diagram", a.diagram, a.n);
    LaurentPolynomial t = closure_trace(d);
    Output o;
    o.doc = t.str();
    o.rows.push_back({"trace"});
    o.rows.push_back({t.str()});
    if (oracle) {
        for (const auto& chi : {BrauerDiagram::identity(1), BrauerDiagram::e(2, 1), BrauerDiagram::s(2, 1)})
            if (closure_trace(tensor(d, chi)) != t * closure_trace(chi))
                o.mismatches.push_back("Markov property fails with " + chi.str());
        attach_oracle(o, 3);
    }
    return o;
}

Output cmd_brauer_dims(const BrauerArgs& a, bool oracle) {
    if (a.n < 0) throw UsageError("--n: must be non-negative");
    if (a.n > 12) throw UsageError("--n: at most 12");
    std::map<Partition, Int, GradedLex> d;
    bool generic = a.series.empty();
    Series s = Series::Orthogonal;
    if (generic) {
        d = generic_dims(a.n);
    } else {
        s = parse_series_flag(a.series);
        if (a.cut <= 0) throw UsageError("--cut: required and positive with --series");
        if (s == Series::Symplectic && a.cut % 2) throw UsageError("--cut: symplectic cut must be even");
        d = admissible_mults(a.n, a.cut, s);
    }
    Output o;
    RingVector v;
    for (const auto& [p, c] : d) v.add(p, c);
    ring_output(o, v);
    if (oracle) {
        Int sq = 0;
        for (const auto& [p, c] : d) sq += c * c;
        if (generic) {
            Int df = 1;
            for (int k = 2 * a.n - 1; k > 1; k -= 2) df *= k;
            if (sq != df) o.mismatches.push_back("sum of squares " + sq.str() + " differs from (2n-1)!! = " + df.str());
        } else if (a.n <= 4) {
            int x = phi_parameter(a.cut, s);
            int rk = gram_rank(a.n, Rational(x));
            if (sq != rk) o.mismatches.push_back("sum of squares " + sq.str() + " differs from the trace-form rank " + std::to_string(rk));
        }
        attach_oracle(o, 1);
    }
    return o;
}

Output cmd_brauer_gram(const BrauerArgs& a, bool oracle) {
    if (a.x.empty()) throw UsageError("--x: required");
    if (a.n < 0 || a.n > 5) throw UsageError("--n: gram-rank supports 0 <= n <= 5");
    Rational x = parse_rational("--x", a.x);
    if (x == 0) throw UsageError("--x: the trace form has poles at 0");
    int rk = gram_rank(a.n, x);
    Output o;
    o.doc["rank"] = rk;
    o.rows.push_back({"rank"});
    o.rows.push_back({std::to_string(rk)});
    if (oracle && boost::multiprecision::denominator(x) == 1) {
        Int xi = boost::multiprecision::numerator(x);
        std::map<Partition, Int, GradedLex> d;
        if (xi > 0)
            d = admissible_mults(a.n, static_cast<int>(xi), Series::Orthogonal);
        else if (xi % 2 == 0)
            d = admissible_mults(a.n, static_cast<int>(-xi), Series::Symplectic);
        if (!d.empty()) {
            Int sq = 0;
            for (const auto& [p, c] : d) sq += c * c;
            if (sq != rk) o.mismatches.push_back("admissible multiplicities give " + sq.str());
            attach_oracle(o, 1);
        }
    }
    return o;
}

struct KLArgs {
    std::string diagram;
    int N = 0, n = 0;
    bool spherical = false;
};

json label_list(const std::vector<Partition>& ps) {
    json j = json::array();
    for (const auto& p : ps) j.push_back(parts_json(p.parts()));
    return j;
}

void check_kl(const KLArgs& a) {
    if (a.N < 2 || a.N % 2) throw UsageError("--N: must be even and positive");
    if (a.n < 0 || a.n > kl_limits::max_boxes) throw UsageError("--n: must lie in [0, " + std::to_string(kl_limits::max_boxes) + "]");
}

Output cmd_kl_orbit(const KLArgs& a) {
    check_kl(a);
    if (a.diagram.empty()) throw UsageError("--diagram: required");
    Partition lam = parse_diagram("--diagram", a.diagram);
    if (lam.size() > a.n || (a.n - lam.size()) % 2) throw UsageError("--diagram: needs at most n boxes with the parity of n");
    LinkageClass c = linkage_orbit(lam, a.N, a.n);
    Output o;
    o.doc["wall_fixed"] = c.wall_fixed;
    json members = json::array();
    o.rows.push_back({"diagram", "length"});
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        members.push_back({{"diagram", parts_json(c.members[i].parts())}, {"length", c.lengths[i]}});
        o.rows.push_back({c.members[i].str(), std::to_string(c.lengths[i])});
    }
    o.doc["members"] = members;
    return o;
}

Output cmd_kl_decomp(const KLArgs& a, bool oracle) {
    check_kl(a);
    auto conv = a.spherical ? KLConvention::Spherical : KLConvention::Antispherical;
    DecompositionMatrix dm = decomposition_matrix(a.n, a.N, conv);
    Output o;
    o.doc["convention"] = to_string(conv);
    o.doc["labels"] = label_list(dm.labels);
    o.doc["wall_fixed"] = label_list(dm.wall_fixed);
    json entries = json::array();
    o.rows.push_back({"lambda", "mu", "value", "polynomial"});
    for (const auto& [key, v] : dm.entries) {
        json e;
        e["lambda"] = parts_json(key.first);
        e["mu"] = parts_json(key.second);
        e["value"] = int_json(v);
        auto it = dm.polynomials.find(key);
        std::string poly = it == dm.polynomials.end() ? "1" : it->second.str("q");
        e["polynomial"] = poly;
        entries.push_back(e);
        o.rows.push_back({Partition(key.first).str(), Partition(key.second).str(), v.str(), poly});
    }
    o.doc["entries"] = entries;
    if (oracle) {
        std::size_t checked = 0;
        for (int M : {std::max(2 * a.n, 2), std::max(2 * a.n, 2) + 2}) {
            ++checked;
            auto b = affine_decomposition_matrix(a.n, a.N, M, conv);
            if (b.entries != dm.entries || b.wall_fixed != dm.wall_fixed)
                o.mismatches.push_back("affine C" + std::to_string(M / 2) + " computation differs");
        }
        attach_oracle(o, checked);
    }
    return o;
}

Output cmd_kl_dims(const KLArgs& a, bool oracle) {
    check_kl(a);
    SimpleDims sd = simple_dims(a.n, a.N, a.spherical ? KLConvention::Spherical : KLConvention::Antispherical);
    Output o;
    json dims = json::object();
    o.rows.push_back({"label", "dimension"});
    for (const auto& [p, d] : sd.dims) {
        dims[p.str()] = int_json(d);
        o.rows.push_back({p.str(), d.str()});
    }
    o.doc["dims"] = dims;
    o.doc["wall_fixed"] = label_list(sd.wall_fixed);
    if (oracle) {
        std::size_t checked = 0;
        auto mult = admissible_mults(a.n, a.N, Series::Symplectic);
        for (const auto& [p, d] : sd.dims) {
            if (2 * p[0] > a.N) continue;
            ++checked;
            Int expect = a.N == 2 ? sl2_isotypic_multiplicity(a.n, p.rows()) : mult[p];
            if (expect != d) o.mismatches.push_back("tensor-space multiplicity differs at " + p.str());
        }
        attach_oracle(o, checked);
    }
    return o;
}

struct CheckArgs {
    std::string series, type, diagram;
    int cut = 0, level = 0, rank = 0, bound = -1;
};

Output report_output(const std::string& what, std::size_t checked, const std::vector<std::string>& mismatches) {
    Output o;
    o.doc["check"] = what;
    o.doc["checked"] = checked;
    o.doc["mismatches"] = mismatches;
    o.doc["ok"] = mismatches.empty();
    o.rows.push_back({"check", "checked", "mismatches"});
    o.rows.push_back({what, std::to_string(checked), std::to_string(mismatches.size())});
    for (const auto& m : mismatches) o.rows.push_back({"", "", m});
    o.mismatches = mismatches;
    return o;
}

Output cmd_check_level_rank(const CheckArgs& a) {
    if (a.series.empty()) throw UsageError("--series: required");
    if (a.level <= 0) throw UsageError("--level: required and positive");
    Series s = parse_series_flag(a.series);
    LevelRankReport r;
    try {
        r = s == Series::Orthogonal ? level_rank_transpose_check(a.cut, a.level) : sp_level_rank_check(a.cut, a.level);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--cut: ") + e.what());
    }
    Output o = report_output("level-rank " + r.source + " / " + r.target, r.triples, r.mismatches);
    o.doc["labels"] = r.labels;
    return o;
}

Output cmd_check_verlinde(const CheckArgs& a) {
    FusionAlgebraSpec spec = spec_from({a.type, a.rank, a.level});
    auto labels = fusion_labels(spec);
    std::vector<std::string> mism;
    std::size_t checked = 0;
    auto F = fusion_table(spec);
    for (const auto& x : labels)
        for (const auto& y : labels) {
            const auto& row = F.at({x, y});
            for (const auto& z : labels) {
                ++checked;
                auto it = row.find(z);
                Int f = it == row.end() ? Int(0) : it->second;
                Int v = verlinde_coefficient(spec, x, y, z);
                if (f != v)
                    mism.push_back("N(" + weight_str(x) + ";" + weight_str(y) + ";" + weight_str(z) + ") = " + f.str() + " vs " + v.str());
            }
        }
    return report_output("verlinde " + spec.str(), checked, mism);
}

Output cmd_check_littlewood(const CheckArgs& a) {
    if (a.diagram.empty()) throw UsageError("--diagram: required");
    Partition lam = parse_diagram("--diagram", a.diagram);
    int bound = a.bound < 0 ? lam.size() : a.bound;
    auto r = transpose_duality_check(lam, bound);
    auto mism = r.mismatches;
    for (Series s : {Series::Orthogonal, Series::Symplectic}) {
        auto b = littlewood_stable(lam, s);
        if (b.coeff(lam) != 1) mism.push_back("b^lambda_lambda != 1 for " + to_string(s));
        for (const auto& [mu, c] : b.terms())
            if (!lam.contains(mu)) mism.push_back(to_string(s) + ": " + mu.str() + " not contained in lambda");
    }
    return report_output("littlewood " + lam.str(), partitions_upto(bound).size(), mism);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation-ring quotients: folds, stable and fusion products, branching, Brauer algebras, KL decomposition matrices"};
    app.name("repring-cli");
    app.fallthrough();
    app.require_subcommand(1);
    std::string format = "json";
    bool oracle = false;
    app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_flag("--oracle", oracle, "also run the paired oracle; exit 1 on mismatch");

    FoldArgs fold;
    auto* fold_cmd = app.add_subcommand("fold", "stable or affine signed fold");
    fold_cmd->add_option("--series", fold.series, "orthogonal or symplectic");
    fold_cmd->add_option("--cut", fold.cut, "N");
    fold_cmd->add_option("--diagram", fold.diagram, "diagram, e.g. 3,1");
    fold_cmd->add_option("--type", fold.type, "B, C or D");
    fold_cmd->add_option("--rank", fold.rank);
    fold_cmd->add_option("--level", fold.level);
    fold_cmd->add_option("--weight", fold.weight, "dominant weight, e.g. 3,0");

    PairArgs tensor_args;
    auto* tensor_cmd = app.add_subcommand("tensor", "stable orthogonal product");
    tensor_cmd->add_option("--lhs", tensor_args.lhs);
    tensor_cmd->add_option("--rhs", tensor_args.rhs);

    FuseArgs fuse;
    auto* fuse_cmd = app.add_subcommand("fuse", "fusion product");
    fuse_cmd->add_option("--type", fuse.type, "B, C or D");
    fuse_cmd->add_option("--rank", fuse.rank);
    fuse_cmd->add_option("--series", fuse.series, "orthogonal (O(M)) or symplectic (Sp(N))");
    fuse_cmd->add_option("--cut", fuse.cut, "M or N");
    fuse_cmd->add_option("--level", fuse.level);
    fuse_cmd->add_option("--lhs", fuse.lhs);
    fuse_cmd->add_option("--rhs", fuse.rhs);

    SpecArgs sm;
    auto* sm_cmd = app.add_subcommand("smatrix", "S-matrix of a fusion ring");
    sm_cmd->add_option("--type", sm.type);
    sm_cmd->add_option("--rank", sm.rank);
    sm_cmd->add_option("--level", sm.level);

    BranchArgs br;
    auto* br_cmd = app.add_subcommand("branch", "restriction Gl(N) -> O(N) or Sp(N)");
    br_cmd->add_option("--series", br.series);
    br_cmd->add_option("--cut", br.cut);
    br_cmd->add_option("--diagram", br.diagram);

    BrauerArgs ba;
    auto* brauer_cmd = app.add_subcommand("brauer", "Brauer algebra");
    brauer_cmd->require_subcommand(1);
    auto* b_mult = brauer_cmd->add_subcommand("mult", "product of two diagrams");
    auto* b_trace = brauer_cmd->add_subcommand("trace", "closure trace");
    auto* b_dims = brauer_cmd->add_subcommand("dims", "generic dimensions or admissible multiplicities");
    auto* b_gram = brauer_cmd->add_subcommand("gram-rank", "rank of the trace form");
    for (auto* c : {b_mult, b_trace, b_dims, b_gram}) c->add_option("--n", ba.n, "strand count");
    b_mult->add_option("--lhs", ba.lhs);
    b_mult->add_option("--rhs", ba.rhs);
    b_trace->add_option("--diagram", ba.diagram);
    b_dims->add_option("--series", ba.series);
    b_dims->add_option("--cut", ba.cut);
    b_gram->add_option("--x", ba.x, "rational value of the loop parameter");

    KLArgs ka;
    auto* kl_cmd = app.add_subcommand("kl", "linkage and decomposition matrices for Sp(N)");
    kl_cmd->require_subcommand(1);
    auto* k_orbit = kl_cmd->add_subcommand("orbit", "linkage class of a diagram");
    auto* k_decomp = kl_cmd->add_subcommand("decomp", "decomposition matrix");
    auto* k_dims = kl_cmd->add_subcommand("dims", "simple dimensions");
    for (auto* c : {k_orbit, k_decomp, k_dims}) {
        c->add_option("--N", ka.N);
        c->add_option("--n", ka.n);
        c->add_flag("--spherical", ka.spherical, "spherical instead of antispherical module");
    }
    k_orbit->add_option("--diagram", ka.diagram);

    CheckArgs ca;
    auto* check_cmd = app.add_subcommand("check", "oracle suites");
    check_cmd->require_subcommand(1);
    auto* c_lr = check_cmd->add_subcommand("level-rank", "level-rank duality of fusion tables");
    auto* c_ver = check_cmd->add_subcommand("verlinde", "fusion table against the Verlinde formula");
    auto* c_lw = check_cmd->add_subcommand("littlewood", "stable branching duality");
    c_lr->add_option("--series", ca.series);
    c_lr->add_option("--cut", ca.cut);
    c_lr->add_option("--level", ca.level);
    c_ver->add_option("--type", ca.type);
    c_ver->add_option("--rank", ca.rank);
    c_ver->add_option("--level", ca.level);
    c_lw->add_option("--diagram", ca.diagram);
    c_lw->add_option("--bound", ca.bound, "largest |mu| to compare");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        Output o;
        bool is_check = false;
        if (fold_cmd->parsed()) o = cmd_fold(fold, oracle);
        else if (tensor_cmd->parsed()) o = cmd_tensor(tensor_args, oracle);
        else if (fuse_cmd->parsed()) o = cmd_fuse(fuse, oracle);
        else if (sm_cmd->parsed()) o = cmd_smatrix(sm, oracle);
        else if (br_cmd->parsed()) o = cmd_branch(br, oracle);
        else if (b_mult->parsed()) o = cmd_brauer_mult(ba, oracle);
        else if (b_trace->parsed()) o = cmd_brauer_trace(ba, oracle);
        else if (b_dims->parsed()) o = cmd_brauer_dims(ba, oracle);
        else if (b_gram->parsed()) o = cmd_brauer_gram(ba, oracle);
        else if (k_orbit->parsed()) o = cmd_kl_orbit(ka);
        else if (k_decomp->parsed()) o = cmd_kl_decomp(ka, oracle);
        else if (k_dims->parsed()) o = cmd_kl_dims(ka, oracle);
        else if (c_lr->parsed()) { o = cmd_check_level_rank(ca); is_check = true; }
        else if (c_ver->parsed()) { o = cmd_check_verlinde(ca); is_check = true; }
        else if (c_lw->parsed()) { o = cmd_check_littlewood(ca); is_check = true; }
        emit(o, format, out);
        if (oracle && !is_check) {
            if (o.oracle_ran)
                err << "oracle: " << o.oracle_checked << " checks, " << o.mismatches.size() << " mismatches\n";
            else
                err << "oracle: no paired oracle for this input\n";
        }
        if (!o.mismatches.empty() && (oracle || is_check)) {
            for (const auto& m : o.mismatches) err << "mismatch: " << m << "\n";
            return kMismatch;
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kMismatch;
    }
}

}  // namespace repring::cli
