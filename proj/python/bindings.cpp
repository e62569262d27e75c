#include "repring/branching.hpp"
#include "repring/brauer.hpp"
#include "repring/cli.hpp"
#include "repring/fusion.hpp"
#include "repring/kldecomp.hpp"
#include "repring/partition.hpp"
#include "repring/stablering.hpp"
#include "repring/weylfold.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace repring;

namespace {

// Python side: diagrams are tuples of parts, big integers are Python ints.
py::int_ to_py(const Int& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10))); }

Partition to_partition(const std::vector<int>& parts) { return Partition::from_weight(parts); }

py::tuple to_tuple(const std::vector<int>& v) {
    py::tuple t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
    return t;
}

py::dict ring_dict(const RingVector& v) {
    py::dict d;
    for (const auto& [p, c] : v.terms()) d[to_tuple(p.parts())] = to_py(c);
    return d;
}

template <class Map>
py::dict label_dict(const Map& m) {
    py::dict d;
    for (const auto& [p, c] : m) d[to_tuple(p.parts())] = to_py(c);
    return d;
}

py::dict weight_dict(const WeightMap& m) {
    py::dict d;
    for (const auto& [w, c] : m) d[to_tuple(w)] = to_py(c);
    return d;
}

py::object fold_object(const SignedFold& f) {
    if (f.zero) return py::none();
    return py::make_tuple(f.sign, to_tuple(Partition::from_weight(f.value).parts()));
}

FusionAlgebraSpec spec_of(const std::string& type, int rank, int level) {
    return FusionAlgebraSpec{parse_lie_type(type), rank, level};
}

py::dict laurent_dict(const LaurentPolynomial& p) {
    py::dict d;
    for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact representation-ring computations";

    m.def("transpose", [](const std::vector<int>& p) { return to_tuple(to_partition(p).transpose().parts()); });
    m.def("lr_coefficient", [](const std::vector<int>& l, const std::vector<int>& mu, const std::vector<int>& nu) {
        return to_py(lr_coefficient(to_partition(l), to_partition(mu), to_partition(nu)));
    });
    m.def("gl_product", [](const std::vector<int>& l, const std::vector<int>& mu) {
        return ring_dict(gl_product(to_partition(l), to_partition(mu)));
    });
    m.def("schur_product_oracle", [](const std::vector<int>& l, const std::vector<int>& mu, int nvars) {
        return ring_dict(schur_product_oracle(to_partition(l), to_partition(mu), nvars));
    });
    m.def("gl_dimension", [](const std::vector<int>& l, int N) { return to_py(gl_dimension(to_partition(l), N)); });

    m.def("fold_stable", [](const std::vector<int>& l, const std::string& series, int N) {
        return fold_object(fold_stable(to_partition(l), parse_series(series), N));
    }, py::arg("diagram"), py::arg("series"), py::arg("cut"),
       "None when the diagram folds to zero, else (sign, diagram).");
    m.def("fold_affine", [](const std::vector<int>& weight, const std::string& type, int rank, int level) {
        return fold_object(fold_affine_weight(weight, spec_of(type, rank, level)));
    }, py::arg("weight"), py::arg("type"), py::arg("rank"), py::arg("level"));

    m.def("stable_product", [](const std::vector<int>& l, const std::vector<int>& mu) {
        return ring_dict(stable_product(to_partition(l), to_partition(mu)));
    });
    m.def("klimyk_tensor", [](const std::vector<int>& l, const std::vector<int>& mu, const std::string& type, int rank) {
        return weight_dict(klimyk_tensor(l, mu, parse_lie_type(type), rank));
    });

    m.def("fusion_labels", [](const std::string& type, int rank, int level) {
        py::list out;
        for (const auto& w : fusion_labels(spec_of(type, rank, level))) out.append(to_tuple(w));
        return out;
    });
    m.def("fusion_product", [](const std::string& type, int rank, int level, const std::vector<int>& l, const std::vector<int>& mu) {
        return weight_dict(fusion_product(spec_of(type, rank, level), l, mu));
    });
    m.def("verlinde_coefficient", [](const std::string& type, int rank, int level, const std::vector<int>& l,
                                     const std::vector<int>& mu, const std::vector<int>& nu) {
        return to_py(verlinde_coefficient(spec_of(type, rank, level), l, mu, nu));
    });
    m.def("o_fusion_product", [](int M, int level, const std::vector<int>& l, const std::vector<int>& mu) {
        return ring_dict(o_fusion_product(M, level, to_partition(l), to_partition(mu)));
    });
    m.def("level_rank_mismatches", [](const std::string& series, int N, int level) {
        auto r = parse_series(series) == Series::Orthogonal ? level_rank_transpose_check(N, level) : sp_level_rank_check(N, level);
        return r.mismatches;
    });

    m.def("branch", [](const std::vector<int>& l, const std::string& series, int N) {
        return ring_dict(branch(to_partition(l), parse_series(series), N).entries);
    });
    m.def("littlewood_stable", [](const std::vector<int>& l, const std::string& series) {
        return ring_dict(littlewood_stable(to_partition(l), parse_series(series)));
    });

    m.def("brauer_multiply", [](const std::string& a, const std::string& b) {
        auto w = multiply(BrauerDiagram::parse(a), BrauerDiagram::parse(b));
        return py::make_tuple(w.cycles, w.diagram.str());
    }, "Returns (cycles, diagram) for the product with a on top of b.");
    m.def("brauer_trace", [](const std::string& a) { return laurent_dict(closure_trace(BrauerDiagram::parse(a))); });
    m.def("generic_dims", [](int n) { return label_dict(generic_dims(n)); });
    m.def("admissible_mults", [](int n, int N, const std::string& series) {
        return label_dict(admissible_mults(n, N, parse_series(series)));
    });
    m.def("gram_rank", [](int n, long long num, long long den) { return gram_rank(n, Rational(num, den)); },
          py::arg("n"), py::arg("num"), py::arg("den") = 1);

    m.def("decomposition_matrix", [](int n, int N, bool spherical) {
        auto d = decomposition_matrix(n, N, spherical ? KLConvention::Spherical : KLConvention::Antispherical);
        py::dict out;
        for (const auto& [k, v] : d.entries) out[py::make_tuple(to_tuple(k.first), to_tuple(k.second))] = to_py(v);
        return out;
    }, py::arg("n"), py::arg("N"), py::arg("spherical") = false);
    m.def("simple_dims", [](int n, int N) { return label_dict(simple_dims(n, N).dims); });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Runs the command-line front end in process; returns (exit code, stdout, stderr).");
}
