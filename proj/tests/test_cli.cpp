#include <doctest.h>

#include "repring/cli.hpp"
#include "repring/partition.hpp"

#include <json.hpp>

#include <sstream>

using namespace repring;

namespace {
struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }
}  // namespace

TEST_CASE("fold command") {
    auto r = run_cli({"fold", "--series", "orthogonal", "--cut", "2", "--diagram", "3,1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "{\"sign\":-1,\"diagram\":[2]}\n");
    auto z = run_cli({"fold", "--series", "orthogonal", "--cut", "2", "--diagram", "2,1"});
    CHECK(z.out == "{\"zero\":true}\n");
    auto a = run_cli({"fold", "--type", "C", "--rank", "2", "--level", "4", "--weight", "3,0"});
    CHECK(a.out == "{\"sign\":-1,\"weight\":[1,0]}\n");
}

TEST_CASE("tensor command") {
    auto r = run_cli({"tensor", "--lhs", "1", "--rhs", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "{\"0\":1,\"1,1\":1,\"2\":1}\n");
    const auto doc = parse(r);
    for (const auto& [k, v] : doc.items()) CHECK(Partition::parse(k).str() == k);
}

TEST_CASE("brauer trace command") {
    auto r = run_cli({"brauer", "trace", "--n", "2", "--diagram", "(1,2)(3,4)"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "\"x^-1\"\n");
}

TEST_CASE("oracle runs succeed") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"fold", "--series", "symplectic", "--cut", "2", "--diagram", "3", "--oracle"},
             {"fold", "--type", "B", "--rank", "2", "--level", "5", "--weight", "4,1", "--oracle"},
             {"tensor", "--lhs", "2,1", "--rhs", "1,1", "--oracle"},
             {"fuse", "--type", "C", "--rank", "2", "--level", "5", "--lhs", "1", "--rhs", "1,1", "--oracle"},
             {"fuse", "--series", "orthogonal", "--cut", "3", "--level", "5", "--lhs", "2", "--rhs", "1", "--oracle"},
             {"fuse", "--series", "symplectic", "--cut", "2", "--level", "4", "--lhs", "1", "--rhs", "1", "--oracle"},
             {"smatrix", "--type", "B", "--rank", "2", "--level", "4", "--oracle"},
             {"branch", "--series", "orthogonal", "--cut", "3", "--diagram", "2,1", "--oracle"},
             {"brauer", "mult", "--lhs", "(1,2)(3,4)", "--rhs", "(1,2)(3,4)", "--oracle"},
             {"brauer", "trace", "--diagram", "(1,4)(2,3)", "--oracle"},
             {"brauer", "dims", "--n", "4", "--oracle"},
             {"brauer", "dims", "--n", "3", "--series", "orthogonal", "--cut", "2", "--oracle"},
             {"brauer", "gram-rank", "--n", "3", "--x", "-2", "--oracle"},
             {"kl", "decomp", "--N", "2", "--n", "4", "--oracle"},
             {"kl", "dims", "--N", "2", "--n", "4", "--oracle"},
             {"kl", "orbit", "--N", "2", "--n", "4", "--diagram", "0"},
             {"check", "level-rank", "--series", "orthogonal", "--cut", "3", "--level", "5"},
             {"check", "level-rank", "--series", "symplectic", "--cut", "2", "--level", "4"},
             {"check", "verlinde", "--type", "C", "--rank", "1", "--level", "4"},
             {"check", "littlewood", "--diagram", "2,1"},
         }) {
        auto r = run_cli(args);
        INFO(args[0] << " " << r.err);
        CHECK(r.code == cli::kOk);
        CHECK_FALSE(r.out.empty());
    }
}

TEST_CASE("outputs") {
    auto m = parse(run_cli({"brauer", "mult", "--lhs", "(1,2)(3,4)", "--rhs", "(1,2)(3,4)"}));
    CHECK(m["coefficient"]["1"] == 1);
    CHECK(m["diagram"] == "(1,2)(3,4)");
    auto g = parse(run_cli({"brauer", "gram-rank", "--n", "2", "--x", "2"}));
    CHECK(g["rank"] == 3);
    auto d = parse(run_cli({"kl", "dims", "--N", "2", "--n", "4"}));
    CHECK(d["dims"]["0"] == 2);
    CHECK(d["dims"]["1,1"] == 3);
    auto k = parse(run_cli({"kl", "decomp", "--N", "2", "--n", "2"}));
    CHECK(k["wall_fixed"] == nlohmann::json::parse("[[2]]"));
    auto f = parse(run_cli({"fuse", "--type", "C", "--rank", "1", "--level", "4", "--lhs", "1", "--rhs", "1"}));
    CHECK(f == nlohmann::json::parse("{\"0\":1,\"2\":1}"));
    auto b = parse(run_cli({"branch", "--series", "symplectic", "--cut", "2", "--diagram", "1,1"}));
    CHECK(b == nlohmann::json::parse("{\"0\":1}"));
}

TEST_CASE("global flags after the subcommand and tsv") {
    auto r = run_cli({"tensor", "--lhs", "1", "--rhs", "1", "--format", "tsv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "label\tcoefficient\n0\t1\n1,1\t1\n2\t1\n");
    auto s = run_cli({"--format", "tsv", "brauer", "trace", "--n", "2", "--diagram", "(1,2)(3,4)"});
    CHECK(s.out == "trace\nx^-1\n");
}

TEST_CASE("usage errors name the flag") {
    auto a = run_cli({"fold", "--series", "orthogonal", "--cut", "2", "--diagram", "1,3"});
    CHECK(a.code == cli::kUsage);
    CHECK(a.err.find("--diagram") != std::string::npos);
    auto b = run_cli({"fold", "--series", "symplectic", "--cut", "3", "--diagram", "1"});
    CHECK(b.code == cli::kUsage);
    CHECK(b.err.find("--cut") != std::string::npos);
    auto c = run_cli({"fuse", "--type", "E", "--rank", "2", "--level", "3", "--lhs", "0", "--rhs", "0"});
    CHECK(c.code == cli::kUsage);
    CHECK(c.err.find("--type") != std::string::npos);
    auto d = run_cli({"brauer", "trace", "--n", "2", "--diagram", "(1,2)"});
    CHECK(d.code == cli::kUsage);
    CHECK(d.err.find("--diagram") != std::string::npos);
    auto e = run_cli({"tensor", "--lhs", "1", "--rhs", "1", "--format", "xml"});
    CHECK(e.code == cli::kUsage);
    CHECK(e.err.find("--format") != std::string::npos);
    CHECK(run_cli({}).code == cli::kUsage);
    CHECK(run_cli({"frobnicate"}).code == cli::kUsage);
    auto f = run_cli({"kl", "decomp", "--N", "3", "--n", "2"});
    CHECK(f.code == cli::kUsage);
    CHECK(f.err.find("--N") != std::string::npos);
    auto g = run_cli({"brauer", "gram-rank", "--n", "2", "--x", "a/b"});
    CHECK(g.code == cli::kUsage);
    CHECK(g.err.find("--x") != std::string::npos);
}

TEST_CASE("determinism") {
    std::vector<std::string> args{"kl", "decomp", "--N", "2", "--n", "6"};
    CHECK(run_cli(args).out == run_cli(args).out);
    std::vector<std::string> sm{"smatrix", "--type", "C", "--rank", "2", "--level", "5"};
    CHECK(run_cli(sm).out == run_cli(sm).out);
}

TEST_CASE("oracle flag leaves stdout unchanged") {
    std::vector<std::string> args{"branch", "--series", "orthogonal", "--cut", "3", "--diagram", "2,1"};
    auto plain = run_cli(args);
    args.push_back("--oracle");
    auto checked = run_cli(args);
    CHECK(plain.out == checked.out);
    CHECK(checked.err.find("0 mismatches") != std::string::npos);
    const auto doc = parse(checked);
    for (const auto& [k, v] : doc.items()) CHECK(Partition::parse(k).str() == k);
}
