#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "report.hpp"
#include "sylvdet/algebra.hpp"

using namespace sylvdet;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("factored form rendering") {
    CHECK(cli::factored_form({Rational(-2), Rational(0), Rational(2)}) == "(t+2)t(t-2)");
    CHECK(cli::factored_form({Rational(0), Rational(-1)}) == "t(t+1)");
    CHECK(cli::factored_form({Rational(2), Rational(2), Rational(2)}) == "(t-2)^3");
    CHECK(cli::factored_form({Rational(3, 7)}, 'x') == "(x-3/7)");
}

TEST_CASE("eval examples") {
    auto r = run({"eval", "--family", "sylvester-d", "--dim", "4"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "closed form: (t+3)(t+1)(t-1)(t-3)\n"));
    CHECK(has(r.out, "match: true"));

    r = run({"eval", "--family", "krawtchouk", "--dim", "3", "--param", "p=1/3"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "closed form: t(t+1)(t+2)\n"));
    CHECK(has(r.out, "note: t = lambda(x) = -x"));

    r = run({"eval", "--family", "dual-hahn", "--dim", "1", "--param", "gamma=1/2", "--param", "delta=1/3"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "closed form: t\n"));
    CHECK(has(r.out, "match: true"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"eval", "--family", "all", "--dim", "3"}).code == 2);
    CHECK(run({"eval", "--family", "jacobi", "--dim", "3"}).code == 2);
    CHECK(run({"eval", "--family", "sylvester-d"}).code == 2);
    CHECK(run({"eval", "--family", "sylvester-d", "--dim", "0"}).code == 2);
    CHECK(run({"eval", "--family", "krawtchouk", "--dim", "3", "--param", "p=1/0"}).code == 2);
    CHECK(run({"eval", "--family", "krawtchouk", "--dim", "3", "--param", "x=1"}).code == 2);
    CHECK(run({"verify", "--dims", "4..2"}).code == 2);
    CHECK(run({"verify", "--format", "yaml"}).code == 2);
    CHECK(run({"verify", "--variant", "nonsense"}).code == 2);
    CHECK(run({"eval", "--family", "hahn", "--dim", "3", "--param", "alpha=0", "--param", "beta=-1"}).code == 2);
    CHECK(run({"reduce", "--family", "sylvester-d", "--dim", "2"}).code == 2);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--family", "all", "--max-dim", "6", "--samples", "2", "--seed", "42"});
    CHECK(r.code == 0);
    CHECK_FALSE(has(r.out, "FAIL"));

    r = run({"verify", "--family", "dual-hahn", "--dim", "1", "--paper-literal"});
    CHECK(r.code == 1);
    CHECK(has(r.out, "degree 2 vs 1"));

    CHECK(run({"verify", "--family", "sylvester-a", "--max-dim", "12"}).code == 0);
    CHECK(run({"verify", "--family", "racah", "--dims", "2..3", "--variant", "racah-lambda"}).code == 1);
}

TEST_CASE("reduce") {
    auto r = run({"reduce", "--family", "sylvester-d", "--dim", "3", "--trace"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "leading eigenvalues: 2 -2 ok"));
    CHECK(has(r.out, "[M]\n    [0]\n"));

    r = run({"reduce", "--family", "hahn", "--dim", "4"});
    CHECK(r.code == 2);
    CHECK(has(r.err, "no reduction available"));
    CHECK(run({"reduce", "--family", "sylvester-a", "--dim", "4"}).code == 2);
    CHECK(run({"reduce", "--family", "racah", "--dim", "4"}).code == 2);

    r = run({"reduce", "--family", "q-racah", "--dim", "3", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "sigma="));
    CHECK(has(r.out, "kappa="));

    r = run({"reduce", "--family", "q-racah", "--dim", "3", "--param", "q=1/2", "--param", "a=1/3", "--param", "b=1/5",
             "--param", "c=1/7", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["cases"][0]["shift"]["offset"] == "3/7");
    CHECK(doc["cases"][0]["shift"]["scale"] == "1/2");

    CHECK(run({"reduce", "--family", "all", "--dims", "2..6", "--samples", "2"}).code == 0);
    CHECK(run({"reduce", "--family", "q-racah", "--dim", "3", "--variant", "q-racah-upper"}).code == 1);
}

TEST_CASE("identity") {
    auto r = run({"identity", "--max-n", "8", "--trials", "20", "--seed", "7"});
    CHECK(r.code == 0);

    r = run({"identity", "--trials", "0"});
    CHECK(r.code == 0);
    CHECK(has(r.err, "vacuous"));

    r = run({"identity", "--variant", "cN1", "--max-n", "3"});
    CHECK(r.code == 1);
    CHECK(has(r.out, "counterexample"));
}

TEST_CASE("table examples") {
    auto r = run({"table", "--family", "sylvester-d", "--dims", "1..3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "sylvester-d\t1\tt\t[0, 1]\n"
          "sylvester-d\t2\t(t+1)(t-1)\t[-1, 0, 1]\n"
          "sylvester-d\t3\t(t+2)t(t-2)\t[0, -4, 0, 1]\n");

    r = run({"table", "--family", "sylvester-a", "--dims", "1..3"});
    CHECK(has(r.out, "\t(t-1)^2\t"));
    CHECK(has(r.out, "\t(t-2)^3\t"));

    r = run({"table", "--family", "krawtchouk", "--dims", "1..2"});
    CHECK(has(r.out, "krawtchouk\t1\tt\t"));
    CHECK(has(r.out, "krawtchouk\t2\tt(t+1)\t"));
}

TEST_CASE("table matches the golden file") {
    const std::string golden = read_file(std::string(SYLVDET_GOLDEN_DIR) + "/table_sylvester_d_1_6.txt");
    REQUIRE_FALSE(golden.empty());
    CHECK(run({"table", "--family", "sylvester-d", "--dims", "1..6"}).out == golden);

    // the golden coefficient lists against prod (t + N - 2j)
    std::istringstream rows(golden);
    unsigned dim = 0;
    for (std::string line; std::getline(rows, line);) {
        ++dim;
        std::vector<Rational> roots;
        for (unsigned j = 0; j < dim; ++j) roots.push_back(Rational(2 * static_cast<long>(j) - static_cast<long>(dim - 1)));
        CHECK(line.substr(line.rfind('\t') + 1) == cli::coefficient_list(poly_from_roots(roots)));
    }
    CHECK(dim == 6);
}

TEST_CASE("seeded runs are byte-identical") {
    const std::vector<std::string> args = {"verify", "--family", "all", "--max-dim", "5", "--samples", "2",
                                           "--seed", "9", "--format", "json"};
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.out == second.out);
    const auto doc = nlohmann::json::parse(first.out);
    CHECK(doc["command"] == "verify");
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["summary"]["total"] == doc["cases"].size());
    for (const auto& c : doc["cases"]) {
        CHECK(c["passed"] == true);
        if (c["kind"] == "closed-form") {
            for (const auto& v : c["charpoly"]) CHECK(v.is_string());
        }
    }
    CHECK(run({"verify", "--max-dim", "5", "--samples", "2", "--seed", "10", "--format", "json"}).out != first.out);
}

TEST_CASE("out path") {
    const std::string path = "sylvdet_cli_test_out.json";
    const auto r = run({"eval", "--family", "sylvester-b", "--dim", "3", "--param", "a=3", "--format", "json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const auto doc = nlohmann::json::parse(read_file(path));
    CHECK(doc["cases"][0]["factored"] == "(t+4)(t-1)(t-6)");
    std::remove(path.c_str());
}
