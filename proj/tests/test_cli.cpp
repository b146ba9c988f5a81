#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "sftirr/cli.hpp"
#include "sftirr/io.hpp"

using namespace sftirr;
using helpers::throws_named;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::string("/tmp/sftirr_test_") + name;
        if (!content.empty()) {
            std::ofstream out(path);
            out << content;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string gm_json() { return R"({"d":2,"matrix":[[1,1],[1,0]]})"; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_capture(const std::vector<std::string>& args, std::string* out_text,
                std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("load_sft") {
    TempFile gm("gm.json", gm_json());
    Sft sft = load_sft(gm.path);
    CHECK(sft.d == 2);
    CHECK(sft.edge(0, 1));
    CHECK(!sft.edge(1, 1));

    TempFile bad_shape("bad_shape.json",
                       R"({"d":2,"matrix":[[1,1],[1,0],[1,0]]})");
    CHECK(throws_named("DimensionMismatch", [&] { load_sft(bad_shape.path); }));

    TempFile malformed("malformed.json", "{\"d\": 2, \"matrix\": [[1,");
    CHECK(throws_named("ParseError", [&] { load_sft(malformed.path); }));

    CHECK(throws_named("ParseError", [] { load_sft("/nonexistent/x.json"); }));
    CHECK(throws_named("ParseError",
                       [] { sft_from_json_text(R"({"matrix":[[1]]})"); }));
}

TEST_CASE("analyze emits lambda, entropy and the config") {
    TempFile gm("gm_a.json", gm_json());
    std::string out;
    int code = run_capture({"analyze", "--sft", gm.path}, &out);
    CHECK(code == 0);
    json doc = json::parse(out);
    CHECK(doc["format_version"] == 1);
    CHECK(doc["config"]["command"] == "analyze");
    CHECK(doc["config"]["sft"] == gm.path);
    CHECK(std::abs(doc["lambda"].get<double>() - fixtures::golden_ratio()) <=
          1e-10);
    CHECK(std::abs(doc["entropy"].get<double>() -
                   doc["log_lambda"].get<double>()) <= 1e-10);
    CHECK(doc["aperiodic"] == true);
}

TEST_CASE("construct emits the word system") {
    TempFile gm("gm_c.json", gm_json());
    std::string out;
    int code = run_capture({"construct", "--sft", gm.path}, &out);
    CHECK(code == 0);
    json doc = json::parse(out);
    CHECK(doc["alpha"] == 1);
    CHECK(doc["xi"] == json::array({1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}));
    CHECK(doc["eta"] == json::array({1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0}));
    CHECK(doc["M"] == 11);
    CHECK(doc["n0"] == 2);
    CHECK(doc["e"] == 3);
    CHECK(doc["p"] == 3);
}

TEST_CASE("measures subcommand") {
    TempFile gm("gm_m.json", gm_json());
    std::string out;
    int code = run_capture({"measures", "--sft", gm.path, "--q", "1"}, &out);
    CHECK(code == 0);
    json doc = json::parse(out);
    double rho = (1.0 + std::sqrt(1.0 + 4.0 * std::exp(1.0))) / 2.0;
    CHECK(std::abs(doc["rho"].get<double>() - rho) <= 1e-10);
    CHECK(std::abs(doc["pressure"].get<double>() - std::log(rho)) <= 1e-10);
    double mu_xi = doc["mu_xi"].get<double>();
    double mu_eta = doc["mu_eta"].get<double>();
    CHECK(mu_xi < mu_eta);
    CHECK(mu_eta / mu_xi == doctest::Approx(std::exp(1.0)).epsilon(1e-10));
}

TEST_CASE("demo writes a reproducible CSV with the documented schema") {
    TempFile gm("gm_d.json", gm_json());
    TempFile csv("demo.csv");
    std::string out;
    std::vector<std::string> args{"demo", "--sft", gm.path, "--q", "1",
                                  "--seed", "7", "--kmin", "2", "--kmax", "6",
                                  "--out", csv.path};
    CHECK(run_capture(args, &out) == 0);
    std::string first = slurp(csv.path);
    REQUIRE(!first.empty());

    std::istringstream lines(first);
    std::string comment, header, row;
    std::getline(lines, comment);
    std::getline(lines, header);
    CHECK(comment.rfind("# config ", 0) == 0);
    CHECK(header == "n,k,parity,avg_phi_L,avg_psi_x,target_xi,target_eta");
    int rows = 0;
    while (std::getline(lines, row))
        if (!row.empty()) ++rows;
    CHECK(rows == 5);

    CHECK(run_capture(args, &out) == 0);
    CHECK(slurp(csv.path) == first);  // bit-for-bit
}

TEST_CASE("slln writes CSV") {
    TempFile gm("gm_s.json", gm_json());
    TempFile csv("slln.csv");
    std::string out;
    int code = run_capture({"slln", "--sft", gm.path, "--times", "5040,40320",
                            "--out", csv.path},
                           &out);
    CHECK(code == 0);
    std::string text = slurp(csv.path);
    CHECK(text.find("n,estimate,target") != std::string::npos);
    CHECK(text.find("5040,") != std::string::npos);
}

TEST_CASE("family emits disjoint families") {
    TempFile gm("gm_f.json", gm_json());
    std::string out;
    int code = run_capture(
        {"family", "--sft", gm.path, "--count", "2", "--size", "3"}, &out);
    CHECK(code == 0);
    json doc = json::parse(out);
    CHECK(doc["disjoint"] == true);
    CHECK(doc["families"].size() == 2);
    CHECK(doc["branch"] == "xi");
    for (const auto& fam : doc["families"])
        CHECK(fam["epsilons"].size() == 3);
}

TEST_CASE("verify runs the invariant suites") {
    TempFile gm("gm_v.json", gm_json());
    std::string out;
    int code = run_capture({"verify", "--sft", gm.path, "--suite", "sft"},
                           &out);
    CHECK(code == 0);
    json doc = json::parse(out);
    CHECK(doc["pass"] == true);
    CHECK(doc["failures"].empty());
    CHECK(doc["checks"].get<int>() > 0);
}

TEST_CASE("usage errors exit with 2") {
    std::string out, err;
    CHECK(run_capture({"analyze"}, &out, &err) == 2);  // missing --sft
    CHECK(run_capture({"bogus"}, &out, &err) == 2);
    CHECK(run_capture({}, &out, &err) == 2);
    CHECK(run_capture({"demo", "--sft", "x.json"}, &out, &err) == 2);  // no --out
}

TEST_CASE("numeric failures exit with 1 and name the error") {
    TempFile cyclic("cyclic.json", R"({"d":2,"matrix":[[0,1],[1,0]]})");
    std::string out, err;
    CHECK(run_capture({"construct", "--sft", cyclic.path}, &out, &err) == 1);
    CHECK(err.find("NotMixing") != std::string::npos);

    CHECK(run_capture({"analyze", "--sft", "/nonexistent/y.json"}, &out,
                      &err) == 1);
    CHECK(err.find("ParseError") != std::string::npos);
}
