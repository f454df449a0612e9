#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using njson = nlohmann::json;

const char* cli_path() { return QPAIR_CLI_PATH; }

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    std::string out_file = "/tmp/qpair_cli_out_" + std::to_string(counter);
    std::string err_file = "/tmp/qpair_cli_err_" + std::to_string(counter);
    ++counter;
    std::string cmd = env + " \"" + std::string(cli_path()) + "\" " + args + " > " + out_file +
                      " 2> " + err_file;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const std::string& path) {
        std::ifstream in(path);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/qpair_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("generate then classify round trips") {
    RunResult gen = run("generate --type U --k 0");
    REQUIRE(gen.exit_code == 0);
    njson pair = njson::parse(gen.out);
    CHECK(pair["quaternionic_dimension"] == 1);
    CHECK(pair["subspace_basis"].size() == 1);

    std::string f = write_temp("u0.json", gen.out);
    RunResult cls = run("classify " + f);
    REQUIRE(cls.exit_code == 0);
    njson report = njson::parse(cls.out);
    CHECK(report["factors"] == njson::parse(R"([{"type":"U","k":0,"mult":1}])"));
}

TEST_CASE("a 2-plane spanned by 1 and j classifies as W at +-j") {
    RunResult gen = run("generate --type W --k 1 --support 1");
    REQUIRE(gen.exit_code == 0);
    std::string f = write_temp("w1j.json", gen.out);
    RunResult cls = run("classify " + f + " --filtration");
    REQUIRE(cls.exit_code == 0);
    njson report = njson::parse(cls.out);
    REQUIRE(report["factors"].size() == 1);
    CHECK(report["factors"][0]["type"] == "W");
    CHECK(report["factors"][0]["k"] == 1);
    CHECK(report["factors"][0]["support"] == njson::array({"1", "0", "-1"}));
    CHECK(report["filtration"]["bases_complete"] == true);
}

TEST_CASE("malformed rational exits 1 with a machine-readable error") {
    std::string f = write_temp("bad.json",
                               R"({"quaternionic_dimension":1,"subspace_basis":)"
                               R"([[{"r":"1/0","i":"0","j":"0","k":"0"}]]})");
    RunResult r = run("classify " + f);
    CHECK(r.exit_code == 1);
    CHECK(njson::parse(r.err).contains("error"));
}

TEST_CASE("classification output is byte-identical across runs") {
    RunResult gen = run("generate --type V --k 2");
    REQUIRE(gen.exit_code == 0);
    njson pair = njson::parse(gen.out);
    CHECK(pair["subspace_basis"].size() == 8);
    CHECK(pair["quaternionic_dimension"] == 5);
    std::string f = write_temp("v2.json", gen.out);
    RunResult a = run("classify " + f);
    RunResult b = run("classify " + f);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("dual command composes with classify") {
    RunResult gen = run("generate --type U --k 0");
    std::string f = write_temp("u0b.json", gen.out);
    RunResult d = run("dual " + f);
    REQUIRE(d.exit_code == 0);
    std::string fd = write_temp("u0d.json", d.out);
    RunResult cls = run("classify " + fd);
    REQUIRE(cls.exit_code == 0);
    CHECK(njson::parse(cls.out)["factors"][0]["type"] == "U*");
}

TEST_CASE("product with a rotation flag") {
    RunResult w1 = run("generate --type W --k 1 --support 1");
    RunResult w2 = run("generate --type W --k 1 --support 0");
    std::string f1 = write_temp("wp1.json", w1.out);
    std::string f2 = write_temp("wp2.json", w2.out);
    RunResult p = run("product " + f1 + " " + f2 + " --rotation 1/2,1/2,1/2,1/2");
    REQUIRE(p.exit_code == 0);
    std::string fp = write_temp("wprod.json", p.out);
    RunResult cls = run("classify " + fp);
    REQUIRE(cls.exit_code == 0);
    CHECK(njson::parse(cls.out)["factors"].size() == 2);

    RunResult bad = run("product " + f1 + " " + f2 + " --rotation 1,1,0,0");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("transform is deterministic in the seed") {
    RunResult gen = run("generate --type V --k 1");
    std::string f = write_temp("v1.json", gen.out);
    RunResult a = run("transform " + f + " --seed 7");
    RunResult b = run("transform " + f + " --seed 7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("transform " + f + " --seed 8");
    CHECK(a.out != c.out);
}

TEST_CASE("check on a pair file and on a corrupted report") {
    RunResult gen = run("generate --type W --k 1 --support 1");
    std::string f = write_temp("wchk.json", gen.out);
    RunResult chk = run("check " + f);
    CHECK(chk.exit_code == 0);
    njson rep = njson::parse(chk.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["torsion_length"] == 2);

    RunResult cls = run("classify " + f);
    njson report = njson::parse(cls.out);
    report["sheaf"]["kernel_degrees"] = njson::array({-2});
    std::string fr = write_temp("wbadreport.json", report.dump());
    RunResult bad = run("check " + fr);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("QPAIR_MAX_K caps the input size") {
    RunResult r = run("generate --type U --k 5", "QPAIR_MAX_K=2");
    CHECK(r.exit_code == 1);
    CHECK(njson::parse(r.err).contains("error"));
    RunResult ok = run("generate --type U --k 5");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("unknown flags are rejected with exit 1 and a JSON error") {
    RunResult r = run("classify --frobnicate /tmp/nonexistent.json");
    CHECK(r.exit_code == 1);
    CHECK(njson::parse(r.err).contains("error"));
    RunResult help = run("--help");
    CHECK(help.exit_code == 0);
}
