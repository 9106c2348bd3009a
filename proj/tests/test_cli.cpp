#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hmf/serialize.hpp"
#include "hmf/structure.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_path = "cli_stdout.tmp";
    std::string cmd = std::string(HMF5_BIN) + " " + args + " > " + out_path + " 2>cli_stderr.tmp";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return {code, ss.str()};
}

json find_term(const json& doc, const std::string& a, const std::string& b) {
    for (const auto& t : doc["terms"])
        if (t["a"] == a && t["b"] == b) return t;
    return nullptr;
}

}  // namespace

TEST_CASE("expand: JSON output of the generators") {
    RunResult r = run("expand phi2 --bound 2");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["weight"] == json::array({2, 2}));
    CHECK(doc["trace_bound"] == 2);
    CHECK(find_term(doc, "0", "0")["coeff"] == json::array({"1", "0"}));
    CHECK(find_term(doc, "1", "1")["coeff"] == json::array({"120", "0"}));
    CHECK(find_term(doc, "0", "2")["coeff"] == json::array({"720", "0"}));

    r = run("expand chi5 --bound 2");
    REQUIRE(r.exit_code == 0);
    doc = json::parse(r.out);
    CHECK(find_term(doc, "1", "1")["coeff"] == json::array({"1", "0"}));
    CHECK(find_term(doc, "-1", "1")["coeff"] == json::array({"-1", "0"}));

    r = run("expand E6norm --bound 2");
    REQUIRE(r.exit_code == 0);
    doc = json::parse(r.out);
    CHECK(find_term(doc, "1", "1")["coeff"] == json::array({"2520/67", "0"}));
}

TEST_CASE("expand: elliptic forms and CSV") {
    RunResult r = run("expand elliptic:Delta --bound 4");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["weight"] == 12);
    CHECK(doc["coeffs"] == json::array({"0", "1", "-24", "252", "-1472"}));

    r = run("expand phi2 --bound 1 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "a,b,x_num,x_den,y_num,y_den\n"
                   "0,0,1,1,0,1\n"
                   "1,1,120,1,0,1\n"
                   "-1,1,120,1,0,1\n");
}

TEST_CASE("expand: identical output on repeated runs") {
    RunResult a = run("expand chi6 --bound 3");
    RunResult b = run("expand chi6 --bound 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify: relations report OK and exit zero") {
    for (const char* rel : {"systeme_elliptic", "systeme2", "deri2", "equadiff",
                            "theta_cross_check"}) {
        RunResult r = run(std::string("verify ") + rel + " --bound 6");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("OK") == 0);
    }
}

TEST_CASE("reduce: already reduced point is the identity certificate") {
    RunResult r = run("reduce 2i 2i");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["gamma"] == json::array({"1", "0", "0", "1"}));
    CHECK(doc["im_product"].get<double>() == doctest::Approx(4.0));
    CHECK(doc["iterations"] == 1);

    r = run("reduce \"0.3+0.2i\" \"-0.1+0.4i\"");
    REQUIRE(r.exit_code == 0);
    doc = json::parse(r.out);
    double imp = doc["im_product"].get<double>();
    CHECK(imp >= 0.2 * 0.4);
}

TEST_CASE("decompose: round trip through a series document") {
    hmf::HilbertSeries f = hmf::phi2(6);
    hmf::HilbertSeries sq = f * f;
    {
        std::ofstream o("cli_series.json");
        o << hmf::series_to_json(sq).dump();
    }
    RunResult r = run("decompose cli_series.json --basis symmetric_even");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["weight"] == 4);
    REQUIRE(doc["terms"].size() == 1);
    CHECK(doc["terms"][0]["exponents"] == json::array({2, 0, 0}));
    CHECK(doc["terms"][0]["coeff"] == json::array({"1", "0"}));

    // elliptic basis goes through the diagonal restriction
    r = run("decompose cli_series.json --basis elliptic");
    REQUIRE(r.exit_code == 0);
    doc = json::parse(r.out);
    CHECK(doc["weight"] == 8);
    REQUIRE(doc["terms"].size() == 1);
    CHECK(doc["terms"][0]["exponents"] == json::array({2, 0}));

    // non-modular input: perturb a self-conjugate coefficient
    hmf::HilbertSeries bad = sq;
    bad.set_coeff(hmf::NuIndex(0, 2), bad.coeff(hmf::NuIndex(0, 2)) + hmf::QuadElem(1L));
    {
        std::ofstream o("cli_bad.json");
        o << hmf::series_to_json(bad).dump();
    }
    r = run("decompose cli_bad.json --basis symmetric_even");
    CHECK(r.exit_code == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("expand nosuchform --bound 3").exit_code == 2);
    CHECK(run("expand phi2 --bound 0").exit_code == 2);
    CHECK(run("expand phi2 --bound 25").exit_code == 2);
    CHECK(run("expand phi2 --format yaml").exit_code == 2);
    CHECK(run("verify nosuchrelation").exit_code == 2);
    CHECK(run("reduce 1.0 2i").exit_code == 2);       // z1 not in the upper half plane
    CHECK(run("reduce banana 2i").exit_code == 2);
    CHECK(run("decompose no_such_file.json").exit_code == 2);
    CHECK(run("").exit_code == 2);
}
