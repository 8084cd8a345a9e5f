#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "torusband/cli.hpp"
#include "torusband/fp.hpp"

using nlohmann::json;

namespace {

struct cli_result {
    int code;
    std::string out;
    std::string err;
};

cli_result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = tb::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

} // namespace

TEST_CASE("seq subcommand emits the canonical sequence") {
    const cli_result r = run({"seq", "2", "2,-1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["entries"] == json({1, -1, 1, 0}));
    CHECK(j["n"] == 2);
    CHECK(j["r"] == 2);
}

TEST_CASE("seq output feeds check-simple") {
    const cli_result seq = run({"seq", "2", "2,-1"});
    const auto p = write_temp("tb_cli_seq.json", seq.out);
    const cli_result chk = run({"check-simple", p.string()});
    REQUIRE(chk.code == 0);
    CHECK(json::parse(chk.out)["simple"] == true);
}

TEST_CASE("exit code 1 on domain errors") {
    CHECK(run({"seq", "2", "1,1"}).code == 1); // gcd(2, 2) != 1
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"seq"}).code == 2);
    const auto p = write_temp("tb_cli_bad.json", "{not json");
    CHECK(run({"check-simple", p.string()}).code == 2);
}

TEST_CASE("intersect and self-intersect") {
    const auto pa = write_temp("tb_cli_a.json", run({"seq", "2", "2,-1"}).out);
    const auto pb = write_temp("tb_cli_b.json", run({"seq", "1", "0,0"}).out);
    const cli_result inter = run({"intersect", pa.string(), pb.string()});
    REQUIRE(inter.code == 0);
    CHECK(json::parse(inter.out)["count"] == 1);

    const cli_result self = run({"self-intersect", pa.string()});
    REQUIRE(self.code == 0);
    CHECK(json::parse(self.out)["count"] == 0);
}

TEST_CASE("hom matches the intersection count") {
    const auto pa = write_temp("tb_cli_a2.json", run({"seq", "2", "2,-1"}).out);
    const auto pb = write_temp("tb_cli_b2.json", run({"seq", "1", "0,0"}).out);
    const cli_result hom = run({"hom", pa.string(), pb.string(), "--lambda", "2", "--lambda2", "3"});
    REQUIRE(hom.code == 0);
    CHECK(json::parse(hom.out)["total"] == 1);
}

TEST_CASE("build reports a complex with d^2 = 0 metadata") {
    const auto pa = write_temp("tb_cli_a3.json", run({"seq", "2", "2,-1"}).out);
    const cli_result r = run({"build", pa.string(), "--lambda", "5"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["summands"].size() > 0);
    CHECK(j["differential"].size() > 0);
}

TEST_CASE("cone and peel") {
    const auto pa = write_temp("tb_cli_a4.json", run({"seq", "2", "2,-1"}).out);
    const cli_result cone = run({"cone", pa.string()});
    REQUIRE(cone.code == 0);
    CHECK(json::parse(cone.out)["line_degree"] == json({2, -1}));

    const cli_result peel = run({"peel", pa.string()});
    REQUIRE(peel.code == 0);
    CHECK(json::parse(peel.out)["tower"].size() == 2);
}

TEST_CASE("twist and normalize") {
    const auto pa = write_temp("tb_cli_a5.json", run({"seq", "2", "2,-1"}).out);
    const cli_result tw = run({"twist", pa.string(), "--gen", "vert:1", "--pow", "1"});
    REQUIRE(tw.code == 0);
    CHECK(json::parse(tw.out).contains("letters"));

    const cli_result norm = run({"normalize", pa.string()});
    REQUIRE(norm.code == 0);
    const json j = json::parse(norm.out);
    CHECK(j.contains("word"));
    CHECK(j["result"].contains("letters"));
}

TEST_CASE("render writes an SVG file") {
    const auto svg = std::filesystem::temp_directory_path() / "tb_cli_out.svg";
    const cli_result r = run({"render", "2", "2,-1", "--svg", svg.string()});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["crossings"] == 0);
    std::ifstream f(svg);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("<svg") != std::string::npos);
}

TEST_CASE("dim-lambda") {
    const cli_result r = run({"dim-lambda", "--n", "3"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["dim"] == 27);
}

TEST_CASE("verify with zero samples is empty and succeeds") {
    const cli_result r = run({"verify", "--samples", "0"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["checks"].empty());
}

TEST_CASE("verify small run has no mismatches") {
    const cli_result r = run({"verify", "--n", "2", "--r", "2", "--samples", "8", "--seed", "4"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["mismatches"] == 0);
}

TEST_CASE("field prime flag validates") {
    CHECK(run({"--field-prime", "15", "dim-lambda", "--n", "1"}).code == 2);
    CHECK(run({"--field-prime", "101", "dim-lambda", "--n", "1"}).code == 0);
    tb::field::set_prime(32003); // the prime is process-global; restore it
}
