#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "comax/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = comax::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("spectrum command")
{
    auto r = run({"spectrum", "6", "--format", "pretty"});
    CHECK(r.code == 0);
    CHECK(r.out == "6^2 5 3 2 0\n");

    r = run({"spectrum", "4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["integer_eigenvalues"] == nlohmann::json::parse("[[4,2],[2,1],[0,1]]"));

    r = run({"spectrum", "12", "--format", "csv"});
    CHECK(r.out.rfind("value,multiplicity,exact\n12,4,true\n", 0) == 0);

    r = run({"spectrum", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("n must be at least 3") != std::string::npos);

    CHECK(run({"spectrum", "6", "--format", "xml"}).code == 2);
    CHECK(run({"spectrum"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify command")
{
    CHECK(run({"verify", "12"}).code == 0);
    CHECK(run({"verify", "7"}).code == 0);
    CHECK(run({"verify", "2"}).code == 2);

    const auto r = run({"verify", "27", "--json"});
    CHECK(r.code == 1);
    CHECK(r.err.find("g2_components") != std::string::npos);
    CHECK(nlohmann::json::parse(r.out)["ok"] == false);
}

TEST_CASE("scan command")
{
    const auto dir = std::filesystem::temp_directory_path() / "comax_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.csv";
    const auto b = dir / "b.csv";
    auto r = run({"scan", "--from", "3", "--to", "300", "--workers", "1", "--out", a.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("scanned 298") == 0);
    CHECK(run({"scan", "--from", "3", "--to", "300", "--workers", "5", "--out", b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));

    const auto j = dir / "c.json";
    CHECK(run({"scan", "--from", "3", "--to", "20", "--out", j.string(), "--filter", "integral"}).code == 0);
    CHECK(nlohmann::json::parse(slurp(j)).size() == 18);

    CHECK(run({"scan", "--from", "10", "--to", "3"}).code == 2);
    CHECK(run({"scan", "--from", "3", "--to", "9", "--out", (dir / "missing" / "x.csv").string()}).code == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("g2 and graph commands")
{
    CHECK(run({"g2", "15", "kappa"}).out == "computed 2, bound 2, tight\n");
    CHECK(run({"g2", "12", "components"}).out == "2\n");
    CHECK(run({"g2", "105", "kappa"}).out.find("bound 8") != std::string::npos);
    CHECK(run({"g2", "6", "export"}).out == "2 3\n3 4\n");

    auto r = run({"g2", "7", "kappa"});
    CHECK(r.code == 2);
    CHECK(r.err.find("G2 is empty") != std::string::npos);
    CHECK(run({"g2", "12", "bogus"}).code == 2);

    r = run({"graph", "3", "edges"});
    CHECK(r.out == "0 1\n0 2\n1 2\n");
    r = run({"graph", "12", "classes"});
    CHECK(nlohmann::json::parse(r.out).size() == 6);
}
