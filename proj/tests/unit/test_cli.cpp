#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

using hitchin::NewtonPolygon;
using hitchin::Partition;
using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = hitchin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("describe the sl_4 (3,1) parabolic") {
    const auto r = run({"describe", "--type", "A", "--rank", "3", "--blocks", "3,1"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["d"] == Json::array({2, 3, 4}));
    CHECK(j["m"] == Json::array({1, 2, 3}));
    CHECK(j["exponents"] == Json::array({-1, -1, -1}));
    CHECK(j["status"] == "pass");
}

TEST_CASE("newton on the D5 example") {
    const auto r = run({"newton", "--type", "D", "--rank", "5", "--marked-roots", "4,5"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["delta"] == Json::array({3, 3, 2, 2}));
    CHECK(j["relevant_pairs"] == Json::parse("[[2,4],[3,2],[4,0]]"));
    CHECK(j["singular"] == true);
    CHECK(j["components"]["components"] == 1);
}

TEST_CASE("identical configuration gives byte-identical reports") {
    const std::vector<std::string> args{"verify", "--type", "G2", "--parabolic", "borel", "--trials", "40", "--seed", "7"};
    auto with_threads = args;
    with_threads.insert(with_threads.end(), {"--threads", "3"});
    const auto a = run(args);
    const auto b = run(args);
    const auto c = run(with_threads);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("config errors exit with status 2 and name the field") {
    auto r = run({"verify", "--type", "A", "--rank", "3", "--blocks", "3,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--seed") != std::string::npos);

    r = run({"describe", "--type", "A", "--rank", "3", "--blocks", "3,1", "--marked-roots", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("parabolic") != std::string::npos);

    r = run({"describe", "--type", "A", "--rank", "3", "--blocks", "3,x"});
    CHECK(r.code == 2);
    CHECK(r.err.find("blocks") != std::string::npos);

    r = run({"describe", "--type", "E", "--rank", "6", "--marked-roots", "1"});
    CHECK(r.code == 2);

    r = run({"describe", "--type", "B", "--rank", "3", "--blocks", "1,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("blocks") != std::string::npos);

    r = run({"codim", "--type", "A", "--rank", "3", "--blocks", "3,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("type") != std::string::npos);

    r = run({"audit-dim", "--type", "A", "--rank", "3", "--blocks", "3,1", "--genus", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("genus") != std::string::npos);

    r = run({"witness", "--type", "A", "--rank", "3", "--blocks", "3,1", "--seed", "1", "--targets", "-2,-1,-1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("targets") != std::string::npos);

    r = run({"describe", "--type", "A", "--rank", "3", "--blocks", "3,1", "--format", "svg"});
    CHECK(r.code == 2);
    CHECK(r.err.find("format") != std::string::npos);

    CHECK(run({}).code == 2);
}

TEST_CASE("assertion failures exit with status 1") {
    const auto r = run({"verify", "--type", "A", "--rank", "3", "--blocks", "3,1", "--seed", "1", "--trials", "20",
                        "--bounds", "0,0,0"});
    CHECK(r.code == 1);
    CHECK(Json::parse(r.out)["status"] == "fail");
}

TEST_CASE("other subcommands") {
    auto r = run({"witness", "--type", "A", "--rank", "3", "--blocks", "3,1", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["method"] == "companion");

    r = run({"trace-check", "--type", "A", "--rank", "3", "--blocks", "3,1"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["val_trace_a4"] == -2);

    r = run({"components", "--type", "D", "--rank", "5", "--marked-roots", "4,5"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["report"]["singular"] == true);

    r = run({"codim", "--type", "D", "--rank", "5", "--marked-roots", "4,5"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["sum_m"] == 10);

    r = run({"audit-dim", "--type", "C", "--rank", "3", "--blocks", "1,1;1", "--genus", "3"});
    CHECK(r.code == 0);

    r = run({"describe", "--type", "D", "--rank", "5", "--marked-roots", "4,5", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("image: newton") != std::string::npos);
}

TEST_CASE("output file and svg file") {
    const std::string report = "test_cli_report.json";
    const std::string svg = "test_cli_plot.svg";
    const auto r = run({"newton", "--type", "D", "--rank", "5", "--marked-roots", "4,5", "--output", report, "--svg", svg});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream rf(report);
    std::stringstream rs;
    rs << rf.rdbuf();
    CHECK(Json::parse(rs.str())["svg_path"] == svg);
    std::ifstream sf(svg);
    std::stringstream ss;
    ss << sf.rdbuf();
    CHECK(ss.str().rfind("<?xml", 0) == 0);
    std::remove(report.c_str());
    std::remove(svg.c_str());
}

TEST_CASE("svg shading matches the polygon on every lattice point") {
    for (const auto& parts : std::vector<std::vector<int>>{{3, 3, 2, 2}, {7, 1}, {2, 2, 1, 1}, {5, 3, 1, 1}}) {
        const NewtonPolygon polygon(Partition::from(parts));
        const std::string svg = hitchin::cli::newton_svg(polygon);
        CHECK(svg == hitchin::cli::newton_svg(polygon));
        const std::regex circle(R"re(<circle class="(admissible|excluded)" data-alpha="(\d+)" data-beta="(\d+)")re");
        int seen = 0;
        for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it) {
            const bool shaded = (*it)[1] == "admissible";
            const int a = std::stoi((*it)[2]);
            const int b = std::stoi((*it)[3]);
            CHECK(shaded == polygon.allows(a, b));
            ++seen;
        }
        CHECK(seen == (polygon.parts() + 2) * (polygon.degree() + 1));
    }
}
