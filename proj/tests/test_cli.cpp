#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "volset/cli.hpp"
#include "volset/pointset_io.hpp"

using namespace volset;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int s = run_command(args, out, err);
    return {s, out.str(), err.str()};
}

nlohmann::json result_of(const Run& r)
{
    return nlohmann::json::parse(r.out).at("result");
}

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("volset_cli_" + std::to_string(::getpid())))
    {
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

} // namespace

TEST_CASE("sharp and grass examples")
{
    const auto s = run({"sharp", "--p", "3", "--k", "1", "--d", "3"});
    REQUIRE(s.status == kExitOk);
    CHECK(result_of(s).at("vol") == nlohmann::json::array({0}));

    const auto g = run({"grass", "--count", "--k", "2", "--d", "3", "--p", "3"});
    REQUIRE(g.status == kExitOk);
    CHECK(result_of(g).at("count") == 13);

    const auto gl = run({"grass", "--k", "1", "--d", "2", "--p", "3", "--format", "csv"});
    REQUIRE(gl.status == kExitOk);
    CHECK(std::count(gl.out.begin(), gl.out.end(), '\n') == 5);
}

TEST_CASE("nu on files")
{
    TempDir dir;
    const auto path = dir.file("f32.txt");
    REQUIRE(run({"gen", "--p", "3", "--d", "2", "--full", "--out", path}).status == kExitOk);
    const auto r = run({"nu", "--dot", "--t", "1", path});
    REQUIRE(r.status == kExitOk);
    CHECK(result_of(r).at("nu") == 24);
    const auto r2 = run({"nu", "--dot", "--t", "1", path, path});
    CHECK(result_of(r2).at("nu") == 24);

    const auto csv = run({"nu", "--form", "0 1 1 0", "--format", "csv", path});
    REQUIRE(csv.status == kExitOk);
    CHECK(csv.out.rfind("t,nu,scaled_deviation,bound_holds\n", 0) == 0);
    CHECK(run({"nu", "--form", "1 1 1 1", path}).status == kExitUsage);
    CHECK(run({"nu", path}).status == kExitUsage);
}

TEST_CASE("reports are reproducible")
{
    const std::vector<std::string> args{"verify", "--p", "5", "--d", "3", "--random", "50", "--seed", "17"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.status == kExitOk);
    CHECK(a.out == b.out);
    CHECK(result_of(a).at("covered") == true);

    const std::vector<std::string> scan{"scan", "--p", "3", "--d", "3", "--sizes", "9,18", "--trials", "5", "--seed", "42"};
    const auto s1 = run(scan);
    CHECK(s1.out == run(scan).out);
    CHECK(nlohmann::json::parse(s1.out).at("parameters").at("seed") == 42);
    CHECK(result_of(s1).at("seed") == 42);

    const auto t = run({"volset", "--p", "3", "--d", "3", "--random", "5", "--timing"});
    CHECK(nlohmann::json::parse(t.out).contains("timing"));
    CHECK(!nlohmann::json::parse(a.out).contains("timing"));
}

TEST_CASE("witness tuples decode to determinants")
{
    const auto r = run({"verify", "--p", "3", "--d", "3", "--full"});
    REQUIRE(r.status == kExitOk);
    const auto f = Field::make(3);
    const auto result = result_of(r);
    for (const auto& w : result.at("witnesses")) {
        std::vector<Vector> rows;
        for (const auto& row : w.at("rows")) {
            Vector v;
            for (const auto& x : row)
                v.push_back(Elem{x.get<std::uint32_t>()});
            rows.push_back(v);
        }
        CHECK(det(f, Matrix::from_rows(rows)).value == w.at("t").get<std::uint32_t>());
    }
}

TEST_CASE("exit codes")
{
    CHECK(run({}).status == kExitUsage);
    CHECK(run({"nosuch"}).status == kExitUsage);
    CHECK(run({"volset"}).status == kExitUsage); // missing input
    CHECK(run({"volset", "--p", "2", "--random", "3"}).status == kExitUsage);
    CHECK(run({"volset", "--p", "5", "--d", "4", "--full", "--mode", "naive", "--budget", "1000"}).status ==
          kExitBudget);
    CHECK(run({"trace-base", "--p", "5", "--d", "3", "--random", "20"}).status == kExitFailed);
    CHECK(run({"trace-base", "--p", "5", "--d", "3", "--random", "51", "--seed", "3"}).status == kExitOk);
    CHECK(run({"trace-induct", "--p", "5", "--d", "4", "--full"}).status == kExitOk);
    // at d = 2 the line through 0 meets the size hypothesis
    CHECK(run({"verify", "--p", "3", "--d", "2", "--random", "3", "--seed", "0"}).status != kExitUsage);
    CHECK(run({"sharp", "--p", "3", "--d", "3", "--full"}).status == kExitFailed);
    CHECK(run({"volset", "--random", "3", "--format", "csv"}).status == kExitUsage);
    CHECK(run({"volset", "--help"}).status == kExitOk);
}

TEST_CASE("bstar command")
{
    const auto r = run({"bstar", "--dot", "--p", "3", "--d", "2", "--full"});
    REQUIRE(r.status == kExitOk);
    CHECK(result_of(r).at("bstar") == nlohmann::json::array({1, 2}));
    CHECK(run({"bstar", "--dot", "--p", "3", "--d", "3", "--full"}).status == kExitUsage);
}

TEST_CASE("file round trip through the tool")
{
    TempDir dir;
    const auto a = dir.file("a.txt");
    REQUIRE(run({"gen", "--p", "3", "--k", "2", "--d", "3", "--random", "40", "--seed", "5", "--out", a}).status == 0);
    std::ifstream in(a);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(emit_pointset(parse_pointset(text.str())) == text.str());

    // volset over the file equals volset over the same seeded set
    const auto from_file = run({"volset", a});
    const auto direct = run({"volset", "--p", "3", "--k", "2", "--d", "3", "--random", "40", "--seed", "5"});
    CHECK(result_of(from_file) == result_of(direct));
}

TEST_CASE("selftest")
{
    const auto r = run({"selftest"});
    CHECK(r.status == kExitOk);
    CHECK(result_of(r).at("passed") == true);
}
