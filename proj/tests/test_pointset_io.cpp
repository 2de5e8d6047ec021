#include <doctest.h>

#include <filesystem>

#include "volset/pointset_io.hpp"
#include "volset/random.hpp"

using namespace volset;

TEST_CASE("parse a small file")
{
    const auto e = parse_pointset("volset-pointset v1\np=5 k=1 d=3\n1 2 3\n");
    CHECK(e.field().q() == 5);
    CHECK(e.dim() == 3);
    REQUIRE(e.size() == 1);
    CHECK(e[0] == Vector{Elem{1}, Elem{2}, Elem{3}});
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_WITH_AS(parse_pointset("volset-pointset v1\np=2 k=1 d=3\n"), doctest::Contains("even characteristic"),
                         FormatError);
    CHECK_THROWS_WITH_AS(parse_pointset("volset-pointset v2\np=3 k=1 d=3\n"), doctest::Contains("line 1"), FormatError);
    CHECK_THROWS_WITH_AS(parse_pointset("volset-pointset v1\np=3 k=2 d=2 mod=2,0,1\n"),
                         doctest::Contains("reducible"), FormatError);
    CHECK_THROWS_WITH_AS(parse_pointset("volset-pointset v1\np=3 k=1 d=2\n0 1\n1 3\n"),
                         doctest::Contains("line 4"), FormatError);
    CHECK_THROWS_WITH_AS(parse_pointset("volset-pointset v1\np=3 k=1 d=2\n0 1 2\n"),
                         doctest::Contains("expected 2 coordinates"), FormatError);
    CHECK_THROWS_WITH_AS(parse_pointset("volset-pointset v1\np=3 k=1 d=2\n0 1\n2 2\n0 1\n"),
                         doctest::Contains("line 5: duplicate point (first on line 3)"), FormatError);
    CHECK_THROWS_AS(parse_pointset("volset-pointset v1\np=3 k=1\n"), FormatError);
    CHECK_THROWS_AS(parse_pointset("volset-pointset v1\np=3 k=1 d=2\n0 x\n"), FormatError);
    CHECK_THROWS_AS(parse_pointset("volset-pointset v1\np=3 k=1 d=2\n0 -1\n"), FormatError);
    CHECK_THROWS_AS(parse_pointset("volset-pointset v1\np=3 k=1 d=2 mod=0,1\n"), FormatError);
    CHECK_THROWS_AS(parse_pointset(""), FormatError);
}

TEST_CASE("emit is canonical and parse inverts it")
{
    Rng rng(6);
    for (auto [p, k, d] : {std::tuple{3u, 1u, 3u}, std::tuple{5u, 1u, 2u}, std::tuple{3u, 2u, 3u}, std::tuple{7u, 1u, 4u}}) {
        const auto f = Field::make(p, k);
        for (int i = 0; i < 10; ++i) {
            const auto e = random_subset(f, d, rng.below(std::min<std::uint64_t>(40, ambient_size(f.q(), d))), rng);
            const auto text = emit_pointset(e);
            const auto back = parse_pointset(text);
            REQUIRE(back == e);
            REQUIRE(emit_pointset(back) == text);
        }
    }
    const auto f9 = Field::make(3, 2);
    CHECK(emit_pointset(PointSet(f9, 1, {{Elem{4}}})) == "volset-pointset v1\np=3 k=2 d=1 mod=1,0,1\n4\n");
}

TEST_CASE("emit(parse(text)) canonicalizes")
{
    const std::string messy = "volset-pointset v1\r\np=3  k=1 d=2\n\n# comment\n 2 1\n0\t1  \n";
    const auto e = parse_pointset(messy);
    CHECK(emit_pointset(e) == "volset-pointset v1\np=3 k=1 d=2\n0 1\n2 1\n");
}

TEST_CASE("file helpers")
{
    const auto dir = std::filesystem::temp_directory_path() / "volset_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "e.txt";
    const auto f = Field::make(5);
    const auto e = PointSet::coordinate_hyperplane(f, 3);
    write_pointset(path, e);
    CHECK(read_pointset(path) == e);
    CHECK_THROWS(read_pointset(dir / "missing.txt"));
    std::filesystem::remove_all(dir);
}
