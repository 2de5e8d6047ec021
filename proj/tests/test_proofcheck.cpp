#include <doctest.h>

#include "oracles.hpp"
#include "volset/proofcheck.hpp"
#include "volset/random.hpp"

using namespace volset;

namespace {

void check_witnesses(const CoverageCertificate& c)
{
    const Field f(c.field);
    for (const auto& [t, rows] : c.witnesses) {
        REQUIRE(rows.size() == c.dim);
        REQUIRE(oracle::laplace_det(f, rows).value == t);
    }
}

std::uint64_t hypothesis_size(std::uint32_t q, std::size_t d)
{
    std::uint64_t n = d - 1;
    for (std::size_t i = 0; i + 1 < d; ++i)
        n *= q;
    return n;
}

} // namespace

TEST_CASE("verify_theorem on the full space and on hyperplanes")
{
    const auto f3 = Field::make(3);
    const auto full = verify_theorem(PointSet::full_space(f3, 3));
    CHECK(full.covered());
    CHECK(recheck(full));
    check_witnesses(full);
    CHECK(det(f3, Matrix::from_rows(full.witnesses.at(2))) == Elem{2});

    for (std::uint32_t q : {3u, 5u})
        for (std::size_t d : {2u, 3u, 4u}) {
            const auto f = Field::make(q);
            const auto c = verify_theorem(PointSet::coordinate_hyperplane(f, d));
            CHECK(c.exhaustive);
            CHECK(c.covered_values().elements == std::vector<Elem>{Field::zero()});
            CHECK(c.missing.size() == q - 1);
            // for d = 2 a line through 0 has exactly (d-1) q^{d-1} = q points, so
            // the size hypothesis holds and the claim fails
            CHECK(c.red_flag() == (d == 2));
        }
}

TEST_CASE("certificate values equal the volume set")
{
    Rng rng(123);
    for (auto [q, d] : {std::pair{3u, 3u}, std::pair{5u, 3u}, std::pair{3u, 4u}, std::pair{5u, 2u}}) {
        const auto f = Field::make(q);
        for (int i = 0; i < 12; ++i) {
            const auto e = random_subset(f, d, 1 + rng.below(2 * q), rng);
            const auto c = verify_theorem(e, SearchOptions{kDefaultBudget, rng.next(), 16});
            check_witnesses(c);
            REQUIRE(c.covered_values() == volume_set(e, VolumeMode::naive));
            if (!c.covered())
                REQUIRE(c.exhaustive);
        }
    }
}

TEST_CASE("coverage at the hypothesis size, q > d")
{
    Rng rng(2024);
    for (auto [q, d] : {std::pair{5u, 3u}, std::pair{7u, 3u}, std::pair{5u, 4u}}) {
        const auto f = Field::make(q);
        for (int i = 0; i < 5; ++i) {
            const auto e = random_subset(f, d, hypothesis_size(q, d), rng);
            const auto c = verify_theorem(e, SearchOptions{kDefaultBudget, rng.next(), 4096});
            CHECK(c.hypothesis_met);
            CHECK(c.in_proof_range);
            CHECK(c.covered());
            check_witnesses(c);
        }
    }
}

TEST_CASE("verify_theorem is deterministic per seed")
{
    const auto f = Field::make(5);
    Rng rng(1);
    const auto e = random_subset(f, 3, 30, rng);
    const auto a = verify_theorem(e, SearchOptions{kDefaultBudget, 9, 8});
    const auto b = verify_theorem(e, SearchOptions{kDefaultBudget, 9, 8});
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.evaluations == b.evaluations);

    // sweep-only certificates do not depend on the seed
    const auto c = verify_theorem(e, SearchOptions{kDefaultBudget, 1, 0});
    const auto d = verify_theorem(e, SearchOptions{kDefaultBudget, 2, 0});
    CHECK(c.witnesses == d.witnesses);
}

TEST_CASE("budget stops the search without false claims")
{
    const auto f = Field::make(5);
    const auto e = PointSet::coordinate_hyperplane(f, 4);
    const auto c = verify_theorem(e, SearchOptions{1000, 0, 10});
    CHECK(!c.exhaustive);
    CHECK(c.evaluations <= 1000);
    CHECK(c.covered_values().elements == std::vector<Elem>{Field::zero()});
}

TEST_CASE("recheck rejects a forged witness")
{
    const auto f = Field::make(5);
    auto c = verify_theorem(PointSet::full_space(f, 3));
    REQUIRE(recheck(c));
    std::swap(c.witnesses.at(1), c.witnesses.at(2));
    CHECK(!recheck(c));
}

TEST_CASE("heavy hyperplanes")
{
    const auto f3 = Field::make(3);
    const auto all = heavy_hyperplanes(PointSet::full_space(f3, 3));
    CHECK(all.threshold == 3);
    CHECK(all.members.size() == 13);
    for (const auto& m : all.members)
        CHECK(m.count == 9);

    const auto plane = PointSet::coordinate_hyperplane(f3, 3);
    const auto one = heavy_hyperplanes(plane);
    REQUIRE(one.members.size() == 1);
    CHECK(one.members[0].count == 9);
    CHECK(intersect_set(plane, one.members[0].plane).size() == 9);

    CHECK(default_heavy_threshold(5, 4) == 50);
    CHECK(default_heavy_threshold(3, 5) == 81);
    CHECK_THROWS(default_heavy_threshold(3, 2));

    Rng rng(4);
    const auto f5 = Field::make(5);
    for (int i = 0; i < 5; ++i) {
        const auto e = random_subset(f5, 3, 20 + rng.below(60), rng);
        const auto fam = heavy_hyperplanes(e);
        std::uint64_t recount = 0, expected = 0;
        for (const auto& m : fam.members) {
            REQUIRE(m.count > fam.threshold);
            recount += intersect_set(e, m.plane).size();
        }
        for (const auto& h : enumerate_subspaces(f5, 2, 3).members) {
            const auto n = intersect_set(e, h).size();
            if (n > fam.threshold)
                expected += n;
        }
        CHECK(fam.total_count() == recount);
        CHECK(recount == expected);
    }
}

TEST_CASE("base-case trace")
{
    const auto f5 = Field::make(5);
    const auto full = trace_base_case(PointSet::full_space(f5, 3));
    CHECK(full.passed());
    REQUIRE(full.coverage);
    CHECK(full.coverage->covered());

    // a plane through 0 has |E| = q^2 < 2q^2
    const auto plane = trace_base_case(PointSet::coordinate_hyperplane(f5, 3));
    CHECK(!plane.passed());
    CHECK(!plane.steps.front().pass);

    Rng rng(8);
    for (int i = 0; i < 3; ++i) {
        const auto e = random_subset(f5, 3, 51, rng);
        const auto tr = trace_base_case(e);
        for (const auto& s : tr.steps) {
            CAPTURE(s.label);
            CHECK(s.pass);
        }
    }
    CHECK_THROWS(trace_base_case(PointSet::full_space(f5, 4)));
}

TEST_CASE("induction trace")
{
    const auto f5 = Field::make(5);
    const auto tr = trace_induction_step(PointSet::full_space(f5, 4));
    CHECK(tr.passed());
    // 31 hyperplanes through each of the 624 nonzero vectors
    CHECK(tr.steps[2].lhs == Surd(31 * 624));
    CHECK(tr.steps[5].lhs == Surd(156));

    const auto f3 = Field::make(3);
    const auto small = trace_induction_step(PointSet::full_space(f3, 4));
    CHECK(!small.steps[1].pass); // q > d fails at q = 3, d = 4
}

TEST_CASE("make_step relations")
{
    CHECK(make_step("", 3, Relation::gt, 2).pass);
    CHECK(!make_step("", 2, Relation::gt, 2).pass);
    CHECK(make_step("", 2, Relation::ge, 2).pass);
    CHECK(make_step("", 2, Relation::eq, 2).pass);
    CHECK(make_step("", 1, Relation::lt, 2).pass);
    CHECK(make_step("", 2, Relation::le, 2).pass);
    CHECK(to_string(Relation::ge) == ">=");
}

TEST_CASE("scan")
{
    const auto f3 = Field::make(3);
    const std::vector<std::size_t> sizes{27};
    const auto full = scan_threshold(f3, 3, sizes, 3, 1);
    CHECK(full.rows[0].covered == 3);

    const std::vector<std::size_t> hs{9};
    const auto hyper = scan_threshold(f3, 3, hs, 4, 1, SubsetFamily::hyperplane);
    CHECK(hyper.rows[0].covered == 0);
    CHECK(hyper.rows[0].inconclusive == 0);

    const std::vector<std::size_t> mid{18};
    const auto a = scan_threshold(f3, 3, mid, 20, 42);
    const auto b = scan_threshold(f3, 3, mid, 20, 42);
    CHECK(a.rows[0].covered == b.rows[0].covered);
    CHECK(a.seed == 42);
    CHECK_THROWS(scan_threshold(f3, 3, std::vector<std::size_t>{28}, 1, 1));
    CHECK(parse_subset_family("hyperplane") == SubsetFamily::hyperplane);
    CHECK_THROWS(parse_subset_family("other"));
}

TEST_CASE("sharpness")
{
    for (std::uint32_t q : {3u, 5u})
        for (std::size_t d : {3u, 4u}) {
            const auto r = sharpness_demo(Field::make(q), d);
            CHECK(r.confirmed);
            CHECK(r.certificate.exhaustive);
        }
    const auto f3 = Field::make(3);
    CHECK(!sharpness_check(PointSet::full_space(f3, 3)).confirmed);
}

TEST_CASE("B* lower bound value")
{
    // q = 4 would be a perfect square; q = 9 collapses to a rational
    CHECK(bstar_lower_bound(9, 9) == Surd(Rational(0)));
    CHECK(bstar_lower_bound(9, 81) == Surd(Rational(9) * (Rational(1) - Rational(36, 108))));
}

TEST_CASE("over F_3 a set covers exactly when it spans")
{
    // swapping two rows negates the determinant, so vol(E) = -vol(E)
    const auto f = Field::make(3);
    Rng rng(33);
    for (std::size_t d : {2u, 3u, 4u})
        for (int i = 0; i < 40; ++i) {
            const auto e = random_subset(f, d, 1 + rng.below(std::min<std::uint64_t>(ambient_size(3, d), 3 * d)), rng);
            REQUIRE(verify_theorem(e).covered() == (rank(f, e.points()) == d));
        }
}
