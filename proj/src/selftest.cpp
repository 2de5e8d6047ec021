#include "volset/selftest.hpp"

#include "volset/grassmann.hpp"
#include "volset/pointset_io.hpp"
#include "volset/proofcheck.hpp"
#include "volset/random.hpp"
#include "volset/sets.hpp"

namespace volset {

namespace {

class Suite {
public:
    Suite(std::string name, std::uint32_t q, std::size_t d) { r_ = SuiteResult{std::move(name), q, d, 0, 0, {}}; }

    void check(bool ok, const std::string& what)
    {
        ++r_.checks;
        if (!ok) {
            ++r_.failures;
            if (r_.messages.size() < 5)
                r_.messages.push_back(what);
        }
    }

    SuiteResult result() && { return std::move(r_); }

private:
    SuiteResult r_;
};

SuiteResult volume_modes(const Field& f, std::size_t d, Rng& rng)
{
    Suite s("volume-modes", f.q(), d);
    for (int i = 0; i < 8; ++i) {
        const auto size = 1 + rng.below(std::min<std::uint64_t>(ambient_size(f.q(), d), 12));
        const auto e = random_subset(f, d, size, rng);
        const auto naive = volume_set(e, VolumeMode::naive);
        s.check(naive == volume_set(e, VolumeMode::wedge), "naive != wedge");
        s.check(naive == volume_set(e, VolumeMode::decomposed), "naive != decomposed");
    }
    return std::move(s).result();
}

SuiteResult vol_is_det(const Field& f, std::size_t d, Rng& rng)
{
    Suite s("vol-equals-det", f.q(), d);
    for (int i = 0; i < 200; ++i) {
        std::vector<Vector> rows;
        for (std::size_t j = 0; j < d; ++j)
            rows.push_back(random_vector(f, d, rng));
        s.check(vol(f, rows) == det(f, Matrix::from_rows(rows)), "vol != det");
        // the wedge is orthogonal to each of its inputs
        if (d >= 2) {
            const auto w = wedge(f, std::span(rows).subspan(1));
            for (std::size_t j = 1; j < d; ++j)
                s.check(dot(f, rows[j], w) == Field::zero(), "wedge not orthogonal to an input");
        }
    }
    return std::move(s).result();
}

SuiteResult grassmann_counts(const Field& f, std::size_t d)
{
    Suite s("grassmann-counts", f.q(), d);
    for (std::size_t k = 0; k <= d; ++k) {
        const auto fam = enumerate_subspaces(f, k, d);
        s.check(fam.members.size() == gaussian_binomial(k, d, f.q()), "enumeration size != Gaussian binomial");
    }
    const auto hyper = enumerate_subspaces(f, d - 1, d);
    const auto per_vector = gaussian_binomial(d - 2, d - 1, f.q());
    for (const auto& x : PointSet::full_space(f, d)) {
        if (is_zero(x))
            continue;
        std::uint64_t n = 0;
        for (const auto& h : hyper.members)
            n += h.contains(f, x);
        s.check(n == per_vector, "hyperplanes through a nonzero vector");
    }
    return std::move(s).result();
}

SuiteResult decomposition(const Field& f, std::size_t d, Rng& rng)
{
    Suite s("cross-decomposition", f.q(), d);
    for (int i = 0; i < 6; ++i) {
        const auto e = random_subset(f, d, 1 + rng.below(3 * f.q()), rng);
        const auto brute = cross_product_set(e, CrossMode::brute);
        const auto dec = cross_product_set(e, CrossMode::decomposed);
        std::size_t sum = 0;
        for (const auto& t : hyperplane_decomposition(e))
            sum += t.dstar.size();
        s.check(brute == dec, "F*_E brute != decomposed");
        s.check(brute.size() == sum, "|F*_E| != sum of |D*|");
    }
    return std::move(s).result();
}

SuiteResult incidence(const Field& f, std::size_t d, Rng& rng)
{
    Suite s("incidence-bound", f.q(), d);
    for (int i = 0; i < 10; ++i) {
        const auto e = random_subset(f, d, 1 + rng.below(ambient_size(f.q(), d)), rng);
        const auto g = random_subset(f, d, 1 + rng.below(ambient_size(f.q(), d)), rng);
        const BilinearForm b = i % 2 ? BilinearForm(f, random_invertible(f, d, rng)) : BilinearForm::dot_form(f, d);
        const auto table = incidence_count(e, g, b);
        s.check(table.total() == e.size() * g.size(), "counts do not sum to |E||F|");
        for (std::uint32_t t = 1; t < f.q(); ++t)
            s.check(table.deviation_bound_holds(Elem{t}), "incidence deviation bound");
    }
    return std::move(s).result();
}

SuiteResult sharpness(const Field& f, std::size_t d)
{
    Suite s("sharpness", f.q(), d);
    s.check(sharpness_demo(f, d).confirmed, "coordinate hyperplane has a nonzero volume");
    return std::move(s).result();
}

SuiteResult coverage(const Field& f, std::size_t d, Rng& rng)
{
    Suite s("coverage", f.q(), d);
    std::uint64_t need = d - 1;
    for (std::size_t i = 0; i + 1 < d; ++i)
        need *= f.q();
    for (int i = 0; i < 4; ++i) {
        const auto e = random_subset(f, d, need, rng);
        const auto cert = verify_theorem(e, SearchOptions{kDefaultBudget, rng.next(), 256});
        s.check(recheck(cert), "witness recheck");
        if (d >= 3 && f.q() > d)
            s.check(cert.covered(), "vol(E) != F_q at the hypothesis size");
        s.check(cert.covered_values() == volume_set(e, VolumeMode::wedge), "certificate disagrees with vol(E)");
    }
    return std::move(s).result();
}

SuiteResult round_trip(const Field& f, std::size_t d, Rng& rng)
{
    Suite s("file-round-trip", f.q(), d);
    for (int i = 0; i < 5; ++i) {
        const auto e = random_subset(f, d, rng.below(ambient_size(f.q(), d) + 1), rng);
        const auto text = emit_pointset(e);
        const auto back = parse_pointset(text);
        s.check(back == e, "parse(emit(E)) != E");
        s.check(emit_pointset(back) == text, "emit(parse(text)) != text");
    }
    return std::move(s).result();
}

SuiteResult bstar_bound(const Field& f, Rng& rng)
{
    Suite s("bstar-bound", f.q(), 2);
    for (int i = 0; i < 10; ++i) {
        const std::uint64_t n = 1 + rng.below(f.q() * f.q());
        const auto e = random_subset(f, 2, n, rng);
        const Surd bound = bstar_lower_bound(f.q(), n);
        const auto size = bstar(e, BilinearForm::dot_form(f, 2)).size();
        s.check((Surd(Rational(size)) - bound).sign() >= 0, "|B*(E)| below bound");
    }
    return std::move(s).result();
}

} // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed)
{
    std::vector<SuiteResult> out;
    std::uint64_t stream = 0;
    for (std::uint32_t q : {3u, 5u}) {
        const Field f = Field::make(q);
        for (std::size_t d : {2u, 3u}) {
            Rng rng(derive_seed(seed, stream++));
            out.push_back(volume_modes(f, d, rng));
            out.push_back(vol_is_det(f, d, rng));
            out.push_back(grassmann_counts(f, d));
            out.push_back(decomposition(f, d, rng));
            out.push_back(incidence(f, d, rng));
            out.push_back(sharpness(f, d));
            out.push_back(coverage(f, d, rng));
            out.push_back(round_trip(f, d, rng));
            if (d == 2)
                out.push_back(bstar_bound(f, rng));
        }
    }
    return out;
}

} // namespace volset
