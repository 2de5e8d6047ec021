#include "volset/proofcheck.hpp"

#include <algorithm>
#include <array>

#include "volset/kernels.hpp"
#include "volset/random.hpp"

namespace volset {

namespace {

BigInt ipow(std::uint64_t base, std::size_t e)
{
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= base;
    return r;
}

Surd num(const BigInt& v)
{
    return Surd(Rational(v));
}

Surd num(std::uint64_t v)
{
    return Surd(Rational(BigInt(v)));
}

// q^{3/2}
Surd q_three_halves(std::uint32_t q)
{
    return Surd(0, Rational(q), q);
}

} // namespace

Surd bstar_lower_bound(std::uint32_t q, std::uint64_t n)
{
    const Surd s = q_three_halves(q);
    return num(std::uint64_t(q)) * (Surd(1) - (num(std::uint64_t(q)) + s) / (num(n) + s));
}

ScalarSet CoverageCertificate::covered_values() const
{
    ScalarSet out;
    for (const auto& [t, tuple] : witnesses)
        out.elements.push_back(Elem{t});
    return out;
}

CoverageCertificate verify_theorem(const PointSet& e, const SearchOptions& options)
{
    const Field& f = e.field();
    const std::size_t d = e.dim();
    const std::uint32_t q = f.q();
    const auto& pts = e.points();

    CoverageCertificate cert;
    cert.field = f.spec();
    cert.dim = d;
    cert.set_size = e.size();
    cert.seed = options.seed;
    cert.hypothesis_met = BigInt(e.size()) >= BigInt(d - 1) * ipow(q, d - 1);
    cert.in_proof_range = q > d;

    std::vector<std::uint8_t> have(q, 0);
    std::uint32_t found = 0;

    auto finish = [&] {
        for (std::uint32_t t = 0; t < q; ++t)
            if (!have[t])
                cert.missing.push_back(Elem{t});
    };

    if (pts.empty()) {
        cert.exhaustive = true;
        finish();
        return cert;
    }
    if (d == 1) {
        for (const auto& x : pts) {
            have[x[0].value] = 1;
            cert.witnesses[x[0].value] = {x};
        }
        cert.exhaustive = true;
        finish();
        return cert;
    }

    // identical rows
    cert.witnesses[0] = std::vector<Vector>(d, pts.front());
    have[0] = 1;
    found = 1;

    const std::size_t m = d - 1;
    const std::uint64_t n = pts.size();

    auto record = [&](const Vector& w, std::span<const std::size_t> idx) {
        for (const auto& x : pts) {
            const Elem t = dot(f, x, w);
            if (have[t.value])
                continue;
            have[t.value] = 1;
            ++found;
            std::vector<Vector> tuple{x};
            for (auto i : idx)
                tuple.push_back(pts[i]);
            cert.witnesses[t.value] = std::move(tuple);
            if (found == q)
                return;
        }
    };

    const auto packed = kernels::pack(pts, d);
    const std::uint64_t codes = ambient_size(q, d);
    std::vector<std::uint8_t> seen(codes, 0);
    seen[0] = 1; // the zero wedge only yields volume 0

    std::array<std::size_t, detail::kMaxDim> idx{};
    std::array<Elem, detail::kMaxDim * detail::kMaxDim> rows{};
    Vector w(d);

    Rng rng(options.seed);
    for (std::uint64_t s = 0; s < options.samples && found < q && cert.evaluations < options.budget; ++s) {
        for (std::size_t j = 0; j < m; ++j) {
            idx[j] = static_cast<std::size_t>(rng.below(n));
            std::copy_n(packed.row(idx[j]), d, rows.begin() + j * d);
        }
        detail::wedge_into(f, rows.data(), d, w.data());
        ++cert.evaluations;
        const auto code = encode_point(q, w);
        if (!seen[code]) {
            seen[code] = 1;
            record(w, std::span(idx.data(), m));
        }
    }

    // Deterministic sweep in rank order; within a chunk each new wedge value
    // is attributed to its smallest-rank tuple.
    const std::uint64_t total = kernels::tuple_count(n, m);
    constexpr std::uint64_t kChunk = 1u << 18;
    std::vector<std::uint64_t> first(codes, UINT64_MAX);
    std::uint64_t begin = 0;
    while (found < q && begin < total && cert.evaluations < options.budget) {
        const std::uint64_t end = std::min({total, begin + kChunk, begin + (options.budget - cert.evaluations)});
        kernels::wedge_first_rank(f, packed, begin, end, first);
        cert.evaluations += end - begin;
        begin = end;
        for (std::uint64_t code = 1; code < codes && found < q; ++code) {
            if (first[code] == UINT64_MAX || seen[code])
                continue;
            seen[code] = 1;
            kernels::decode_rank(first[code], n, std::span(idx.data(), m));
            record(decode_point(q, d, code), std::span(idx.data(), m));
        }
    }
    cert.exhaustive = begin >= total;
    finish();

    if (!recheck(cert))
        throw std::logic_error("verify_theorem: witness failed the determinant recheck");
    return cert;
}

bool recheck(const CoverageCertificate& cert)
{
    const Field f(cert.field);
    for (const auto& [t, tuple] : cert.witnesses) {
        if (tuple.size() != cert.dim)
            return false;
        if (det(f, Matrix::from_rows(tuple)) != Elem{t})
            return false;
    }
    for (Elem t : cert.missing)
        if (cert.witnesses.count(t.value))
            return false;
    return cert.witnesses.size() + cert.missing.size() == f.q();
}

std::uint64_t HeavyFamily::total_count() const
{
    std::uint64_t s = 0;
    for (const auto& m : members)
        s += m.count;
    return s;
}

std::uint64_t default_heavy_threshold(std::uint32_t q, std::size_t d)
{
    if (d < 3)
        throw std::invalid_argument("heavy hyperplane threshold needs d >= 3");
    if (d == 3)
        return q;
    return static_cast<std::uint64_t>((d - 2) * ipow(q, d - 2));
}

HeavyFamily heavy_hyperplanes(const PointSet& e, std::optional<std::uint64_t> threshold)
{
    const Field& f = e.field();
    const std::size_t d = e.dim();
    HeavyFamily out;
    out.threshold = threshold ? *threshold : default_heavy_threshold(f.q(), d);
    const auto family = enumerate_subspaces(f, d - 1, d);
    std::vector<std::size_t> counts(family.members.size(), 0);

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < family.members.size(); ++i)
        counts[i] = intersect_set(e, family.members[i]).size();

    for (std::size_t i = 0; i < family.members.size(); ++i)
        if (counts[i] > out.threshold)
            out.members.push_back(HeavyMember{family.members[i], counts[i]});
    return out;
}

std::string to_string(Relation r)
{
    switch (r) {
    case Relation::eq:
        return "=";
    case Relation::gt:
        return ">";
    case Relation::ge:
        return ">=";
    case Relation::lt:
        return "<";
    case Relation::le:
        return "<=";
    }
    return "?";
}

TraceStep make_step(std::string label, Surd lhs, Relation rel, Surd rhs)
{
    const int s = (lhs - rhs).sign();
    bool pass = false;
    switch (rel) {
    case Relation::eq:
        pass = s == 0;
        break;
    case Relation::gt:
        pass = s > 0;
        break;
    case Relation::ge:
        pass = s >= 0;
        break;
    case Relation::lt:
        pass = s < 0;
        break;
    case Relation::le:
        pass = s <= 0;
        break;
    }
    return TraceStep{std::move(label), std::move(lhs), rel, std::move(rhs), pass};
}

bool ProofTrace::passed() const
{
    return std::all_of(steps.begin(), steps.end(), [](const TraceStep& s) { return s.pass; });
}

ProofTrace trace_base_case(const PointSet& e, const SearchOptions& options)
{
    if (e.dim() != 3)
        throw std::invalid_argument("trace_base_case needs d = 3");
    const Field& f = e.field();
    const std::uint32_t q = f.q();
    const Surd Q = num(std::uint64_t(q));
    const std::uint64_t size = e.size();
    const bool has_zero = e.contains_zero();

    ProofTrace tr;
    tr.name = "base-case";
    tr.notes.push_back("the coverage hypothesis is |E| >= 2q^2; this chain assumes |E| > 2q^2");
    tr.notes.push_back("zero vector lies in every plane; incidence sums count it once per plane");

    tr.steps.push_back(make_step("|E| > 2q^2", num(size), Relation::gt, num(2 * ipow(q, 2))));

    const auto terms = hyperplane_decomposition(e, options.budget);
    const std::uint64_t planes = terms.size();
    std::uint64_t incidences = 0, heavy_incidences = 0, heavy = 0, heavy_bound_ok = 0;
    std::uint64_t dstar_heavy = 0, dstar_all = 0;
    Surd jensen_lhs = 0;
    const Surd s = q_three_halves(q);
    auto f_of = [&](std::uint64_t x) { return Surd(1) - (Q + s) / (num(x) + s); };

    for (const auto& t : terms) {
        incidences += t.intersection;
        dstar_all += t.dstar.size();
        if (t.intersection > q) {
            ++heavy;
            heavy_incidences += t.intersection;
            dstar_heavy += t.dstar.size();
            if (num(std::uint64_t(t.dstar.size())) >= bstar_lower_bound(q, t.intersection))
                ++heavy_bound_ok;
            jensen_lhs = jensen_lhs + Q * f_of(t.intersection);
        }
    }
    const std::uint64_t nonzero = size - (has_zero ? 1 : 0);

    tr.steps.push_back(make_step("sum_H |E cap H| = (q+1)|E\\{0}| + [0 in E]|G(2,3)|", num(incidences), Relation::eq,
                                 num(BigInt(q + 1) * nonzero + (has_zero ? planes : 0))));
    tr.steps.push_back(make_step("sum_heavy |E cap H| > (q+1)|E| - q(q^2+q+1)", num(heavy_incidences), Relation::gt,
                                 num(BigInt(q + 1) * size) - num(BigInt(q) * (ipow(q, 2) + q + 1))));
    tr.steps.push_back(make_step("sum_heavy |E cap H| > q^3", num(heavy_incidences), Relation::gt, num(ipow(q, 3))));
    tr.steps.push_back(make_step("heavy planes meeting |D*| >= q(1 - (q+q^{3/2})/(|E cap H|+q^{3/2}))",
                                 num(heavy_bound_ok), Relation::eq, num(heavy)));
    tr.steps.push_back(make_step("sum_heavy |D*_{E cap H,2}| > q^2(1 - q^{-1/2})", num(dstar_heavy), Relation::gt,
                                 num(ipow(q, 2)) - s));
    tr.steps.push_back(make_step("sum_heavy |D*_{E cap H,2}| > q^2/2", num(dstar_heavy), Relation::gt,
                                 Surd(Rational(ipow(q, 2), 2))));

    try {
        const auto brute = cross_product_set(e, CrossMode::brute, options.budget);
        tr.steps.push_back(make_step("|F*_E| (wedge enumeration) = sum_H |D*_{E cap H,2}|", num(brute.size()),
                                     Relation::eq, num(dstar_all)));
    } catch (const BudgetExceeded& ex) {
        tr.notes.push_back(std::string("wedge enumeration of F*_E skipped: ") + ex.what());
    }
    tr.steps.push_back(
        make_step("|F*_E| > q^2/2", num(dstar_all), Relation::gt, Surd(Rational(ipow(q, 2), 2))));
    tr.steps.push_back(make_step("|E| |F*_E| > q^4", num(BigInt(size) * dstar_all), Relation::gt, num(ipow(q, 4))));

    auto cert = verify_theorem(e, options);
    tr.steps.push_back(make_step("|vol(E)| = q", num(std::uint64_t(cert.witnesses.size())), Relation::eq, Q));
    tr.coverage = std::move(cert);

    tr.observations.push_back(make_step("heavy planes |G^E_(2,3)|", num(heavy), Relation::gt, 0));
    tr.observations.push_back(make_step("q sum_heavy f(|E cap H|) >= q (sum_heavy |E cap H| / q^2) f(q^2)",
                                        jensen_lhs, Relation::ge,
                                        Q * Surd(Rational(BigInt(heavy_incidences), ipow(q, 2))) *
                                            f_of(std::uint64_t(q) * q)));
    tr.observations.push_back(
        make_step("q^2(1 - q^{-1/2}) > q^2/2", num(ipow(q, 2)) - s, Relation::gt, Surd(Rational(ipow(q, 2), 2))));
    return tr;
}

ProofTrace trace_induction_step(const PointSet& e, const SearchOptions& options)
{
    const std::size_t d = e.dim();
    if (d < 4)
        throw std::invalid_argument("trace_induction_step needs d >= 4");
    const Field& f = e.field();
    const std::uint32_t q = f.q();
    const Surd Q = num(std::uint64_t(q));
    const std::uint64_t size = e.size();
    const bool has_zero = e.contains_zero();

    ProofTrace tr;
    tr.name = "induction-step";
    tr.notes.push_back("incidence identity counts E\\{0}; the zero vector lies in every hyperplane");

    tr.steps.push_back(make_step("|E| > (d-1) q^{d-1}", num(size), Relation::gt, num((d - 1) * ipow(q, d - 1))));
    tr.steps.push_back(make_step("q > d", Q, Relation::gt, num(std::uint64_t(d))));

    const auto terms = hyperplane_decomposition(e, options.budget);
    const std::uint64_t hyperplanes = terms.size();
    const BigInt per_vector = (ipow(q, d - 1) - 1) / (q - 1);
    const std::uint64_t threshold = default_heavy_threshold(q, d);

    std::uint64_t incidences = 0, heavy = 0, heavy_incidences = 0, heavy_full = 0, dstar_all = 0;
    std::size_t largest = 0;
    for (const auto& t : terms) {
        incidences += t.intersection;
        dstar_all += t.dstar.size();
        largest = std::max(largest, t.intersection);
        if (t.intersection > threshold) {
            ++heavy;
            heavy_incidences += t.intersection;
            if (t.dstar.size() == q - 1)
                ++heavy_full;
        }
    }
    const std::uint64_t nonzero = size - (has_zero ? 1 : 0);
    const std::uint64_t nonzero_incidences = incidences - (has_zero ? hyperplanes : 0);

    tr.steps.push_back(make_step("sum_H |(E\\{0}) cap H| = ((q^{d-1}-1)/(q-1)) |E\\{0}|", num(nonzero_incidences),
                                 Relation::eq, num(per_vector * nonzero)));
    const BigInt scaled_rhs =
        (ipow(q, d - 1) - 1) * size - BigInt(d - 2) * ipow(q, d - 2) * (ipow(q, d) - 1);
    tr.steps.push_back(make_step("(q-1) sum_heavy |E cap H| > (q^{d-1}-1)|E| - (d-2)q^{d-2}(q^d-1)",
                                 num(BigInt(q - 1) * heavy_incidences), Relation::gt, num(scaled_rhs)));
    tr.steps.push_back(make_step("sum_heavy |E cap H| > q^d", num(heavy_incidences), Relation::gt, num(ipow(q, d))));
    tr.steps.push_back(make_step("|G^E_(d-1,d)| > q", num(heavy), Relation::gt, Q));
    tr.steps.push_back(
        make_step("heavy hyperplanes with |D*_{E cap H,d-1}| = q-1", num(heavy_full), Relation::eq, num(heavy)));
    tr.steps.push_back(make_step("|F*_E| = sum_H |D*| > q(q-1)", num(dstar_all), Relation::gt,
                                 num(BigInt(q) * (q - 1))));
    tr.steps.push_back(
        make_step("|F*_E| > q^2/2", num(dstar_all), Relation::gt, Surd(Rational(ipow(q, 2), 2))));
    tr.steps.push_back(
        make_step("|E| |F*_E| > q^{d+1}", num(BigInt(size) * dstar_all), Relation::gt, num(ipow(q, d + 1))));

    auto cert = verify_theorem(e, options);
    tr.steps.push_back(make_step("|vol(E)| = q", num(std::uint64_t(cert.witnesses.size())), Relation::eq, Q));
    tr.coverage = std::move(cert);

    tr.observations.push_back(make_step("((q^{d-1}-1)|E| - (d-2)q^{d-2}(q^d-1))/(q-1) > q^d",
                                        Surd(Rational(scaled_rhs, BigInt(q - 1))), Relation::gt, num(ipow(q, d))));
    tr.observations.push_back(
        make_step("max_H |E cap H| <= q^{d-1}", num(std::uint64_t(largest)), Relation::le, num(ipow(q, d - 1))));
    tr.observations.push_back(make_step("heavy threshold (d-2)q^{d-2}", num(threshold), Relation::eq,
                                        num(BigInt(d - 2) * ipow(q, d - 2))));
    return tr;
}

std::string to_string(SubsetFamily f)
{
    return f == SubsetFamily::uniform ? "uniform" : "hyperplane";
}

SubsetFamily parse_subset_family(const std::string& s)
{
    if (s == "uniform")
        return SubsetFamily::uniform;
    if (s == "hyperplane")
        return SubsetFamily::hyperplane;
    throw std::invalid_argument("unknown subset family '" + s + "' (uniform|hyperplane)");
}

ScanResult scan_threshold(const Field& f, std::size_t d, std::span<const std::size_t> sizes, std::uint32_t trials,
                          std::uint64_t seed, SubsetFamily family, const SearchOptions& options)
{
    const std::uint64_t universe_size =
        family == SubsetFamily::uniform ? ambient_size(f.q(), d) : ambient_size(f.q(), d - 1);
    for (auto s : sizes)
        if (s > universe_size)
            throw std::invalid_argument("scan_threshold: size " + std::to_string(s) + " exceeds the universe (" +
                                        std::to_string(universe_size) + " points)");

    const PointSet universe =
        family == SubsetFamily::uniform ? PointSet::full_space(f, d) : PointSet::coordinate_hyperplane(f, d);

    ScanResult result;
    result.field = f.spec();
    result.dim = d;
    result.seed = seed;
    result.family = family;

    const std::int64_t total = static_cast<std::int64_t>(sizes.size()) * trials;
    std::vector<std::uint8_t> covered(total, 0), inconclusive(total, 0);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < total; ++i) {
        const std::uint64_t sub = derive_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(sub);
        const PointSet e = random_subset_of(universe, sizes[static_cast<std::size_t>(i / trials)], rng);
        SearchOptions opt = options;
        opt.seed = derive_seed(sub, 1);
        const auto cert = verify_theorem(e, opt);
        covered[i] = cert.covered();
        inconclusive[i] = !cert.covered() && !cert.exhaustive;
    }

    for (std::size_t r = 0; r < sizes.size(); ++r) {
        ScanRow row;
        row.size = sizes[r];
        row.trials = trials;
        for (std::uint32_t t = 0; t < trials; ++t) {
            row.covered += covered[r * trials + t];
            row.inconclusive += inconclusive[r * trials + t];
        }
        result.rows.push_back(row);
    }
    return result;
}

SharpnessResult sharpness_check(const PointSet& e, const SearchOptions& options)
{
    SharpnessResult out;
    out.certificate = verify_theorem(e, options);
    const auto values = out.certificate.covered_values();
    out.confirmed = out.certificate.exhaustive && values.size() == 1 && values.elements[0] == Field::zero();
    return out;
}

SharpnessResult sharpness_demo(const Field& f, std::size_t d, const SearchOptions& options)
{
    if (d < 2)
        throw std::invalid_argument("sharpness_demo needs d >= 2");
    return sharpness_check(PointSet::coordinate_hyperplane(f, d), options);
}

} // namespace volset
