#include "volset/sets.hpp"

#include <algorithm>

#include "volset/kernels.hpp"

namespace volset {

namespace {

void require_same_space(const PointSet& a, const PointSet& b, const char* what)
{
    if (a.dim() != b.dim())
        throw LinalgError(std::string(what) + ": dimension mismatch");
    if (!(a.field() == b.field()))
        throw FieldError(std::string(what) + ": point sets over different fields");
}

void check_budget(const char* what, std::uint64_t n, std::size_t m, std::uint64_t budget)
{
    const std::uint64_t needed = kernels::tuple_count(n, m);
    if (needed > budget)
        throw BudgetExceeded(what, needed, budget);
}

// Distinct wedge values of (d-1)-tuples, as packed d-dim rows.
kernels::Packed wedge_image(const Field& f, const kernels::Packed& e, bool include_zero)
{
    const auto hist = kernels::wedge_histogram(f, e);
    std::vector<Vector> values;
    for (std::uint64_t code = include_zero ? 0 : 1; code < hist.size(); ++code)
        if (hist[code])
            values.push_back(decode_point(f.q(), e.dim, code));
    return kernels::pack(values, e.dim);
}

} // namespace

std::string to_string(VolumeMode mode)
{
    switch (mode) {
    case VolumeMode::naive:
        return "naive";
    case VolumeMode::wedge:
        return "wedge";
    case VolumeMode::decomposed:
        return "decomposed";
    }
    return "?";
}

VolumeMode parse_volume_mode(const std::string& s)
{
    if (s == "naive")
        return VolumeMode::naive;
    if (s == "wedge")
        return VolumeMode::wedge;
    if (s == "decomposed")
        return VolumeMode::decomposed;
    throw std::invalid_argument("unknown volume mode '" + s + "' (naive|wedge|decomposed)");
}

ScalarSet volume_set(const PointSet& e, VolumeMode mode, std::uint64_t budget)
{
    const Field& f = e.field();
    const std::size_t d = e.dim();
    if (e.empty())
        return ScalarSet{};
    const auto packed = kernels::pack(e.points(), d);

    switch (mode) {
    case VolumeMode::naive:
        check_budget("volume_set(naive)", e.size(), d, budget);
        return scalar_set_from_mask(kernels::volume_mask_naive(f, packed), false);

    case VolumeMode::wedge: {
        check_budget("volume_set(wedge)", e.size(), d - 1, budget);
        const auto w = wedge_image(f, packed, true);
        return scalar_set_from_mask(kernels::dot_mask(f, packed, w), false);
    }

    case VolumeMode::decomposed: {
        if (d < 2)
            throw LinalgError("volume_set(decomposed) needs d >= 2");
        const auto cross = cross_product_set(e, CrossMode::decomposed, budget);
        auto mask = kernels::dot_mask(f, packed, kernels::pack(cross.elements, d));
        mask[0] = 1; // a tuple of identical rows
        return scalar_set_from_mask(mask, false);
    }
    }
    throw std::logic_error("unreachable");
}

ScalarSet determinant_set_star(const Field& f, std::span<const Vector> coords, std::size_t k, std::uint64_t budget)
{
    if (k == 0)
        throw LinalgError("determinant_set_star: k must be positive");
    std::vector<std::uint8_t> mask(f.q(), 0);
    if (!coords.empty()) {
        const auto packed = kernels::pack(coords, k);
        if (k == 1) {
            for (const auto& c : coords)
                mask[c[0].value] = 1;
        } else {
            // det(c^1..c^k) = c^1 . (c^2 ^ ... ^ c^k)
            check_budget("determinant_set_star", coords.size(), k - 1, budget);
            const auto w = wedge_image(f, packed, false);
            mask = kernels::dot_mask(f, packed, w);
        }
    }
    return scalar_set_from_mask(mask, true);
}

ScalarSet determinant_set_star(const PointSet& p, const Subspace& h, std::uint64_t budget)
{
    const auto coords = coordinates_in_basis(p.field(), h, p.points());
    return determinant_set_star(p.field(), coords, h.dim(), budget);
}

ScalarSet determinant_set_star(const PointSet& p, std::span<const Vector> basis, std::uint64_t budget)
{
    const auto coords = coordinates_in_basis(p.field(), basis, p.points());
    return determinant_set_star(p.field(), coords, basis.size(), budget);
}

std::uint64_t WedgeCounter::at(const Vector& x) const
{
    const auto it = counts.find(x);
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t WedgeCounter::total() const
{
    std::uint64_t s = 0;
    for (const auto& [v, c] : counts)
        s += c;
    return s;
}

WedgeCounter wedge_counter(const PointSet& e, std::uint64_t budget)
{
    check_budget("wedge_counter", e.size(), e.dim() - 1, budget);
    const Field& f = e.field();
    const auto hist = kernels::wedge_histogram(f, kernels::pack(e.points(), e.dim()));
    WedgeCounter out;
    out.dim = e.dim();
    for (std::uint64_t code = 0; code < hist.size(); ++code)
        if (hist[code])
            out.counts.emplace(decode_point(f.q(), e.dim(), code), hist[code]);
    return out;
}

std::vector<HyperplaneTerm> hyperplane_decomposition(const PointSet& e, std::uint64_t budget)
{
    const Field& f = e.field();
    const std::size_t d = e.dim();
    if (d < 2)
        throw LinalgError("hyperplane_decomposition needs d >= 2");
    const auto family = enumerate_subspaces(f, d - 1, d);
    std::vector<HyperplaneTerm> terms(family.members.size(), HyperplaneTerm{family.members.front(), {}, 0, {}});
    bool over_budget = false;
    std::uint64_t needed = 0;

#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        auto& term = terms[i];
        term.plane = family.members[i];
        term.normal = wedge(f, term.plane.basis());
        const PointSet inside = intersect_set(e, term.plane);
        term.intersection = inside.size();
        try {
            term.dstar = determinant_set_star(inside, term.plane, budget);
        } catch (const BudgetExceeded& ex) {
#pragma omp critical
            {
                over_budget = true;
                needed = std::max(needed, ex.required());
            }
        }
    }
    if (over_budget)
        throw BudgetExceeded("hyperplane_decomposition", needed, budget);
    return terms;
}

VectorSet cross_product_set(const PointSet& e, CrossMode mode, std::uint64_t budget)
{
    const Field& f = e.field();
    VectorSet out;
    if (mode == CrossMode::brute) {
        for (const auto& [v, count] : wedge_counter(e, budget).counts)
            if (!is_zero(v))
                out.elements.push_back(v);
    } else {
        for (const auto& term : hyperplane_decomposition(e, budget))
            for (Elem delta : term.dstar.elements)
                out.elements.push_back(scale(f, delta, term.normal));
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

ScalarSet dot_product_set(const PointSet& e, const PointSet& f)
{
    require_same_space(e, f, "dot_product_set");
    return scalar_set_from_mask(
        kernels::dot_mask(e.field(), kernels::pack(e.points(), e.dim()), kernels::pack(f.points(), f.dim())), false);
}

Rational CountTable::main_term() const
{
    return Rational(BigInt(e_size) * f_size, BigInt(q));
}

std::uint64_t CountTable::total() const
{
    std::uint64_t s = 0;
    for (auto c : counts)
        s += c;
    return s;
}

bool CountTable::deviation_bound_holds(Elem t) const
{
    const BigInt dev = scaled_deviation.at(t.value);
    BigInt rhs = BigInt(e_size) * f_size;
    for (std::size_t i = 0; i < dim + 1; ++i)
        rhs *= q;
    return dev * dev <= rhs;
}

CountTable incidence_count(const PointSet& e, const PointSet& f, const BilinearForm& b)
{
    require_same_space(e, f, "incidence_count");
    if (b.dim() != e.dim())
        throw LinalgError("incidence_count: form dimension mismatch");
    const Field& fld = e.field();

    std::vector<Vector> transformed;
    transformed.reserve(f.size());
    for (const auto& y : f)
        transformed.push_back(b.apply_right(fld, y));

    CountTable table;
    table.gram = b.gram();
    table.q = fld.q();
    table.dim = e.dim();
    table.e_size = e.size();
    table.f_size = f.size();
    table.counts = kernels::dot_histogram(fld, kernels::pack(e.points(), e.dim()), kernels::pack(transformed, e.dim()));
    const auto ef = static_cast<std::int64_t>(table.e_size * table.f_size);
    for (auto c : table.counts)
        table.scaled_deviation.push_back(static_cast<std::int64_t>(table.q) * static_cast<std::int64_t>(c) - ef);
    return table;
}

ScalarSet bstar(const PointSet& e, const BilinearForm& b)
{
    if (e.dim() != 2)
        throw LinalgError("bstar: defined for point sets in F_q^2 only");
    if (b.dim() != 2)
        throw LinalgError("bstar: form dimension mismatch");
    const Field& f = e.field();
    std::vector<Vector> transformed;
    for (const auto& y : e)
        transformed.push_back(b.apply_right(f, y));
    return scalar_set_from_mask(kernels::dot_mask(f, kernels::pack(e.points(), 2), kernels::pack(transformed, 2)), true);
}

} // namespace volset
