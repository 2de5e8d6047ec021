#include "volset/grassmann.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace volset {

std::vector<Vector> rref(const Field& f, std::vector<Vector> rows, std::vector<std::size_t>* pivots)
{
    if (pivots)
        pivots->clear();
    if (rows.empty())
        return rows;
    const std::size_t cols = rows.front().size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == Field::zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[lead]);
        rows[lead] = scale(f, f.inv(rows[lead][col]), rows[lead]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == Field::zero())
                continue;
            rows[r] = add(f, rows[r], scale(f, f.neg(rows[r][col]), rows[lead]));
        }
        if (pivots)
            pivots->push_back(col);
        ++lead;
    }
    rows.resize(lead);
    return rows;
}

std::size_t rank(const Field& f, std::vector<Vector> rows)
{
    return rref(f, std::move(rows)).size();
}

Subspace Subspace::span(const Field& f, std::size_t ambient, std::vector<Vector> generators)
{
    for (const auto& g : generators)
        if (g.size() != ambient)
            throw LinalgError("subspace generator has wrong dimension");
    std::vector<std::size_t> pivots;
    auto basis = rref(f, std::move(generators), &pivots);
    return Subspace(ambient, std::move(basis), std::move(pivots));
}

std::optional<Vector> Subspace::coordinates(const Field& f, const Vector& v) const
{
    if (v.size() != ambient_)
        throw LinalgError("coordinates: dimension mismatch");
    // In RREF the coefficient of row i is the entry at its pivot column.
    Vector coords(basis_.size());
    Vector residual = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        coords[i] = v[pivots_[i]];
        if (coords[i] != Field::zero())
            residual = add(f, residual, scale(f, f.neg(coords[i]), basis_[i]));
    }
    if (!is_zero(residual))
        return std::nullopt;
    return coords;
}

bool Subspace::contains(const Field& f, const Vector& v) const
{
    return coordinates(f, v).has_value();
}

Vector Subspace::combine(const Field& f, const Vector& coords) const
{
    if (coords.size() != basis_.size())
        throw LinalgError("combine: coordinate count mismatch");
    Vector out(ambient_, Field::zero());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        out = add(f, out, scale(f, coords[i], basis_[i]));
    return out;
}

std::uint64_t gaussian_binomial(std::size_t k, std::size_t d, std::uint64_t q)
{
    if (k > d)
        throw std::out_of_range("gaussian_binomial: k must satisfy 0 <= k <= d");
    // prod (q^{d-i} - 1) / (q^{k-i} - 1); each partial quotient is an integer
    // because it counts subspaces, so multiply then divide step by step.
    unsigned __int128 num = 1, den = 1;
    auto qpow = [q](std::size_t e) {
        unsigned __int128 r = 1;
        for (std::size_t i = 0; i < e; ++i)
            r *= q;
        return r;
    };
    for (std::size_t i = 0; i < k; ++i) {
        num *= qpow(d - i) - 1;
        den *= qpow(k - i) - 1;
        unsigned __int128 a = num, b = den;
        while (b != 0)
            a = std::exchange(b, a % b);
        const unsigned __int128 g = a;
        num /= g;
        den /= g;
    }
    if (den != 1 || num > static_cast<unsigned __int128>(UINT64_MAX))
        throw std::overflow_error("gaussian_binomial: result does not fit in 64 bits");
    return static_cast<std::uint64_t>(num);
}

SubspaceFamily enumerate_subspaces(const Field& f, std::size_t k, std::size_t d)
{
    if (k > d)
        throw std::out_of_range("enumerate_subspaces: k must satisfy 0 <= k <= d");
    const std::uint32_t q = f.q();

    // all increasing pivot tuples
    std::vector<std::vector<std::size_t>> patterns;
    std::vector<std::size_t> piv(k);
    auto gen = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
        if (pos == k) {
            patterns.push_back(piv);
            return;
        }
        for (std::size_t c = start; c + (k - pos) <= d; ++c) {
            piv[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    gen(gen, 0, 0);

    std::vector<std::vector<Subspace>> per_pattern(patterns.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        const auto& pv = patterns[pi];
        std::vector<bool> is_pivot(d, false);
        for (auto c : pv)
            is_pivot[c] = true;
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = pv[r] + 1; c < d; ++c)
                if (!is_pivot[c])
                    free_slots.emplace_back(r, c);

        std::vector<Vector> rows(k, Vector(d, Field::zero()));
        for (std::size_t r = 0; r < k; ++r)
            rows[r][pv[r]] = Field::one();

        std::vector<std::uint32_t> counter(free_slots.size(), 0);
        auto& out = per_pattern[pi];
        while (true) {
            for (std::size_t s = 0; s < free_slots.size(); ++s)
                rows[free_slots[s].first][free_slots[s].second] = Elem{counter[s]};
            out.push_back(Subspace(d, rows, pv));
            std::size_t s = 0;
            while (s < counter.size() && ++counter[s] == q)
                counter[s++] = 0;
            if (s == counter.size())
                break;
        }
    }

    SubspaceFamily family;
    family.k = k;
    family.d = d;
    for (auto& v : per_pattern)
        for (auto& s : v)
            family.members.push_back(std::move(s));
    std::sort(family.members.begin(), family.members.end());
    return family;
}

Subspace hyperplane_of(const Field& f, const Vector& x)
{
    if (is_zero(x))
        throw LinalgError("hyperplane_of: zero vector has no orthogonal hyperplane");
    const std::size_t d = x.size();
    std::size_t p = 0;
    while (x[p] == Field::zero())
        ++p;
    const Elem xp_inv = f.inv(x[p]);
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < d; ++j) {
        if (j == p)
            continue;
        Vector v(d, Field::zero());
        v[j] = Field::one();
        v[p] = f.neg(f.mul(x[j], xp_inv));
        gens.push_back(std::move(v));
    }
    return Subspace::span(f, d, std::move(gens));
}

PointSet intersect_set(const PointSet& e, const Subspace& h)
{
    if (e.dim() != h.ambient())
        throw LinalgError("intersect_set: dimension mismatch");
    std::vector<Vector> pts;
    for (const auto& p : e)
        if (h.contains(e.field(), p))
            pts.push_back(p);
    return PointSet(e.field(), e.dim(), std::move(pts));
}

std::vector<Vector> coordinates_in_basis(const Field& f, const Subspace& h, std::span<const Vector> p)
{
    std::vector<Vector> out;
    out.reserve(p.size());
    for (const auto& v : p) {
        auto c = h.coordinates(f, v);
        if (!c)
            throw LinalgError("coordinates_in_basis: point lies outside the subspace");
        out.push_back(std::move(*c));
    }
    return out;
}

std::vector<Vector> coordinates_in_basis(const Field& f, std::span<const Vector> basis, std::span<const Vector> p)
{
    if (basis.empty())
        throw LinalgError("coordinates_in_basis: empty basis");
    const std::size_t ambient = basis.front().size();
    const Subspace h = Subspace::span(f, ambient, std::vector<Vector>(basis.begin(), basis.end()));
    if (h.dim() != basis.size())
        throw LinalgError("coordinates_in_basis: basis vectors are linearly dependent");

    // rows of b are the RREF coordinates of the given basis; c = r * b^{-1}
    const Matrix b = Matrix::from_rows(coordinates_in_basis(f, h, basis));
    const Matrix b_inv = *inverse(f, b);
    std::vector<Vector> out;
    out.reserve(p.size());
    for (const auto& r : coordinates_in_basis(f, h, p)) {
        Vector c(h.dim(), Field::zero());
        for (std::size_t j = 0; j < h.dim(); ++j)
            for (std::size_t i = 0; i < h.dim(); ++i)
                c[j] = f.add(c[j], f.mul(r[i], b_inv(i, j)));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace volset
