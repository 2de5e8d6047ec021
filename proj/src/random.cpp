#include "volset/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace volset {

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t n, std::uint64_t m)
{
    if (m > n)
        throw std::invalid_argument("sample_distinct: sample larger than population");
    std::vector<std::uint64_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint64_t i = 0; i < m; ++i)
        std::swap(pool[i], pool[i + rng.below(n - i)]);
    pool.resize(m);
    std::sort(pool.begin(), pool.end());
    return pool;
}

PointSet random_subset(const Field& f, std::size_t dim, std::size_t size, Rng& rng)
{
    const std::uint64_t n = ambient_size(f.q(), dim);
    if (size > n)
        throw std::invalid_argument("random_subset: size exceeds q^d");
    std::vector<Vector> pts;
    pts.reserve(size);
    for (auto code : sample_distinct(rng, n, size))
        pts.push_back(decode_point(f.q(), dim, code));
    return PointSet(f, dim, std::move(pts));
}

PointSet random_subset_of(const PointSet& universe, std::size_t size, Rng& rng)
{
    if (size > universe.size())
        throw std::invalid_argument("random_subset_of: size exceeds universe");
    std::vector<Vector> pts;
    pts.reserve(size);
    for (auto i : sample_distinct(rng, universe.size(), size))
        pts.push_back(universe[i]);
    return PointSet(universe.field(), universe.dim(), std::move(pts));
}

Vector random_vector(const Field& f, std::size_t dim, Rng& rng)
{
    Vector v(dim);
    for (auto& e : v)
        e = Elem{static_cast<std::uint32_t>(rng.below(f.q()))};
    return v;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng)
{
    Matrix m(rows, cols);
    for (auto& e : m.data())
        e = Elem{static_cast<std::uint32_t>(rng.below(f.q()))};
    return m;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng)
{
    while (true) {
        Matrix m = random_matrix(f, n, n, rng);
        if (det(f, m) != Field::zero())
            return m;
    }
}

} // namespace volset
