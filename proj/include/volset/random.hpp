#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "volset/linalg.hpp"
#include "volset/pointset.hpp"

namespace volset {

/// Seeded stream with a platform-independent bounded draw. std::mt19937_64
/// has a fixed output sequence; the distributions of <random> do not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n), n > 0, by rejection.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

/// splitmix64 of (seed, stream); independent sub-seeds for trials.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// m distinct values of [0, n), sorted (partial Fisher-Yates).
std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t n, std::uint64_t m);

/// Uniform random subset of F_q^d of the given size.
PointSet random_subset(const Field& f, std::size_t dim, std::size_t size, Rng& rng);

/// Uniform random subset of a given universe.
PointSet random_subset_of(const PointSet& universe, std::size_t size, Rng& rng);

Vector random_vector(const Field& f, std::size_t dim, Rng& rng);
Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);

} // namespace volset
