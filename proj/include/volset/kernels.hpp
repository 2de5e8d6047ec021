#pragma once

// Enumeration kernels over packed point arrays. Each kernel has an OpenMP
// version in volset::kernels and a single-threaded reference with the same
// contract in volset::kernels::serial; tests require identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "volset/field.hpp"
#include "volset/linalg.hpp"

namespace volset::kernels {

/// Row-major count x dim block of coordinates.
struct Packed {
    std::size_t dim = 0;
    std::size_t count = 0;
    std::vector<Elem> coords;

    const Elem* row(std::size_t i) const { return coords.data() + i * dim; }
};

Packed pack(std::span<const Vector> points, std::size_t dim);

/// n^m, or UINT64_MAX on overflow.
std::uint64_t tuple_count(std::uint64_t n, std::size_t m);

/// Indices of the tuple with the given rank; the first index is the most
/// significant digit, so rank order is lexicographic order.
void decode_rank(std::uint64_t rank, std::uint64_t n, std::span<std::size_t> out);

/// mask[t] = 1 iff some d-tuple of rows has determinant t (rows are d-dim).
std::vector<std::uint8_t> volume_mask_naive(const Field& f, const Packed& e);

/// Multiplicity of each wedge value, indexed by point code, over all ordered
/// (d-1)-tuples of rows.
std::vector<std::uint64_t> wedge_histogram(const Field& f, const Packed& e);

/// For tuple ranks in [begin, end), lowers first[code] to the smallest rank
/// whose wedge has that code. `first` has q^d entries.
void wedge_first_rank(const Field& f, const Packed& e, std::uint64_t begin, std::uint64_t end,
                      std::vector<std::uint64_t>& first);

/// mask[t] = 1 iff a . b = t for some row a of `a`, b of `b`.
std::vector<std::uint8_t> dot_mask(const Field& f, const Packed& a, const Packed& b);

/// count[t] = #{(a, b) : a . b = t}.
std::vector<std::uint64_t> dot_histogram(const Field& f, const Packed& a, const Packed& b);

namespace serial {

std::vector<std::uint8_t> volume_mask_naive(const Field& f, const Packed& e);
std::vector<std::uint64_t> wedge_histogram(const Field& f, const Packed& e);
void wedge_first_rank(const Field& f, const Packed& e, std::uint64_t begin, std::uint64_t end,
                      std::vector<std::uint64_t>& first);
std::vector<std::uint8_t> dot_mask(const Field& f, const Packed& a, const Packed& b);
std::vector<std::uint64_t> dot_histogram(const Field& f, const Packed& a, const Packed& b);

} // namespace serial

} // namespace volset::kernels
