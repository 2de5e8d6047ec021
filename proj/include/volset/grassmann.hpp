#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "volset/field.hpp"
#include "volset/linalg.hpp"
#include "volset/pointset.hpp"

namespace volset {

/// Reduced row echelon form of the span of `rows`; zero rows are dropped.
/// When `pivots` is given it receives the pivot column of each output row.
std::vector<Vector> rref(const Field& f, std::vector<Vector> rows, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Field& f, std::vector<Vector> rows);

struct SubspaceFamily;

/// A linear subspace of F_q^d held by its RREF basis, so equality is syntactic.
class Subspace {
public:
    /// Span of arbitrary generators.
    static Subspace span(const Field& f, std::size_t ambient, std::vector<Vector> generators);

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Field& f, const Vector& v) const;

    /// Coordinates relative to the RREF basis, or nullopt when v is outside.
    std::optional<Vector> coordinates(const Field& f, const Vector& v) const;

    /// sum_i c_i b^i.
    Vector combine(const Field& f, const Vector& coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend auto operator<=>(const Subspace& a, const Subspace& b)
    {
        if (auto c = a.ambient_ <=> b.ambient_; c != 0)
            return c;
        return a.basis_ <=> b.basis_;
    }

private:
    friend SubspaceFamily enumerate_subspaces(const Field& f, std::size_t k, std::size_t d);
    Subspace(std::size_t ambient, std::vector<Vector> basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots))
    {
    }

    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

struct SubspaceFamily {
    std::size_t k = 0;
    std::size_t d = 0;
    std::vector<Subspace> members;
};

/// Number of k-dimensional subspaces of F_q^d.
std::uint64_t gaussian_binomial(std::size_t k, std::size_t d, std::uint64_t q);

/// Every k-dimensional subspace exactly once, generated from RREF pivot
/// patterns, sorted canonically.
SubspaceFamily enumerate_subspaces(const Field& f, std::size_t k, std::size_t d);

/// x^perp = {y : x . y = 0}; x must be nonzero.
Subspace hyperplane_of(const Field& f, const Vector& x);

PointSet intersect_set(const PointSet& e, const Subspace& h);

/// Coordinates of each point of p with respect to h's RREF basis; throws when
/// a point lies outside h.
std::vector<Vector> coordinates_in_basis(const Field& f, const Subspace& h, std::span<const Vector> p);

/// Coordinates with respect to an arbitrary basis of the subspace it spans.
std::vector<Vector> coordinates_in_basis(const Field& f, std::span<const Vector> basis, std::span<const Vector> p);

} // namespace volset
