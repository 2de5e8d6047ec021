#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "volset/field.hpp"
#include "volset/linalg.hpp"

namespace volset {

/// A finite subset of F_q^d. Points are kept sorted and deduplicated.
class PointSet {
public:
    PointSet(Field field, std::size_t dim, std::vector<Vector> points = {});

    static PointSet full_space(const Field& field, std::size_t dim);
    /// {y : y_d = 0}, a hyperplane through the origin.
    static PointSet coordinate_hyperplane(const Field& field, std::size_t dim);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    const std::vector<Vector>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }
    const Vector& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const Vector& v) const;
    bool contains_zero() const;
    PointSet without_zero() const;

    friend bool operator==(const PointSet& a, const PointSet& b)
    {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.points_ == b.points_;
    }

private:
    Field field_;
    std::size_t dim_;
    std::vector<Vector> points_;
};

/// Set of field elements, sorted ascending by index.
struct ScalarSet {
    std::vector<Elem> elements;
    /// True when 0 was removed per a starred definition.
    bool zero_stripped = false;

    std::size_t size() const { return elements.size(); }
    bool contains(Elem e) const;

    friend bool operator==(const ScalarSet&, const ScalarSet&) = default;
};

/// Set of vectors, sorted lexicographically.
struct VectorSet {
    std::vector<Vector> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(const Vector& v) const;

    friend bool operator==(const VectorSet&, const VectorSet&) = default;
};

/// Number of points of F_q^d; throws when it does not fit the enumeration limit.
std::uint64_t ambient_size(std::uint32_t q, std::size_t dim);

/// Base-q little-endian code of a point.
std::uint64_t encode_point(std::uint32_t q, const Vector& v);
Vector decode_point(std::uint32_t q, std::size_t dim, std::uint64_t code);

/// Builds a ScalarSet from a membership mask indexed by element.
ScalarSet scalar_set_from_mask(const std::vector<std::uint8_t>& mask, bool strip_zero);

} // namespace volset
