#include "volset/pointset.hpp"

#include <algorithm>
#include <string>

namespace volset {

namespace {

constexpr std::uint64_t kMaxAmbient = 1u << 24;

}

std::uint64_t ambient_size(std::uint32_t q, std::size_t dim)
{
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        n *= q;
        if (n > kMaxAmbient)
            throw std::length_error("q^d exceeds the enumeration limit 2^24");
    }
    return n;
}

std::uint64_t encode_point(std::uint32_t q, const Vector& v)
{
    std::uint64_t code = 0;
    for (std::size_t i = v.size(); i-- > 0;)
        code = code * q + v[i].value;
    return code;
}

Vector decode_point(std::uint32_t q, std::size_t dim, std::uint64_t code)
{
    Vector v(dim);
    for (auto& e : v) {
        e = Elem{static_cast<std::uint32_t>(code % q)};
        code /= q;
    }
    return v;
}

PointSet::PointSet(Field field, std::size_t dim, std::vector<Vector> points)
    : field_(std::move(field)), dim_(dim), points_(std::move(points))
{
    if (dim_ == 0 || dim_ > detail::kMaxDim)
        throw LinalgError("point set dimension must be in [1, " + std::to_string(detail::kMaxDim) + "]");
    for (const auto& p : points_) {
        if (p.size() != dim_)
            throw LinalgError("point of dimension " + std::to_string(p.size()) + " in a set of dimension " +
                              std::to_string(dim_));
        for (Elem e : p)
            if (!field_.valid(e))
                throw FieldError("coordinate " + std::to_string(e.value) + " out of range");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet PointSet::full_space(const Field& field, std::size_t dim)
{
    const std::uint64_t n = ambient_size(field.q(), dim);
    std::vector<Vector> pts;
    pts.reserve(n);
    for (std::uint64_t c = 0; c < n; ++c)
        pts.push_back(decode_point(field.q(), dim, c));
    return PointSet(field, dim, std::move(pts));
}

PointSet PointSet::coordinate_hyperplane(const Field& field, std::size_t dim)
{
    const std::uint64_t n = ambient_size(field.q(), dim - 1);
    std::vector<Vector> pts;
    pts.reserve(n);
    for (std::uint64_t c = 0; c < n; ++c) {
        Vector v = decode_point(field.q(), dim - 1, c);
        v.push_back(Field::zero());
        pts.push_back(std::move(v));
    }
    return PointSet(field, dim, std::move(pts));
}

bool PointSet::contains(const Vector& v) const
{
    return std::binary_search(points_.begin(), points_.end(), v);
}

bool PointSet::contains_zero() const
{
    return contains(Vector(dim_, Field::zero()));
}

PointSet PointSet::without_zero() const
{
    std::vector<Vector> pts;
    pts.reserve(points_.size());
    for (const auto& p : points_)
        if (!is_zero(p))
            pts.push_back(p);
    return PointSet(field_, dim_, std::move(pts));
}

bool ScalarSet::contains(Elem e) const
{
    return std::binary_search(elements.begin(), elements.end(), e);
}

bool VectorSet::contains(const Vector& v) const
{
    return std::binary_search(elements.begin(), elements.end(), v);
}

ScalarSet scalar_set_from_mask(const std::vector<std::uint8_t>& mask, bool strip_zero)
{
    ScalarSet out;
    out.zero_stripped = strip_zero;
    for (std::uint32_t t = strip_zero ? 1 : 0; t < mask.size(); ++t)
        if (mask[t])
            out.elements.push_back(Elem{t});
    return out;
}

} // namespace volset
