#include "volset/kernels.hpp"

#include <algorithm>
#include <array>

#include "volset/pointset.hpp"

namespace volset::kernels {

Packed pack(std::span<const Vector> points, std::size_t dim)
{
    Packed out;
    out.dim = dim;
    out.count = points.size();
    out.coords.reserve(points.size() * dim);
    for (const auto& p : points) {
        if (p.size() != dim)
            throw LinalgError("pack: dimension mismatch");
        out.coords.insert(out.coords.end(), p.begin(), p.end());
    }
    return out;
}

std::uint64_t tuple_count(std::uint64_t n, std::size_t m)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (n != 0 && total > UINT64_MAX / n)
            return UINT64_MAX;
        total *= n;
    }
    return total;
}

void decode_rank(std::uint64_t rank, std::uint64_t n, std::span<std::size_t> out)
{
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<std::size_t>(rank % n);
        rank /= n;
    }
}

namespace serial {

namespace {

using Block = std::array<Elem, detail::kMaxDim * detail::kMaxDim>;

void gather(const Packed& e, std::span<const std::size_t> idx, Block& rows)
{
    for (std::size_t r = 0; r < idx.size(); ++r)
        std::copy_n(e.row(idx[r]), e.dim, rows.begin() + r * e.dim);
}

std::uint64_t wedge_code(const Field& f, const Packed& e, std::span<const std::size_t> idx)
{
    Block rows{};
    gather(e, idx, rows);
    std::array<Elem, detail::kMaxDim> w{};
    detail::wedge_into(f, rows.data(), e.dim, w.data());
    return encode_point(f.q(), Vector(w.begin(), w.begin() + e.dim));
}

} // namespace

std::vector<std::uint8_t> volume_mask_naive(const Field& f, const Packed& e)
{
    std::vector<std::uint8_t> mask(f.q(), 0);
    const std::size_t d = e.dim;
    const std::uint64_t total = tuple_count(e.count, d);
    std::array<std::size_t, detail::kMaxDim> idx{};
    for (std::uint64_t r = 0; r < total; ++r) {
        decode_rank(r, e.count, std::span(idx.data(), d));
        Block rows{};
        gather(e, std::span(idx.data(), d), rows);
        mask[detail::det_inplace(f, rows.data(), d).value] = 1;
    }
    return mask;
}

std::vector<std::uint64_t> wedge_histogram(const Field& f, const Packed& e)
{
    std::vector<std::uint64_t> hist(ambient_size(f.q(), e.dim), 0);
    const std::size_t m = e.dim - 1;
    const std::uint64_t total = tuple_count(e.count, m);
    std::array<std::size_t, detail::kMaxDim> idx{};
    for (std::uint64_t r = 0; r < total; ++r) {
        decode_rank(r, e.count, std::span(idx.data(), m));
        ++hist[wedge_code(f, e, std::span(idx.data(), m))];
    }
    return hist;
}

void wedge_first_rank(const Field& f, const Packed& e, std::uint64_t begin, std::uint64_t end,
                      std::vector<std::uint64_t>& first)
{
    const std::size_t m = e.dim - 1;
    std::array<std::size_t, detail::kMaxDim> idx{};
    for (std::uint64_t r = begin; r < end; ++r) {
        decode_rank(r, e.count, std::span(idx.data(), m));
        auto& slot = first[wedge_code(f, e, std::span(idx.data(), m))];
        slot = std::min(slot, r);
    }
}

std::vector<std::uint8_t> dot_mask(const Field& f, const Packed& a, const Packed& b)
{
    std::vector<std::uint8_t> mask(f.q(), 0);
    for (std::size_t i = 0; i < a.count; ++i)
        for (std::size_t j = 0; j < b.count; ++j)
            mask[detail::dot_raw(f, a.row(i), b.row(j), a.dim).value] = 1;
    return mask;
}

std::vector<std::uint64_t> dot_histogram(const Field& f, const Packed& a, const Packed& b)
{
    std::vector<std::uint64_t> hist(f.q(), 0);
    for (std::size_t i = 0; i < a.count; ++i)
        for (std::size_t j = 0; j < b.count; ++j)
            ++hist[detail::dot_raw(f, a.row(i), b.row(j), a.dim).value];
    return hist;
}

} // namespace serial

} // namespace volset::kernels
