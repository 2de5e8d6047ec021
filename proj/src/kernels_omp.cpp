#include "volset/kernels.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>

#include "volset/pointset.hpp"

namespace volset::kernels {

namespace {

using Block = std::array<Elem, detail::kMaxDim * detail::kMaxDim>;

std::uint64_t code_of(const Elem* w, std::size_t d, std::uint32_t q)
{
    std::uint64_t code = 0;
    for (std::size_t i = d; i-- > 0;)
        code = code * q + w[i].value;
    return code;
}

// Visits every m-tuple whose first index is `first`, in lexicographic order,
// with the gathered rows in `rows`.
template <typename Fn>
void for_each_tuple_from(const Packed& e, std::size_t m, std::size_t first, Fn&& fn)
{
    std::array<std::size_t, detail::kMaxDim> idx{};
    Block rows{};
    idx[0] = first;
    for (std::size_t r = 0; r < m; ++r)
        std::copy_n(e.row(idx[r]), e.dim, rows.begin() + r * e.dim);
    while (true) {
        fn(rows);
        // odometer over positions 1..m-1, refreshing only the rows that move
        std::size_t pos = m;
        while (pos-- > 1) {
            if (++idx[pos] < e.count)
                break;
            idx[pos] = 0;
        }
        if (pos == 0)
            return;
        for (std::size_t r = pos; r < m; ++r)
            std::copy_n(e.row(idx[r]), e.dim, rows.begin() + r * e.dim);
    }
}

} // namespace

std::vector<std::uint8_t> volume_mask_naive(const Field& f, const Packed& e)
{
    const std::uint32_t q = f.q();
    const std::size_t d = e.dim;
    std::vector<std::uint8_t> mask(q, 0);
    if (e.count == 0)
        return mask;
    std::atomic<bool> full{false};
    const auto n = static_cast<std::int64_t>(e.count);

#pragma omp parallel
    {
        std::vector<std::uint8_t> local(q, 0);
        std::uint32_t seen = 0;
#pragma omp for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) {
            if (full.load(std::memory_order_relaxed))
                continue;
            for_each_tuple_from(e, d, static_cast<std::size_t>(i), [&](const Block& rows) {
                Block scratch = rows;
                const Elem v = detail::det_inplace(f, scratch.data(), d);
                if (!local[v.value]) {
                    local[v.value] = 1;
                    ++seen;
                }
            });
            if (seen == q)
                full.store(true, std::memory_order_relaxed);
        }
#pragma omp critical
        for (std::uint32_t t = 0; t < q; ++t)
            mask[t] |= local[t];
    }
    return mask;
}

std::vector<std::uint64_t> wedge_histogram(const Field& f, const Packed& e)
{
    const std::uint32_t q = f.q();
    const std::size_t d = e.dim;
    const std::size_t m = d - 1;
    const std::uint64_t codes = ambient_size(q, d);
    std::vector<std::uint64_t> hist(codes, 0);
    if (m == 0) {
        hist[1] = 1; // the empty wedge in dimension 1 is e_1
        return hist;
    }
    if (e.count == 0)
        return hist;
    const auto n = static_cast<std::int64_t>(e.count);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(codes, 0);
        std::array<Elem, detail::kMaxDim> w{};
#pragma omp for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i)
            for_each_tuple_from(e, m, static_cast<std::size_t>(i), [&](const Block& rows) {
                detail::wedge_into(f, rows.data(), d, w.data());
                ++local[code_of(w.data(), d, q)];
            });
#pragma omp critical
        for (std::uint64_t c = 0; c < codes; ++c)
            hist[c] += local[c];
    }
    return hist;
}

void wedge_first_rank(const Field& f, const Packed& e, std::uint64_t begin, std::uint64_t end,
                      std::vector<std::uint64_t>& first)
{
    const std::uint32_t q = f.q();
    const std::size_t d = e.dim;
    const std::size_t m = d - 1;
    const std::uint64_t codes = first.size();
    const auto lo = static_cast<std::int64_t>(begin);
    const auto hi = static_cast<std::int64_t>(end);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(codes, UINT64_MAX);
        std::array<std::size_t, detail::kMaxDim> idx{};
        std::array<Elem, detail::kMaxDim> w{};
        Block rows{};
#pragma omp for schedule(static)
        for (std::int64_t r = lo; r < hi; ++r) {
            decode_rank(static_cast<std::uint64_t>(r), e.count, std::span(idx.data(), m));
            for (std::size_t k = 0; k < m; ++k)
                std::copy_n(e.row(idx[k]), d, rows.begin() + k * d);
            detail::wedge_into(f, rows.data(), d, w.data());
            auto& slot = local[code_of(w.data(), d, q)];
            slot = std::min(slot, static_cast<std::uint64_t>(r));
        }
#pragma omp critical
        for (std::uint64_t c = 0; c < codes; ++c)
            first[c] = std::min(first[c], local[c]);
    }
}

std::vector<std::uint8_t> dot_mask(const Field& f, const Packed& a, const Packed& b)
{
    const std::uint32_t q = f.q();
    std::vector<std::uint8_t> mask(q, 0);
    std::atomic<bool> full{false};
    const auto n = static_cast<std::int64_t>(a.count);

#pragma omp parallel
    {
        std::vector<std::uint8_t> local(q, 0);
        std::uint32_t seen = 0;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) {
            if (full.load(std::memory_order_relaxed))
                continue;
            const Elem* x = a.row(static_cast<std::size_t>(i));
            for (std::size_t j = 0; j < b.count; ++j) {
                const Elem v = detail::dot_raw(f, x, b.row(j), a.dim);
                if (!local[v.value]) {
                    local[v.value] = 1;
                    ++seen;
                }
            }
            if (seen == q)
                full.store(true, std::memory_order_relaxed);
        }
#pragma omp critical
        for (std::uint32_t t = 0; t < q; ++t)
            mask[t] |= local[t];
    }
    return mask;
}

std::vector<std::uint64_t> dot_histogram(const Field& f, const Packed& a, const Packed& b)
{
    const std::uint32_t q = f.q();
    std::vector<std::uint64_t> hist(q, 0);
    const auto n = static_cast<std::int64_t>(a.count);

#pragma omp parallel
    {
        std::vector<std::uint64_t> local(q, 0);
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < n; ++i) {
            const Elem* x = a.row(static_cast<std::size_t>(i));
            for (std::size_t j = 0; j < b.count; ++j)
                ++local[detail::dot_raw(f, x, b.row(j), a.dim).value];
        }
#pragma omp critical
        for (std::uint32_t t = 0; t < q; ++t)
            hist[t] += local[t];
    }
    return hist;
}

} // namespace volset::kernels
