#pragma once

// Brute-force reference implementations used only by the tests. They avoid
// the library's elimination and wedge code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "volset/field.hpp"
#include "volset/linalg.hpp"
#include "volset/pointset.hpp"

namespace oracle {

using namespace volset;

// GF(p^k) by explicit polynomial arithmetic on coefficient vectors.
struct PolyField {
    std::uint32_t p, k, q;
    std::vector<std::uint32_t> mod; // monic, low degree first

    PolyField(std::uint32_t p_, std::uint32_t k_, std::vector<std::uint32_t> m) : p(p_), k(k_), q(1), mod(std::move(m))
    {
        for (std::uint32_t i = 0; i < k; ++i)
            q *= p;
    }

    std::vector<std::uint32_t> digits(std::uint32_t a) const
    {
        std::vector<std::uint32_t> c(k);
        for (auto& x : c) {
            x = a % p;
            a /= p;
        }
        return c;
    }

    std::uint32_t pack(const std::vector<std::uint32_t>& c) const
    {
        std::uint32_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            v = v * p + c[i];
        return v;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        auto x = digits(a), y = digits(b);
        for (std::uint32_t i = 0; i < k; ++i)
            x[i] = (x[i] + y[i]) % p;
        return pack(x);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        const auto x = digits(a), y = digits(b);
        std::vector<std::uint64_t> prod(2 * k, 0);
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j)
                prod[i + j] = (prod[i + j] + std::uint64_t(x[i]) * y[j]) % p;
        if (k > 1)
            for (std::size_t deg = 2 * k - 1; deg >= k; --deg) {
                const auto c = prod[deg];
                if (c == 0)
                    continue;
                // subtract c * x^{deg-k} * mod
                for (std::uint32_t i = 0; i <= k; ++i)
                    prod[deg - k + i] = (prod[deg - k + i] + (p - c) * mod[i]) % p;
            }
        std::vector<std::uint32_t> r(k);
        for (std::uint32_t i = 0; i < k; ++i)
            r[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(r);
    }
};

inline Elem laplace_det(const Field& f, const std::vector<Vector>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return Field::one();
    if (n == 1)
        return m[0][0];
    Elem s = Field::zero();
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Vector> minor;
        for (std::size_t r = 1; r < n; ++r) {
            Vector row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        const Elem term = f.mul(m[0][c], laplace_det(f, minor));
        s = c % 2 ? f.sub(s, term) : f.add(s, term);
    }
    return s;
}

// Cofactor vector: coordinate j is the determinant of the d x d matrix with
// e_j as the first row, expanded by Laplace.
inline Vector cofactor_wedge(const Field& f, const std::vector<Vector>& rows)
{
    const std::size_t d = rows.size() + 1;
    Vector w(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Vector> m{Vector(d, Field::zero())};
        m[0][j] = Field::one();
        m.insert(m.end(), rows.begin(), rows.end());
        w[j] = laplace_det(f, m);
    }
    return w;
}

// Calls fn on every ordered m-tuple of the points.
inline void for_each_tuple(const std::vector<Vector>& pts, std::size_t m,
                           const std::function<void(const std::vector<Vector>&)>& fn)
{
    std::vector<Vector> cur;
    std::function<void()> rec = [&] {
        if (cur.size() == m) {
            fn(cur);
            return;
        }
        for (const auto& x : pts) {
            cur.push_back(x);
            rec();
            cur.pop_back();
        }
    };
    rec();
}

inline std::set<std::uint32_t> volume_set(const Field& f, const std::vector<Vector>& pts, std::size_t d)
{
    std::set<std::uint32_t> out;
    for_each_tuple(pts, d, [&](const auto& t) { out.insert(laplace_det(f, t).value); });
    return out;
}

inline std::set<std::uint32_t> dstar(const Field& f, const std::vector<Vector>& coords, std::size_t k)
{
    std::set<std::uint32_t> out;
    for_each_tuple(coords, k, [&](const auto& t) {
        const auto v = laplace_det(f, t).value;
        if (v)
            out.insert(v);
    });
    return out;
}

inline std::set<Vector> cross_set(const Field& f, const std::vector<Vector>& pts, std::size_t d)
{
    std::set<Vector> out;
    for_each_tuple(pts, d - 1, [&](const auto& t) {
        auto w = cofactor_wedge(f, t);
        if (!is_zero(w))
            out.insert(std::move(w));
    });
    return out;
}

inline Elem form_value(const Field& f, const std::vector<Vector>& m, const Vector& x, const Vector& y)
{
    Elem s = Field::zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            s = f.add(s, f.mul(x[i], f.mul(m[i][j], y[j])));
    return s;
}

// Solve x = sum c_i b_i by trying every coefficient vector.
inline std::optional<Vector> coords_by_search(const Field& f, const std::vector<Vector>& basis, const Vector& x)
{
    const std::size_t k = basis.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= f.q();
    for (std::uint64_t code = 0; code < total; ++code) {
        const Vector c = decode_point(f.q(), k, code);
        Vector y(x.size(), Field::zero());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < x.size(); ++j)
                y[j] = f.add(y[j], f.mul(c[i], basis[i][j]));
        if (y == x)
            return c;
    }
    return std::nullopt;
}

// Set of points spanned by the generators, as sorted codes.
inline std::vector<std::uint64_t> span_codes(const Field& f, const std::vector<Vector>& gens, std::size_t d)
{
    std::set<std::uint64_t> out;
    const std::size_t k = gens.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= f.q();
    for (std::uint64_t code = 0; code < total; ++code) {
        const Vector c = decode_point(f.q(), k, code);
        Vector y(d, Field::zero());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < d; ++j)
                y[j] = f.add(y[j], f.mul(c[i], gens[i][j]));
        out.insert(encode_point(f.q(), y));
    }
    return {out.begin(), out.end()};
}

// |G(k,d)| as (#ordered bases of k-subspaces) / |GL_k|.
inline std::uint64_t gaussian_by_bases(std::size_t k, std::size_t d, std::uint64_t q)
{
    unsigned __int128 num = 1, den = 1, qd = 1, qk = 1;
    for (std::size_t i = 0; i < d; ++i)
        qd *= q;
    for (std::size_t i = 0; i < k; ++i)
        qk *= q;
    unsigned __int128 qi = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= qd - qi;
        den *= qk - qi;
        qi *= q;
    }
    return static_cast<std::uint64_t>(num / den);
}

} // namespace oracle
