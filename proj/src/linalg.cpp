#include "volset/linalg.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace volset {

Matrix Matrix::from_rows(std::span<const Vector> rows)
{
    if (rows.empty())
        return Matrix{};
    const std::size_t cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw LinalgError("rows of unequal length");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Field::one();
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Vector> Matrix::to_rows() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r));
    return out;
}

Elem dot(const Field& f, const Vector& u, const Vector& v)
{
    if (u.size() != v.size())
        throw LinalgError("dot: dimension mismatch");
    return detail::dot_raw(f, u.data(), v.data(), u.size());
}

Vector add(const Field& f, const Vector& u, const Vector& v)
{
    if (u.size() != v.size())
        throw LinalgError("add: dimension mismatch");
    Vector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = f.add(u[i], v[i]);
    return out;
}

Vector scale(const Field& f, Elem c, const Vector& v)
{
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = f.mul(c, v[i]);
    return out;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == Field::zero(); });
}

namespace detail {

Elem det_inplace(const Field& f, Elem* a, std::size_t n)
{
    Elem result = Field::one();
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col] == Field::zero())
            ++pivot;
        if (pivot == n)
            return Field::zero();
        if (pivot != col) {
            std::swap_ranges(a + pivot * n, a + pivot * n + n, a + col * n);
            negate = !negate;
        }
        const Elem pv = a[col * n + col];
        result = f.mul(result, pv);
        const Elem pinv = f.inv(pv);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Elem factor = f.mul(a[r * n + col], pinv);
            if (factor == Field::zero())
                continue;
            for (std::size_t c = col; c < n; ++c)
                a[r * n + c] = f.sub(a[r * n + c], f.mul(factor, a[col * n + c]));
        }
    }
    return negate ? f.neg(result) : result;
}

void wedge_into(const Field& f, const Elem* rows, std::size_t d, Elem* out)
{
    switch (d) {
    case 1:
        out[0] = Field::one();
        return;
    case 2:
        out[0] = rows[1];
        out[1] = f.neg(rows[0]);
        return;
    case 3: {
        const Elem* a = rows;
        const Elem* b = rows + 3;
        out[0] = f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1]));
        out[1] = f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2]));
        out[2] = f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
        return;
    }
    case 4: {
        const Elem* a = rows;
        const Elem* b = rows + 4;
        const Elem* c = rows + 8;
        // 2x2 minors of the last two rows
        auto m = [&](int i, int j) { return f.sub(f.mul(b[i], c[j]), f.mul(b[j], c[i])); };
        const Elem m01 = m(0, 1), m02 = m(0, 2), m03 = m(0, 3);
        const Elem m12 = m(1, 2), m13 = m(1, 3), m23 = m(2, 3);
        auto minor3 = [&](int x, int y, int z, Elem myz, Elem mxz, Elem mxy) {
            return f.add(f.sub(f.mul(a[x], myz), f.mul(a[y], mxz)), f.mul(a[z], mxy));
        };
        out[0] = minor3(1, 2, 3, m23, m13, m12);
        out[1] = f.neg(minor3(0, 2, 3, m23, m03, m02));
        out[2] = minor3(0, 1, 3, m13, m03, m01);
        out[3] = f.neg(minor3(0, 1, 2, m12, m02, m01));
        return;
    }
    default:
        break;
    }

    const std::size_t n = d - 1;
    std::array<Elem, kMaxDim * kMaxDim> minor{};
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t c2 = 0;
            for (std::size_t c = 0; c < d; ++c)
                if (c != j)
                    minor[r * n + c2++] = rows[r * d + c];
        }
        const Elem m = det_inplace(f, minor.data(), n);
        out[j] = (j % 2 == 0) ? m : f.neg(m);
    }
}

} // namespace detail

Elem det(const Field& f, Matrix m)
{
    if (!m.square())
        throw LinalgError("det: matrix is not square");
    return detail::det_inplace(f, m.data().data(), m.rows());
}

Vector wedge(const Field& f, std::span<const Vector> rows)
{
    const std::size_t d = rows.size() + 1;
    if (d > detail::kMaxDim)
        throw LinalgError("wedge: dimension exceeds " + std::to_string(detail::kMaxDim));
    for (const auto& r : rows)
        if (r.size() != d)
            throw LinalgError("wedge: expected " + std::to_string(d - 1) + " vectors of dimension " +
                              std::to_string(d));
    std::array<Elem, detail::kMaxDim * detail::kMaxDim> flat{};
    for (std::size_t r = 0; r < rows.size(); ++r)
        std::copy(rows[r].begin(), rows[r].end(), flat.begin() + r * d);
    Vector out(d);
    detail::wedge_into(f, flat.data(), d, out.data());
    return out;
}

Elem vol(const Field& f, std::span<const Vector> rows)
{
    if (rows.empty())
        throw LinalgError("vol: no vectors");
    const std::size_t d = rows.size();
    for (const auto& r : rows)
        if (r.size() != d)
            throw LinalgError("vol: need d vectors of dimension d");
    return dot(f, rows.front(), wedge(f, rows.subspan(1)));
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw LinalgError("multiply: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Elem s = Field::zero();
            for (std::size_t k = 0; k < a.cols(); ++k)
                s = f.add(s, f.mul(a(i, k), b(k, j)));
            out(i, j) = s;
        }
    return out;
}

Vector multiply(const Field& f, const Matrix& a, const Vector& x)
{
    if (a.cols() != x.size())
        throw LinalgError("multiply: shape mismatch");
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Elem s = Field::zero();
        for (std::size_t k = 0; k < a.cols(); ++k)
            s = f.add(s, f.mul(a(i, k), x[k]));
        out[i] = s;
    }
    return out;
}

std::optional<Matrix> inverse(const Field& f, Matrix m)
{
    if (!m.square())
        throw LinalgError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == Field::zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m(pivot, c), m(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        const Elem pinv = f.inv(m(col, col));
        for (std::size_t c = 0; c < n; ++c) {
            m(col, c) = f.mul(m(col, c), pinv);
            inv(col, c) = f.mul(inv(col, c), pinv);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col) == Field::zero())
                continue;
            const Elem factor = m(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) = f.sub(m(r, c), f.mul(factor, m(col, c)));
                inv(r, c) = f.sub(inv(r, c), f.mul(factor, inv(col, c)));
            }
        }
    }
    return inv;
}

BilinearForm::BilinearForm(const Field& f, Matrix gram) : gram_(std::move(gram))
{
    if (!gram_.square() || gram_.rows() == 0)
        throw LinalgError("bilinear form: Gram matrix must be square");
    for (Elem e : gram_.data())
        if (!f.valid(e))
            throw LinalgError("bilinear form: entry out of range");
    if (det(f, gram_) == Field::zero())
        throw LinalgError("bilinear form: Gram matrix is singular (degenerate form)");
}

BilinearForm BilinearForm::dot_form(const Field& f, std::size_t d)
{
    return BilinearForm(f, Matrix::identity(d));
}

Elem BilinearForm::eval(const Field& f, const Vector& x, const Vector& y) const
{
    if (x.size() != dim() || y.size() != dim())
        throw LinalgError("bilinear form: dimension mismatch");
    return dot(f, x, apply_right(f, y));
}

Vector BilinearForm::apply_right(const Field& f, const Vector& y) const
{
    return multiply(f, gram_, y);
}

} // namespace volset
