#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "volset/field.hpp"

namespace volset {

using Vector = std::vector<Elem>;

class LinalgError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over F_q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(std::span<const Vector> rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    std::vector<Vector> to_rows() const;

    std::span<Elem> data() { return data_; }
    std::span<const Elem> data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

Elem dot(const Field& f, const Vector& u, const Vector& v);

Vector add(const Field& f, const Vector& u, const Vector& v);
Vector scale(const Field& f, Elem c, const Vector& v);
bool is_zero(const Vector& v);

/// Determinant by elimination; the pivot is the first nonzero entry of the
/// column scanning top-down.
Elem det(const Field& f, Matrix m);

/// Generalized cross product of d-1 vectors of dimension d: coordinate j is
/// (-1)^j (zero-based) times the minor with column j deleted.
Vector wedge(const Field& f, std::span<const Vector> rows);

/// x^1 . (x^2 ^ ... ^ x^d).
Elem vol(const Field& f, std::span<const Vector> rows);

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Vector multiply(const Field& f, const Matrix& a, const Vector& x);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> inverse(const Field& f, Matrix m);

/// B(x, y) = x^T M y with M nonsingular.
class BilinearForm {
public:
    BilinearForm(const Field& f, Matrix gram);

    static BilinearForm dot_form(const Field& f, std::size_t d);

    std::size_t dim() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }
    bool is_dot() const { return gram_ == Matrix::identity(gram_.rows()); }

    Elem eval(const Field& f, const Vector& x, const Vector& y) const;

    /// M y, so that B(x, y) = x . (M y).
    Vector apply_right(const Field& f, const Vector& y) const;

private:
    Matrix gram_;
};

namespace detail {

/// Determinant of the n x n row-major block at a; destroys a.
Elem det_inplace(const Field& f, Elem* a, std::size_t n);

/// Wedge of the (d-1) x d row-major block at rows into out[0..d).
void wedge_into(const Field& f, const Elem* rows, std::size_t d, Elem* out);

inline Elem dot_raw(const Field& f, const Elem* u, const Elem* v, std::size_t d)
{
    Elem s = Field::zero();
    for (std::size_t i = 0; i < d; ++i)
        s = f.add(s, f.mul(u[i], v[i]));
    return s;
}

inline constexpr std::size_t kMaxDim = 8;

} // namespace detail

} // namespace volset
