#pragma once

#include "hjj/scalar.hpp"

#include <optional>
#include <vector>

namespace hjj {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& d);
    static Matrix from_rows(const std::vector<Vector>& rows);
    /// Columns must all have length `rows`; `rows` is needed when `cols` is empty.
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> columns() const;
    Matrix transpose() const;
    bool is_zero() const;
    /// Row-major entries.
    const std::vector<Scalar>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Scalar& s, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; each pivot is the leftmost nonzero column
/// among the remaining rows, and the first such row is swapped up.
RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);
std::vector<Vector> kernel_basis(const Matrix& a);
/// Basis of the column space, taken from the pivot columns of `a`.
std::vector<Vector> image_basis(const Matrix& a);
Scalar determinant(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
/// Some x with a x = b, or nothing when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

    /// Keeps an independent subset of `generators` as the basis.
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
    static Subspace whole(std::size_t n);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    Matrix basis_matrix() const;

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coefficients of `v` in the basis.
    std::optional<Vector> coordinates(const Vector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
    }

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// Image of a subspace under a linear map.
Subspace image(const Matrix& map, const Subspace& s);

/// big / small, with coset representatives completing a basis of small to one of big.
class Quotient {
public:
    Quotient(const Subspace& big, const Subspace& small);

    std::size_t dim() const { return representatives_.size(); }
    const std::vector<Vector>& representatives() const { return representatives_; }
    /// Coordinates of the class of `v` against the representatives; throws
    /// ContainmentViolation when `v` is outside `big`.
    Vector class_coordinates(const Vector& v) const;

private:
    Subspace small_;
    std::vector<Vector> representatives_;
    Matrix combined_;
};

}  // namespace hjj
