#include "hjj/linalg.hpp"

#include "hjj/errors.hpp"

#include <string>

namespace hjj {

namespace {

void require(bool ok, const char* what) {
    if (!ok)
        throw InvalidInput(what);
}

}  // namespace

Vector zero_vector(std::size_t n) {
    return Vector(n);
}

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector r = a;
    r += b;
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector r = a;
    r -= b;
    return r;
}

Vector operator-(const Vector& a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = s * v[i];
    return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
    require(a.size() == b.size(), "vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
    require(a.size() == b.size(), "vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

Scalar dot(const Vector& a, const Vector& b) {
    require(a.size() == b.size(), "vector length mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == c, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        require(cols[j].size() == rows, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

std::vector<Vector> Matrix::columns() const {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < cols_; ++j)
        out.push_back(column(j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), "matrix product shape mismatch");
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    require(a.cols() == v.size(), "matrix-vector shape mismatch");
    Vector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (v[k] != 0)
                r[i] += a(i, k) * v[k];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) += b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    return a + (-b);
}

Matrix operator-(const Matrix& a) {
    return Scalar(-1) * a;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) *= s;
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "hstack row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "vstack column mismatch");
    Matrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(a.rows() + i, j) = b(i, j);
    return r;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

RrefResult rref(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(row, j));
        Scalar inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Scalar f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
    return rref(a).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& a) {
    auto [r, pivots] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> image_basis(const Matrix& a) {
    std::vector<Vector> basis;
    for (auto p : rref(a).pivots)
        basis.push_back(a.column(p));
    return basis;
}

Scalar determinant(const Matrix& a) {
    require(a.is_square(), "determinant of a non-square matrix");
    Matrix m = a;
    Scalar det = 1;
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == 0)
                continue;
            Scalar f = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& a) {
    require(a.is_square(), "inverse of a non-square matrix");
    std::size_t n = a.rows();
    auto [r, pivots] = rref(hstack(a, Matrix::identity(n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = r(i, n + j);
    return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    require(a.rows() == b.size(), "right-hand side length mismatch");
    Matrix aug = hstack(a, Matrix::from_columns({b}, b.size()));
    auto [r, pivots] = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    Vector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = r(i, a.cols());
    return x;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
    Subspace s(ambient_dim);
    if (generators.empty())
        return s;
    for (const auto& g : generators)
        require(g.size() == ambient_dim, "generator length mismatch");
    Matrix m = Matrix::from_columns(generators, ambient_dim);
    for (auto p : rref(m).pivots)
        s.basis_.push_back(generators[p]);
    return s;
}

Subspace Subspace::whole(std::size_t n) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(unit_vector(n, i));
    return span(n, gens);
}

Matrix Subspace::basis_matrix() const {
    return Matrix::from_columns(basis_, ambient_);
}

bool Subspace::contains(const Vector& v) const {
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v))
            return false;
    return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    require(v.size() == ambient_, "vector length differs from ambient dimension");
    if (basis_.empty())
        return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
    return solve(basis_matrix(), v);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    auto gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), gens);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace(a.ambient_dim());
    Matrix m = hstack(a.basis_matrix(), -b.basis_matrix());
    std::vector<Vector> gens;
    for (const auto& k : kernel_basis(m)) {
        Vector coeffs(k.begin(), k.begin() + a.dim());
        gens.push_back(a.basis_matrix() * coeffs);
    }
    return Subspace::span(a.ambient_dim(), gens);
}

Subspace image(const Matrix& map, const Subspace& s) {
    std::vector<Vector> gens;
    for (const auto& v : s.basis())
        gens.push_back(map * v);
    return Subspace::span(map.rows(), gens);
}

Quotient::Quotient(const Subspace& big, const Subspace& small) : small_(small) {
    if (big.ambient_dim() != small.ambient_dim())
        throw InvalidInput("quotient of subspaces in different ambient spaces");
    for (std::size_t i = 0; i < small.basis().size(); ++i)
        if (!big.contains(small.basis()[i]))
            throw ContainmentViolation("basis vector " + std::to_string(i) +
                                       " of the subspace lies outside the ambient subspace");
    Subspace acc = small;
    for (const auto& v : big.basis()) {
        if (acc.contains(v))
            continue;
        representatives_.push_back(v);
        acc = sum(acc, Subspace::span(big.ambient_dim(), {v}));
    }
    auto cols = small.basis();
    cols.insert(cols.end(), representatives_.begin(), representatives_.end());
    combined_ = Matrix::from_columns(cols, big.ambient_dim());
}

Vector Quotient::class_coordinates(const Vector& v) const {
    auto x = combined_.cols() == 0 ? (is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt)
                                   : solve(combined_, v);
    if (!x)
        throw ContainmentViolation("vector lies outside the ambient subspace");
    return Vector(x->begin() + small_.dim(), x->end());
}

}  // namespace hjj
