#include "hjj/algebra.hpp"

#include "hjj/errors.hpp"

namespace hjj {

Algebra::Algebra(Multilinear bracket, Matrix alpha, std::vector<std::string> labels)
    : bracket_(std::move(bracket)), alpha_(std::move(alpha)), labels_(std::move(labels)) {
    std::size_t n = alpha_.rows();
    if (!alpha_.is_square())
        throw InvalidInput("twist matrix must be square");
    if (bracket_.degree() != 2 || bracket_.dim() != n || bracket_.vdim() != n)
        throw InvalidInput("structure constants must have shape dim x dim x dim");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (bracket_.value({i, j}) != bracket_.value({j, i}))
                throw InvalidInput("bracket is not symmetric at (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ")");
    if (labels_.empty())
        for (std::size_t i = 0; i < n; ++i)
            labels_.push_back("e" + std::to_string(i + 1));
    if (labels_.size() != n)
        throw InvalidInput("label count differs from dimension");
}

Algebra Algebra::from_products(std::size_t dim, const std::vector<Product>& products, Matrix alpha) {
    Multilinear b(2, dim, dim);
    for (const auto& p : products)
        b.set_symmetric({p.i, p.j}, p.value);
    return Algebra(std::move(b), std::move(alpha));
}

Vector Algebra::bracket(const Vector& x, const Vector& y) const {
    return bracket_.eval({x, y});
}

Matrix Algebra::ad(const Vector& x) const {
    std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector col = bracket(x, basis(j));
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = col[i];
    }
    return m;
}

CheckReport check_hom_jacobi(const Algebra& a) {
    CheckReport r{"hom-jacobi", {}};
    for (const auto& t : sorted_tuples(a.dim(), 3)) {
        Vector x = a.basis(t[0]), y = a.basis(t[1]), z = a.basis(t[2]);
        Vector res = a.bracket(a.twist(x), a.bracket(y, z)) + a.bracket(a.twist(y), a.bracket(z, x)) +
                     a.bracket(a.twist(z), a.bracket(x, y));
        if (!is_zero(res))
            r.add(t, res);
    }
    return r;
}

CheckReport check_multiplicative(const Algebra& a) {
    CheckReport r{"multiplicative", {}};
    for (const auto& t : sorted_tuples(a.dim(), 2)) {
        Vector x = a.basis(t[0]), y = a.basis(t[1]);
        Vector res = a.bracket(a.twist(x), a.twist(y)) - a.twist(a.bracket(x, y));
        if (!is_zero(res))
            r.add(t, res);
    }
    return r;
}

bool is_invertible_twist(const Algebra& a) {
    return determinant(a.twist()) != 0;
}

bool is_regular(const Algebra& a) {
    return is_invertible_twist(a) && check_multiplicative(a).passed();
}

Subspace bracket_span(const Algebra& a, const Subspace& x, const Subspace& y) {
    std::vector<Vector> gens;
    for (const auto& u : x.basis())
        for (const auto& v : y.basis())
            gens.push_back(a.bracket(u, v));
    return Subspace::span(a.dim(), gens);
}

std::vector<Subspace> derived_series(const Algebra& a) {
    std::vector<Subspace> series{Subspace::whole(a.dim())};
    for (;;) {
        Subspace next = bracket_span(a, series.back(), series.back());
        if (next.dim() == series.back().dim())
            break;
        series.push_back(next);
        if (next.dim() == 0)
            break;
    }
    return series;
}

std::optional<std::size_t> solvable_index(const Algebra& a) {
    auto s = derived_series(a);
    if (s.back().dim() != 0)
        return std::nullopt;
    return s.size() - 1;
}

Subspace center(const Algebra& a) {
    std::size_t n = a.dim();
    // Row (j, k) of the system: sum_i x_i c(i, j, k) = 0.
    Matrix m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                m(j * n + k, i) = a.c(i, j, k);
    return Subspace::span(n, kernel_basis(m));
}

bool is_twist_stable(const Algebra& a, const Subspace& s) {
    for (const auto& v : s.basis())
        if (!s.contains(a.twist(v)))
            return false;
    return true;
}

bool is_ideal(const Algebra& a, const Subspace& s) {
    return is_twist_stable(a, s) && s.contains(bracket_span(a, s, Subspace::whole(a.dim())));
}

bool is_abelian(const Algebra& a) {
    return a.structure().is_zero();
}

CheckReport check_homomorphism(const Algebra& a, const Algebra& b, const Matrix& phi) {
    if (phi.rows() != b.dim() || phi.cols() != a.dim())
        throw InvalidInput("homomorphism matrix has the wrong shape");
    CheckReport r{"homomorphism", {}};
    for (const auto& t : sorted_tuples(a.dim(), 2)) {
        Vector x = a.basis(t[0]), y = a.basis(t[1]);
        Vector res = phi * a.bracket(x, y) - b.bracket(phi * x, phi * y);
        if (!is_zero(res))
            r.add(t, res, "(bracket)");
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vector x = a.basis(i);
        Vector res = phi * a.twist(x) - b.twist(phi * x);
        if (!is_zero(res))
            r.add({i}, res, "(twist)");
    }
    return r;
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
    auto pinv = inverse(p);
    if (!pinv)
        throw InvalidInput("change of basis matrix is singular");
    std::size_t n = a.dim();
    Multilinear b(2, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b.set({i, j}, *pinv * a.bracket(p.column(i), p.column(j)));
    return Algebra(std::move(b), *pinv * a.twist() * p);
}

Vector characteristic_polynomial(const Matrix& m) {
    if (!m.is_square())
        throw InvalidInput("characteristic polynomial of a non-square matrix");
    std::size_t n = m.rows();
    Vector c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + c[n - k + 1] * Matrix::identity(n);
        Matrix am = m * mk;
        Scalar tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / Scalar(static_cast<long>(k));
    }
    return c;
}

Vector minimal_polynomial(const Matrix& m) {
    if (!m.is_square())
        throw InvalidInput("minimal polynomial of a non-square matrix");
    std::size_t n = m.rows();
    std::vector<Vector> powers;
    Matrix p = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vector flat = p.data();
        if (!powers.empty()) {
            auto x = solve(Matrix::from_columns(powers, n * n), flat);
            if (x) {
                Vector coeffs(k + 1);
                for (std::size_t i = 0; i < k; ++i)
                    coeffs[i] = -(*x)[i];
                coeffs[k] = 1;
                return coeffs;
            }
        }
        powers.push_back(flat);
        p = p * m;
    }
    throw Error("minimal polynomial exceeded the matrix size");
}

std::string Invariants::to_string() const {
    std::string s = "derived dims [";
    for (std::size_t i = 0; i < derived_dims.size(); ++i)
        s += (i ? "," : "") + std::to_string(derived_dims[i]);
    s += "], center " + std::to_string(center_dim) + ", charpoly " + format_vector(charpoly) +
         ", minpoly " + format_vector(minpoly) + ", bracket rank " + std::to_string(bracket_rank);
    return s;
}

Invariants isomorphism_invariants(const Algebra& a) {
    Invariants inv;
    for (const auto& d : derived_series(a))
        inv.derived_dims.push_back(d.dim());
    inv.center_dim = center(a).dim();
    inv.charpoly = characteristic_polynomial(a.twist());
    inv.minpoly = minimal_polynomial(a.twist());
    auto pairs = sorted_tuples(a.dim(), 2);
    std::vector<Vector> cols;
    for (const auto& t : pairs)
        cols.push_back(a.bracket(t[0], t[1]));
    inv.bracket_rank = rank(Matrix::from_columns(cols, a.dim()));
    return inv;
}

}  // namespace hjj
