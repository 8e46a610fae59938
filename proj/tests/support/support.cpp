#include "support.hpp"

#include <algorithm>

namespace hjj::testing {

int Rng::integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
}

bool Rng::chance(double p) {
    return std::bernoulli_distribution(p)(gen_);
}

Scalar Rng::scalar() {
    if (chance(0.25))
        return make_scalar(integer(-6, 6), 2);
    return integer(-3, 3);
}

Scalar Rng::nonzero_scalar() {
    Scalar x;
    do
        x = scalar();
    while (x == 0);
    return x;
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols, double density) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (chance(density))
                m(i, j) = scalar();
    return m;
}

Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> out;
    for (const auto& r : rows) {
        Vector v;
        for (long x : r)
            v.push_back(Scalar(x));
        out.push_back(v);
    }
    return Matrix::from_rows(out);
}

Matrix scalar_matrix(const Scalar& x) {
    return Matrix::diagonal({x});
}

Algebra abelian(const Matrix& alpha) {
    return Algebra(Multilinear(2, alpha.rows(), alpha.rows()), alpha);
}

Algebra j111(const Scalar& a) {
    return Algebra::from_products(2, {{0, 0, {0, 1}}}, Matrix::diagonal({a, a * a}));
}

Algebra j211() {
    return Algebra::from_products(2, {{1, 1, {1, 0}}}, mat({{1, 1}, {0, 1}}));
}

Representation zero_rep(const Algebra& a, const Matrix& beta) {
    return Representation(a, std::vector<Matrix>(a.dim(), Matrix(beta.rows(), beta.rows())), beta);
}

Representation adjoint_rep(const Algebra& a) {
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < a.dim(); ++i)
        rho.push_back(a.ad(a.basis(i)));
    return Representation(a, rho, a.twist());
}

Multilinear cochain1(std::size_t dim, std::size_t vdim, const std::vector<std::pair<std::size_t, Vector>>& values) {
    Multilinear f(1, dim, vdim);
    for (const auto& [i, v] : values)
        f.set({i}, v);
    return f;
}

Multilinear sym2(std::size_t dim, std::size_t vdim,
                 const std::vector<std::pair<std::vector<std::size_t>, Vector>>& values) {
    Multilinear f(2, dim, vdim);
    for (const auto& [idx, v] : values)
        f.set_symmetric(idx, v);
    return f;
}

const std::vector<Algebra>& multiplicative_pool() {
    static const std::vector<Algebra> pool = [] {
        std::vector<Algebra> out;
        std::vector<Scalar> grid{-2, -1, 1, 2, 3, make_scalar(1, 2)};
        for (const auto& e : catalog_list())
            for (const auto& p : grid_points(e.parameters, grid)) {
                Algebra a = instantiate(e, p);
                if (oracle::hom_jacobi(a) && oracle::multiplicative(a))
                    out.push_back(a);
            }
        for (const auto& x : grid) {
            out.push_back(abelian(Matrix::diagonal({x})));
            out.push_back(abelian(Matrix::diagonal({x, x * x})));
            out.push_back(abelian(mat({{1, 1}, {0, 1}})));
            out.push_back(abelian(Matrix::diagonal({x, -x, 1})));
        }
        return out;
    }();
    return pool;
}

Matrix random_invertible(std::size_t n, Rng& rng) {
    while (true) {
        Matrix p = Matrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rng.chance(0.4))
                    p(i, j) = rng.integer(-2, 2);
        if (determinant(p) != 0)
            return p;
    }
}

Representation transport(const Representation& r, const Matrix& p) {
    Algebra b = change_basis(r.algebra(), p);
    std::vector<Matrix> rho;
    for (std::size_t j = 0; j < p.cols(); ++j)
        rho.push_back(r.rho(p.column(j)));
    return Representation(b, rho, r.beta());
}

Algebra random_hom_jacobi_algebra(Rng& rng, bool multiplicative) {
    while (true) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
        Multilinear br(2, n, n);
        for (const auto& t : sorted_tuples(n, 2)) {
            Vector v(n);
            for (auto& x : v)
                if (rng.chance(0.3))
                    x = rng.integer(-1, 1);
            br.set_symmetric(t, v);
        }
        Matrix alpha(n, n);
        if (rng.chance(0.5)) {
            for (std::size_t i = 0; i < n; ++i)
                alpha(i, i) = rng.pick(std::vector<Scalar>{1, -1, 2, make_scalar(1, 2)});
        } else {
            alpha = rng.matrix(n, n, 0.5);
        }
        Algebra a(br, alpha);
        if (!is_abelian(a) && oracle::hom_jacobi(a) && (!multiplicative || oracle::multiplicative(a)))
            return a;
    }
}

namespace {

std::vector<Scalar> eigen_candidates(const Algebra& a) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.push_back(a.twist()(i, i));
        for (std::size_t j = i; j < a.dim(); ++j)
            out.push_back(a.twist()(i, i) * a.twist()(j, j));
    }
    return out;
}

Representation zero_action(Rng& rng) {
    const Algebra& a = rng.pick(multiplicative_pool());
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 2));
    auto eig = eigen_candidates(a);
    Matrix beta(m, m);
    if (rng.chance(0.15)) {
        beta = rng.matrix(m, m);
    } else {
        for (std::size_t i = 0; i < m; ++i)
            beta(i, i) = rng.pick(eig);
        if (m == 2 && rng.chance(0.3)) {
            beta(1, 1) = beta(0, 0);
            beta(0, 1) = 1;
        }
    }
    return zero_rep(a, beta);
}

Representation square_zero_action(Rng& rng) {
    Scalar a = rng.nonzero_scalar();
    Scalar r = rng.nonzero_scalar();
    Scalar y = rng.nonzero_scalar();
    Matrix act = Matrix::from_rows({{0, y}, {0, 0}});
    Matrix beta = Matrix::from_rows({{a * r, rng.scalar()}, {0, r}});
    Matrix q = random_invertible(2, rng);
    Matrix qi = *inverse(q);
    act = q * act * qi;
    beta = q * beta * qi;
    if (rng.chance(0.5))
        return Representation(abelian(Matrix::diagonal({a})), {act}, beta);
    Scalar c = rng.scalar();
    return Representation(abelian(Matrix::diagonal({a, a})), {act, c * act}, beta);
}

}  // namespace

Instance random_representation(Rng& rng) {
    while (true) {
        Instance out;
        int kind = rng.integer(0, 11);
        if (kind >= 10) {
            Algebra a = random_hom_jacobi_algebra(rng, true);
            if (kind == 10 && a.dim() <= 2)
                out = {adjoint_rep(a), "random algebra, adjoint"};
            else
                out = {zero_rep(a, scalar_matrix(rng.pick(eigen_candidates(a)))), "random algebra, zero action"};
        } else if (kind <= 5) {
            out = {zero_action(rng), "zero action"};
        } else if (kind <= 7) {
            std::vector<Algebra> small;
            for (const auto& a : multiplicative_pool())
                if (a.dim() <= 2)
                    small.push_back(a);
            out = {adjoint_rep(rng.pick(small)), "adjoint"};
        } else {
            out = {square_zero_action(rng), "square-zero action"};
        }
        if (rng.chance(0.4)) {
            out.rep = transport(out.rep, random_invertible(out.rep.algebra().dim(), rng));
            out.origin += ", basis change";
        }
        if (oracle::is_representation(out.rep))
            return out;
    }
}

Vector random_element(const Subspace& s, Rng& rng) {
    Vector v(s.ambient_dim());
    for (const auto& b : s.basis())
        v = v + rng.scalar() * b;
    return v;
}

Multilinear random_cochain1(const Representation& r, Rng& rng) {
    return from_symmetric_coordinates(random_element(cochain1_space(r), rng), 1, r.algebra().dim(), r.vdim());
}

Multilinear random_cochain2(const Representation& r, Rng& rng) {
    return from_symmetric_coordinates(random_element(cochain2_space(r), rng), 2, r.algebra().dim(), r.vdim());
}

QuadraticRepresentation empty_module(const Algebra& a) {
    std::vector<Matrix> rho(a.dim(), Matrix(0, 0));
    return QuadraticRepresentation(Representation(a, rho, Matrix(0, 0)), Matrix(0, 0));
}

std::vector<Matrix> compatible_forms(const Representation& r) {
    std::size_t m = r.vdim();
    std::vector<Matrix> constraints{Matrix::identity(m), r.beta()};
    for (const auto& rho : r.rho_matrices())
        constraints.push_back(rho);
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t c = 0; c < constraints.size(); ++c)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<Scalar> row(m * m);
                for (std::size_t k = 0; k < m * m; ++k) {
                    Matrix g(m, m);
                    g(k / m, k % m) = 1;
                    Matrix res = c == 0 ? g - g.transpose() : g * constraints[c] - constraints[c].transpose() * g;
                    row[k] = res(i, j);
                }
                rows.push_back(row);
            }
    std::vector<Matrix> out;
    for (const auto& k : oracle::kernel(rows, m * m)) {
        Matrix g(m, m);
        for (std::size_t i = 0; i < m * m; ++i)
            g(i / m, i % m) = k[i];
        out.push_back(g);
    }
    return out;
}

std::optional<QuadraticRepresentation> random_quadratic(const Representation& r, Rng& rng) {
    std::vector<Matrix> forms = compatible_forms(r);
    if (forms.empty())
        return std::nullopt;
    for (int attempt = 0; attempt < 4; ++attempt) {
        Matrix g(r.vdim(), r.vdim());
        for (const auto& f : forms)
            g = g + rng.nonzero_scalar() * f;
        if (determinant(g) != 0)
            return QuadraticRepresentation(r, g);
    }
    return std::nullopt;
}

QuadraticRepresentation random_complex_instance(Rng& rng, std::size_t& attempts) {
    while (true) {
        ++attempts;
        Instance inst = random_representation(rng);
        if (!oracle::coadjoint(inst.rep.algebra()) || !check_dc_complex_conditions(inst.rep).passed())
            continue;
        if (auto q = random_quadratic(inst.rep, rng))
            return *q;
    }
}

ScalarForm random_skew_balanced(const Algebra& a, Rng& rng) {
    ScalarForm s = make_form(2, a.dim());
    s.data() = random_element(skew_balanced_forms(a), rng);
    return s;
}

Matrix random_nondegenerate_symmetric(std::size_t n, Rng& rng) {
    while (true) {
        Matrix s = rng.matrix(n, n, 0.6);
        Matrix g = s + s.transpose();
        if (determinant(g) != 0)
            return g;
    }
}

MetricAlgebra transport(const MetricAlgebra& m, const Matrix& p) {
    return MetricAlgebra(change_basis(m.algebra(), p), p.transpose() * m.form() * p);
}

namespace {

/// Bracket read off a symmetric trilinear form through B([x,y],z) = gamma(x,y,z),
/// twist self-adjoint for B.
std::optional<MetricAlgebra> metric_from_gamma(Rng& rng) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    Matrix g = rng.chance(0.5) ? Matrix::identity(n) : random_nondegenerate_symmetric(n, rng);
    Matrix ginv = *inverse(g);
    ScalarForm gamma = make_form(3, n);
    for (const auto& t : sorted_tuples(n, 3))
        if (rng.chance(0.25))
            gamma.set_symmetric(t, {Scalar(rng.integer(-1, 1))});
    Multilinear br(2, n, n);
    for (const auto& t : br.tuples()) {
        Vector row(n);
        for (std::size_t k = 0; k < n; ++k)
            row[k] = gamma.at({t[0], t[1], k});
        Vector v = ginv * row;
        for (std::size_t k = 0; k < n; ++k)
            br.at(t, k) = v[k];
    }
    Matrix s = rng.matrix(n, n, 0.5);
    Matrix alpha = ginv * (s + s.transpose());
    if (rng.chance(0.3))
        alpha = Matrix::identity(n);
    Algebra a(br, alpha);
    if (!oracle::hom_jacobi(a))
        return std::nullopt;
    return MetricAlgebra(a, g);
}

/// Random Hom-Jacobi algebra with a Hom-invariant form that is usually not invariant.
std::optional<MetricAlgebra> balanced_form_on_random_algebra(Rng& rng) {
    Algebra a = random_hom_jacobi_algebra(rng);
    Subspace bal = balanced_forms(a);
    if (bal.dim() == 0)
        return std::nullopt;
    std::size_t n = a.dim();
    Vector f = random_element(bal, rng);
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = f[i * n + j] + f[j * n + i];
    if (determinant(g) == 0)
        return std::nullopt;
    return MetricAlgebra(a, g);
}

std::optional<MetricAlgebra> trivial_twofold(Rng& rng) {
    const Algebra& a = rng.pick(multiplicative_pool());
    if (a.dim() > 2 || !oracle::coadjoint(a))
        return std::nullopt;
    return build_twofold(empty_module(a), Multilinear(2, a.dim(), 0), make_form(3, a.dim()));
}

}  // namespace

MetricInstance random_metric_instance(Rng& rng) {
    while (true) {
        int kind = rng.integer(0, 2);
        std::optional<MetricAlgebra> m;
        std::string origin;
        if (kind == 0) {
            m = metric_from_gamma(rng);
            origin = "gamma";
        } else if (kind == 1) {
            m = balanced_form_on_random_algebra(rng);
            origin = "balanced form";
        } else {
            m = trivial_twofold(rng);
            origin = "twofold";
        }
        if (!m)
            continue;
        if (rng.chance(0.4))
            return {transport(*m, random_invertible(m->dim(), rng)), origin + ", basis change"};
        return {*m, origin};
    }
}

namespace oracle {

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Scalar lead = rows[r][c];
        for (auto& x : rows[r])
            x /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Scalar f = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k)
                rows[i][k] -= f * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Scalar pair(const Matrix& form, const Vector& v, const Vector& w) {
    Scalar s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            s += v[i] * form(i, j) * w[j];
    return s;
}

Vector add(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

Vector sub(Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

bool zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t d = 0; d < k; ++d) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& t : out)
            for (std::size_t i = 0; i < n; ++i) {
                auto u = t;
                u.push_back(i);
                next.push_back(u);
            }
        out = next;
    }
    return out;
}

Vector ev(const Multilinear& f, const std::vector<Vector>& args) {
    Vector out(f.vdim());
    for (const auto& t : all_tuples(f.dim(), f.degree())) {
        Scalar c = 1;
        for (std::size_t k = 0; k < t.size() && c != 0; ++k)
            c *= args[k][t[k]];
        if (c == 0)
            continue;
        for (std::size_t s = 0; s < f.vdim(); ++s)
            out[s] += c * f.at(t, s);
    }
    return out;
}

Scalar ev1(const ScalarForm& f, const std::vector<Vector>& args) {
    return ev(f, args)[0];
}

}  // namespace

std::size_t rank(std::vector<std::vector<Scalar>> rows) {
    if (rows.empty())
        return 0;
    return reduce(rows, rows[0].size()).size();
}

std::vector<Vector> kernel(const std::vector<std::vector<Scalar>>& rows_in, std::size_t cols) {
    auto rows = rows_in;
    auto pivots = reduce(rows, cols);
    std::vector<Vector> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
            continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -rows[k][free];
        out.push_back(v);
    }
    return out;
}

Vector basis(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
}

Vector bracket(const Algebra& a, const Vector& x, const Vector& y) {
    std::size_t n = a.dim();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar w = x[i] * y[j];
            if (w == 0)
                continue;
            for (std::size_t k = 0; k < n; ++k)
                out[k] += w * a.structure().at({i, j}, k);
        }
    return out;
}

Vector twist(const Algebra& a, const Vector& x) {
    std::size_t n = a.dim();
    Vector out(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            out[k] += a.twist()(k, j) * x[j];
    return out;
}

Vector act(const Representation& r, const Vector& x, const Vector& v) {
    std::size_t m = r.vdim();
    Vector out(m);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
                out[p] += x[i] * r.rho(i)(p, q) * v[q];
    }
    return out;
}

Vector apply_beta(const Representation& r, const Vector& v) {
    std::size_t m = r.vdim();
    Vector out(m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            out[p] += r.beta()(p, q) * v[q];
    return out;
}

bool hom_jacobi(const Algebra& a) {
    std::size_t n = a.dim();
    for (const auto& t : all_tuples(n, 3)) {
        Vector x = basis(n, t[0]), y = basis(n, t[1]), z = basis(n, t[2]);
        Vector s = add(add(bracket(a, twist(a, x), bracket(a, y, z)), bracket(a, twist(a, y), bracket(a, z, x))),
                       bracket(a, twist(a, z), bracket(a, x, y)));
        if (!zero(s))
            return false;
    }
    return true;
}

bool multiplicative(const Algebra& a) {
    std::size_t n = a.dim();
    for (const auto& t : all_tuples(n, 2)) {
        Vector x = basis(n, t[0]), y = basis(n, t[1]);
        if (bracket(a, twist(a, x), twist(a, y)) != twist(a, bracket(a, x, y)))
            return false;
    }
    return true;
}

bool coadjoint(const Algebra& a) {
    std::size_t n = a.dim();
    for (const auto& t : all_tuples(n, 3)) {
        Vector x = basis(n, t[0]), y = basis(n, t[1]), z = basis(n, t[2]);
        Vector s = add(add(twist(a, bracket(a, bracket(a, x, y), z)), bracket(a, y, bracket(a, twist(a, x), z))),
                       bracket(a, x, bracket(a, twist(a, y), z)));
        if (!zero(s))
            return false;
    }
    return true;
}

bool is_representation(const Representation& r) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim(), m = r.vdim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < m; ++c) {
            Vector x = basis(n, i), v = basis(m, c);
            if (act(r, twist(a, x), apply_beta(r, v)) != apply_beta(r, act(r, x, v)))
                return false;
        }
    for (const auto& t : all_tuples(n, 2))
        for (std::size_t c = 0; c < m; ++c) {
            Vector x = basis(n, t[0]), y = basis(n, t[1]), v = basis(m, c);
            Vector s = add(add(act(r, bracket(a, x, y), apply_beta(r, v)), act(r, twist(a, x), act(r, y, v))),
                           act(r, twist(a, y), act(r, x, v)));
            if (!zero(s))
                return false;
        }
    return true;
}

Multilinear d1(const Representation& r, const Multilinear& f) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim();
    Multilinear out(2, n, r.vdim());
    for (const auto& t : all_tuples(n, 2)) {
        Vector x = basis(n, t[0]), y = basis(n, t[1]);
        out.set(t, sub(sub(ev(f, {bracket(a, x, y)}), act(r, x, ev(f, {y}))), act(r, y, ev(f, {x}))));
    }
    return out;
}

Multilinear d2(const Representation& r, const Multilinear& f) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim();
    Multilinear out(3, n, r.vdim());
    for (const auto& t : all_tuples(n, 3)) {
        Vector x = basis(n, t[0]), y = basis(n, t[1]), z = basis(n, t[2]);
        Vector ax = twist(a, x), ay = twist(a, y), az = twist(a, z);
        Vector s = ev(f, {ax, bracket(a, y, z)});
        s = add(s, ev(f, {ay, bracket(a, x, z)}));
        s = add(s, ev(f, {az, bracket(a, x, y)}));
        s = add(s, act(r, ax, ev(f, {y, z})));
        s = add(s, act(r, ay, ev(f, {x, z})));
        s = add(s, act(r, az, ev(f, {x, y})));
        out.set(t, s);
    }
    return out;
}

Multilinear dc2(const Representation& r, const Multilinear& f) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim();
    Multilinear out(3, n, r.vdim());
    for (const auto& idx : all_tuples(n, 3)) {
        Vector x = basis(n, idx[0]), y = basis(n, idx[1]), t = basis(n, idx[2]);
        Vector ax = twist(a, x), ay = twist(a, y);
        Vector s = apply_beta(r, ev(f, {bracket(a, x, y), t}));
        s = add(s, ev(f, {y, bracket(a, ax, t)}));
        s = add(s, ev(f, {x, bracket(a, ay, t)}));
        s = add(s, apply_beta(r, act(r, t, ev(f, {x, y}))));
        s = add(s, act(r, x, ev(f, {ay, t})));
        s = add(s, act(r, y, ev(f, {ax, t})));
        out.set(idx, s);
    }
    return out;
}

ScalarForm dr2(const Algebra& a, const ScalarForm& f) {
    std::size_t n = a.dim();
    ScalarForm out = make_form(3, n);
    for (const auto& idx : all_tuples(n, 3)) {
        Vector x = basis(n, idx[0]), y = basis(n, idx[1]), t = basis(n, idx[2]);
        out.at(idx) = ev1(f, {bracket(a, x, y), t}) - ev1(f, {y, bracket(a, x, t)}) - ev1(f, {x, bracket(a, y, t)});
    }
    return out;
}

ScalarForm dr3(const Algebra& a, const ScalarForm& g) {
    std::size_t n = a.dim();
    ScalarForm out = make_form(4, n);
    for (const auto& idx : all_tuples(n, 4)) {
        Vector x = basis(n, idx[0]), y = basis(n, idx[1]), z = basis(n, idx[2]), t = basis(n, idx[3]);
        Vector ax = twist(a, x), ay = twist(a, y), az = twist(a, z);
        out.at(idx) = ev1(g, {bracket(a, x, y), az, t}) + ev1(g, {bracket(a, x, z), ay, t}) +
                      ev1(g, {bracket(a, y, z), ax, t}) + ev1(g, {x, y, bracket(a, az, t)}) +
                      ev1(g, {y, z, bracket(a, ax, t)}) + ev1(g, {x, z, bracket(a, ay, t)});
    }
    return out;
}

ScalarForm wedge(const Matrix& form, const Multilinear& f, const Multilinear& g) {
    std::size_t p = f.degree(), q = g.degree(), n = f.dim();
    ScalarForm out = make_form(p + q, n);
    std::vector<std::vector<std::size_t>> shuffles;
    for (std::size_t mask = 0; mask < (std::size_t(1) << (p + q)); ++mask) {
        std::vector<std::size_t> first;
        for (std::size_t i = 0; i < p + q; ++i)
            if (mask & (std::size_t(1) << i))
                first.push_back(i);
        if (first.size() == p)
            shuffles.push_back(first);
    }
    for (const auto& idx : all_tuples(n, p + q)) {
        Scalar s = 0;
        for (const auto& sh : shuffles) {
            std::vector<Vector> fa, ga;
            for (std::size_t i = 0; i < p + q; ++i)
                (std::find(sh.begin(), sh.end(), i) != sh.end() ? fa : ga).push_back(basis(n, idx[i]));
            s += pair(form, ev(f, fa), ev(g, ga));
        }
        out.at(idx) = s;
    }
    return out;
}

PipelineDims brute_force_pipeline(const Representation& r) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim(), m = r.vdim();
    std::size_t n2 = n * n * m;
    auto coord2 = [&](std::size_t i, std::size_t j, std::size_t c) { return (i * n + j) * m + c; };

    std::vector<std::vector<Scalar>> c2_rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < m; ++c) {
                std::vector<Scalar> row(n2);
                row[coord2(i, j, c)] += 1;
                row[coord2(j, i, c)] -= 1;
                c2_rows.push_back(row);
                // beta f(e_i, e_j) - f(alpha e_i, alpha e_j), component c
                std::vector<Scalar> tw(n2);
                for (std::size_t s = 0; s < m; ++s)
                    tw[coord2(i, j, s)] += r.beta()(c, s);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q)
                        tw[coord2(p, q, c)] -= a.twist()(p, i) * a.twist()(q, j);
                c2_rows.push_back(tw);
            }

    // d2 column by column on monomial tensors.
    std::vector<std::vector<Scalar>> d2_cols;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < m; ++c) {
                Multilinear e(2, n, m);
                e.at({i, j}, c) = 1;
                d2_cols.push_back(oracle::d2(r, e).data());
            }
    std::size_t n3 = n * n * n * m;
    std::vector<std::vector<Scalar>> z2_rows = c2_rows;
    for (std::size_t row = 0; row < n3; ++row) {
        std::vector<Scalar> v(n2);
        for (std::size_t col = 0; col < n2; ++col)
            v[col] = d2_cols[col][row];
        z2_rows.push_back(v);
    }

    std::vector<std::vector<Scalar>> c1_rows;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < m; ++c) {
            // f(alpha e_j) - beta f(e_j), component c
            std::vector<Scalar> row(n * m);
            for (std::size_t k = 0; k < n; ++k)
                row[k * m + c] += a.twist()(k, j);
            for (std::size_t s = 0; s < m; ++s)
                row[j * m + s] -= r.beta()(c, s);
            c1_rows.push_back(row);
        }
    std::vector<std::vector<Scalar>> images;
    for (const auto& v : kernel(c1_rows, n * m)) {
        Multilinear f(1, n, m);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < m; ++c)
                f.at({k}, c) = v[k * m + c];
        images.push_back(oracle::d1(r, f).data());
    }

    PipelineDims out;
    out.c2 = n2 - rank(c2_rows);
    out.z2 = n2 - rank(z2_rows);
    out.b2 = rank(images);
    out.h2 = out.z2 - out.b2;
    return out;
}

bool invariant_form(const Algebra& a, const Matrix& g) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector x = basis(n, i), y = basis(n, j), z = basis(n, k);
                if (pair(g, x, bracket(a, y, z)) != pair(g, bracket(a, x, y), z))
                    return false;
            }
    return true;
}

bool hom_invariant_form(const Algebra& a, const Matrix& g) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector x = basis(n, i), y = basis(n, j);
            if (pair(g, twist(a, x), y) != pair(g, x, twist(a, y)))
                return false;
        }
    return true;
}

}  // namespace oracle

}  // namespace hjj::testing
