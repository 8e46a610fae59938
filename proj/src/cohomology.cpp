#include "hjj/cohomology.hpp"

#include "hjj/errors.hpp"

#include <algorithm>
#include <map>

namespace hjj {

namespace {

using Tuple = std::vector<std::size_t>;

class SymmetricIndex {
public:
    SymmetricIndex(std::size_t degree, std::size_t dim, std::size_t vdim) : vdim_(vdim) {
        auto ts = sorted_tuples(dim, degree);
        for (std::size_t i = 0; i < ts.size(); ++i)
            index_[ts[i]] = i;
        tuples_ = std::move(ts);
    }
    std::size_t operator()(Tuple t, std::size_t component) const {
        std::sort(t.begin(), t.end());
        return index_.at(t) * vdim_ + component;
    }
    const std::vector<Tuple>& tuples() const { return tuples_; }
    std::size_t size() const { return tuples_.size() * vdim_; }

private:
    std::size_t vdim_;
    std::map<Tuple, std::size_t> index_;
    std::vector<Tuple> tuples_;
};

void require_shape(const Representation& r, const Multilinear& f, std::size_t degree) {
    if (f.degree() != degree || f.dim() != r.algebra().dim() || f.vdim() != r.vdim())
        throw NotACochain("expected a " + std::to_string(degree) + "-cochain J^" + std::to_string(degree) +
                          " -> V of matching dimensions");
}

}  // namespace

std::size_t symmetric_coordinate_count(std::size_t degree, std::size_t dim, std::size_t vdim) {
    return sorted_tuples(dim, degree).size() * vdim;
}

Vector symmetric_coordinates(const Multilinear& f) {
    Vector out;
    for (const auto& t : sorted_tuples(f.dim(), f.degree())) {
        auto v = f.value(t);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

Multilinear from_symmetric_coordinates(const Vector& coords, std::size_t degree, std::size_t dim, std::size_t vdim) {
    Multilinear f(degree, dim, vdim);
    auto ts = sorted_tuples(dim, degree);
    if (coords.size() != ts.size() * vdim)
        throw InvalidInput("coordinate vector has the wrong length");
    for (std::size_t i = 0; i < ts.size(); ++i)
        f.set_symmetric(ts[i], Vector(coords.begin() + i * vdim, coords.begin() + (i + 1) * vdim));
    return f;
}

Matrix cochain1_constraints(const Representation& r) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim(), m = r.vdim();
    Matrix c(n * m, n * m);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t row = 0; row < m; ++row) {
            std::size_t eq = j * m + row;
            for (std::size_t k = 0; k < n; ++k)
                c(eq, k * m + row) += a.twist()(k, j);
            for (std::size_t s = 0; s < m; ++s)
                c(eq, j * m + s) -= r.beta()(row, s);
        }
    return c;
}

Matrix cochain2_constraints(const Representation& r) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim(), m = r.vdim();
    SymmetricIndex idx(2, n, m);
    Matrix c(idx.size(), idx.size());
    for (const auto& t : idx.tuples())
        for (std::size_t row = 0; row < m; ++row) {
            std::size_t eq = idx(t, row);
            for (std::size_t s = 0; s < m; ++s)
                c(eq, idx(t, s)) += r.beta()(row, s);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    Scalar w = a.twist()(p, t[0]) * a.twist()(q, t[1]);
                    if (w != 0)
                        c(eq, idx({p, q}, row)) -= w;
                }
        }
    return c;
}

Subspace cochain1_space(const Representation& r) {
    return Subspace::span(r.algebra().dim() * r.vdim(), kernel_basis(cochain1_constraints(r)));
}

Subspace cochain2_space(const Representation& r) {
    return Subspace::span(symmetric_coordinate_count(2, r.algebra().dim(), r.vdim()),
                          kernel_basis(cochain2_constraints(r)));
}

bool is_cochain1(const Representation& r, const Multilinear& f) {
    require_shape(r, f, 1);
    return is_zero(cochain1_constraints(r) * symmetric_coordinates(f));
}

bool is_cochain2(const Representation& r, const Multilinear& f) {
    require_shape(r, f, 2);
    return f.is_symmetric() && is_zero(cochain2_constraints(r) * symmetric_coordinates(f));
}

Matrix d1_matrix(const Representation& r) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim(), m = r.vdim();
    SymmetricIndex out(2, n, m);
    Matrix d(out.size(), n * m);
    for (const auto& t : out.tuples()) {
        std::size_t i = t[0], j = t[1];
        for (std::size_t row = 0; row < m; ++row) {
            std::size_t eq = out(t, row);
            for (std::size_t k = 0; k < n; ++k)
                d(eq, k * m + row) += a.c(i, j, k);
            for (std::size_t s = 0; s < m; ++s) {
                d(eq, j * m + s) -= r.rho(i)(row, s);
                d(eq, i * m + s) -= r.rho(j)(row, s);
            }
        }
    }
    return d;
}

Matrix d2_matrix(const Representation& r) {
    const Algebra& a = r.algebra();
    std::size_t n = a.dim(), m = r.vdim();
    SymmetricIndex in(2, n, m), out(3, n, m);
    Matrix d(out.size(), in.size());
    const Matrix& al = a.twist();
    for (const auto& t : out.tuples()) {
        // The three ways of singling out one argument.
        const std::size_t pick[3][3] = {{t[0], t[1], t[2]}, {t[1], t[0], t[2]}, {t[2], t[0], t[1]}};
        for (std::size_t row = 0; row < m; ++row) {
            std::size_t eq = out(t, row);
            for (const auto& s : pick) {
                std::size_t x = s[0], y = s[1], z = s[2];
                for (std::size_t p = 0; p < n; ++p) {
                    if (al(p, x) == 0)
                        continue;
                    for (std::size_t q = 0; q < n; ++q) {
                        Scalar w = al(p, x) * a.c(y, z, q);
                        if (w != 0)
                            d(eq, in({p, q}, row)) += w;
                    }
                    for (std::size_t col = 0; col < m; ++col) {
                        Scalar w = al(p, x) * r.rho(p)(row, col);
                        if (w != 0)
                            d(eq, in({y, z}, col)) += w;
                    }
                }
            }
        }
    }
    return d;
}

Multilinear d1(const Representation& r, const Multilinear& f, bool check_membership) {
    require_shape(r, f, 1);
    if (check_membership && !is_cochain1(r, f))
        throw NotACochain("1-cochain violates f(alpha x) = beta f(x)");
    const Algebra& a = r.algebra();
    Multilinear out(2, a.dim(), r.vdim());
    for (const auto& t : out.tuples()) {
        Vector x = a.basis(t[0]), y = a.basis(t[1]);
        out.set(t, f.eval({a.bracket(x, y)}) - r.rho(x) * f.eval({y}) - r.rho(y) * f.eval({x}));
    }
    return out;
}

Multilinear d2(const Representation& r, const Multilinear& f, bool check_membership) {
    require_shape(r, f, 2);
    if (!f.is_symmetric())
        throw NotACochain("2-cochain is not symmetric");
    if (check_membership && !is_cochain2(r, f))
        throw NotACochain("2-cochain violates beta f(x,y) = f(alpha x, alpha y)");
    const Algebra& a = r.algebra();
    Multilinear out(3, a.dim(), r.vdim());
    for (const auto& t : out.tuples()) {
        Vector x = a.basis(t[0]), y = a.basis(t[1]), z = a.basis(t[2]);
        Vector ax = a.twist(x), ay = a.twist(y), az = a.twist(z);
        out.set(t, f.eval({ax, a.bracket(y, z)}) + f.eval({ay, a.bracket(x, z)}) + f.eval({az, a.bracket(x, y)}) +
                       r.rho(ax) * f.eval({y, z}) + r.rho(ay) * f.eval({x, z}) + r.rho(az) * f.eval({x, y}));
    }
    return out;
}

std::vector<Multilinear> H2Result::representatives() const {
    std::vector<Multilinear> out;
    for (const auto& v : h2.representatives())
        out.push_back(cochain(v));
    return out;
}

Multilinear H2Result::cochain(const Vector& coords) const {
    return from_symmetric_coordinates(coords, 2, jdim, vdim);
}

H2Result compute_H2(const Representation& r) {
    auto check = check_representation(r);
    if (!check.passed())
        throw InvalidRepresentation(check.twist.passed() ? check.bracket.summary() : check.twist.summary());
    Subspace c1 = cochain1_space(r);
    Subspace c2 = cochain2_space(r);
    std::vector<Vector> z_gens;
    if (c2.dim() > 0) {
        Matrix basis = c2.basis_matrix();
        for (const auto& k : kernel_basis(d2_matrix(r) * basis))
            z_gens.push_back(basis * k);
    }
    Subspace z2 = Subspace::span(c2.ambient_dim(), z_gens);
    Subspace b2 = image(d1_matrix(r), c1);
    Quotient h2(z2, b2);
    return H2Result{c1, c2, z2, b2, h2, r.vdim(), r.algebra().dim()};
}

ScalarForm dr2(const Algebra& a, const ScalarForm& f) {
    if (f.degree() != 2 || f.dim() != a.dim() || f.vdim() != 1)
        throw NotACochain("dr2 expects a bilinear form on J");
    ScalarForm out = make_form(3, a.dim());
    for (const auto& t : out.tuples()) {
        Vector x = a.basis(t[0]), y = a.basis(t[1]), z = a.basis(t[2]);
        out.set(t, f.eval({a.bracket(x, y), z}) - f.eval({y, a.bracket(x, z)}) - f.eval({x, a.bracket(y, z)}));
    }
    return out;
}

ScalarForm dr3(const Algebra& a, const ScalarForm& g) {
    if (g.degree() != 3 || g.dim() != a.dim() || g.vdim() != 1)
        throw NotACochain("dr3 expects a trilinear form on J");
    if (!g.is_symmetric_in_first_two())
        throw NotACochain("dr3 expects a form symmetric in its first two arguments");
    std::size_t n = a.dim();
    std::vector<Vector> e(n), tw(n);
    std::vector<std::vector<Vector>> br(n, std::vector<Vector>(n)), twbr(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = a.basis(i);
        tw[i] = a.twist(e[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            br[i][j] = a.bracket(i, j);
            twbr[i][j] = a.bracket(tw[i], e[j]);
        }
    ScalarForm out = make_form(4, n);
    for (const auto& idx : out.tuples()) {
        std::size_t x = idx[0], y = idx[1], z = idx[2], t = idx[3];
        out.set(idx, g.eval({br[x][y], tw[z], e[t]}) + g.eval({br[x][z], tw[y], e[t]}) +
                         g.eval({br[y][z], tw[x], e[t]}) + g.eval({e[x], e[y], twbr[z][t]}) +
                         g.eval({e[y], e[z], twbr[x][t]}) + g.eval({e[x], e[z], twbr[y][t]}));
    }
    return out;
}

bool is_twist_balanced(const Algebra& a, const ScalarForm& f) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (f.eval({a.twist(a.basis(i)), a.basis(j)}) != f.eval({a.basis(i), a.twist(a.basis(j))}))
                return false;
    return true;
}

namespace {

Matrix balance_constraints(const Algebra& a) {
    std::size_t n = a.dim();
    const Matrix& al = a.twist();
    // Unknown f(p,q) at column p*n+q; row (i,j): f(alpha e_i, e_j) - f(e_i, alpha e_j).
    Matrix c(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p) {
                c(i * n + j, p * n + j) += al(p, i);
                c(i * n + j, i * n + p) -= al(p, j);
            }
    return c;
}

}  // namespace

Subspace balanced_forms(const Algebra& a) {
    return Subspace::span(a.dim() * a.dim(), kernel_basis(balance_constraints(a)));
}

Subspace skew_balanced_forms(const Algebra& a) {
    std::size_t n = a.dim();
    Matrix skew(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            skew(i * n + j, i * n + j) += 1;
            skew(i * n + j, j * n + i) += 1;
        }
    return Subspace::span(n * n, kernel_basis(vstack(balance_constraints(a), skew)));
}

Multilinear dc2(const Representation& r, const Multilinear& f) {
    require_shape(r, f, 2);
    if (!f.is_symmetric())
        throw NotACochain("2-cochain is not symmetric");
    const Algebra& a = r.algebra();
    const Matrix& b = r.beta();
    Multilinear out(3, a.dim(), r.vdim());
    for (const auto& idx : out.tuples()) {
        Vector x = a.basis(idx[0]), y = a.basis(idx[1]), t = a.basis(idx[2]);
        Vector ax = a.twist(x), ay = a.twist(y);
        out.set(idx, b * f.eval({a.bracket(x, y), t}) + f.eval({y, a.bracket(ax, t)}) + f.eval({x, a.bracket(ay, t)}) +
                         b * (r.rho(t) * f.eval({x, y})) + r.rho(x) * f.eval({ay, t}) + r.rho(y) * f.eval({ax, t}));
    }
    return out;
}

DcComplexReport check_dc_complex_conditions(const Representation& r) {
    const Algebra& a = r.algebra();
    DcComplexReport out{coadjoint_condition(a), {"dual bracket", {}}, {"mixed", {}}};
    const Matrix& b = r.beta();
    for (const auto& t : sorted_tuples(a.dim(), 2)) {
        Vector x = a.basis(t[0]), y = a.basis(t[1]);
        Matrix res = b * r.rho(a.bracket(x, y)) + r.rho(x) * r.rho(a.twist(y)) + r.rho(y) * r.rho(a.twist(x));
        if (!res.is_zero())
            out.dual_bracket.add(t, res.data());
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vector x = a.basis(i), t = a.basis(j);
            Matrix res = r.rho(a.bracket(a.twist(x), t)) + r.rho(x) * r.rho(t) * b + b * r.rho(t) * r.rho(x);
            if (!res.is_zero())
                out.mixed.add({i, j}, res.data());
        }
    return out;
}

}  // namespace hjj
