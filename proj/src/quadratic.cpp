#include "hjj/quadratic.hpp"

#include "hjj/errors.hpp"

#include <algorithm>
#include <map>

namespace hjj {

namespace {

using Tuple = std::vector<std::size_t>;

Tuple pick(const Tuple& t, std::initializer_list<std::size_t> positions) {
    Tuple out;
    for (auto p : positions)
        out.push_back(t[p]);
    return out;
}

void require_form_shape(const QuadraticRepresentation& q, const Multilinear& f, std::size_t degree,
                        const char* what) {
    if (f.degree() != degree || f.dim() != q.algebra().dim() || f.vdim() != 1)
        throw NotACochain(std::string(what) + " has the wrong shape");
}

}  // namespace

ScalarForm wedge(const Matrix& form, const Multilinear& f, const Multilinear& g) {
    if (f.dim() != g.dim() || f.vdim() != g.vdim() || form.rows() != f.vdim())
        throw InvalidInput("wedge operands have mismatched shapes");
    auto pair = [&](const Vector& u, const Vector& v) { return dot(u, form * v); };
    std::size_t n = f.dim();
    if (f.degree() == 2 && g.degree() == 2) {
        ScalarForm out = make_form(4, n);
        static const std::size_t shuffles[6][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2},
                                                   {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}};
        for (const auto& t : out.tuples()) {
            Scalar s = 0;
            for (const auto& sh : shuffles)
                s += pair(f.value(pick(t, {sh[0], sh[1]})), g.value(pick(t, {sh[2], sh[3]})));
            out.at(t) = s;
        }
        return out;
    }
    if (f.degree() + g.degree() == 3 && f.degree() >= 1 && g.degree() >= 1) {
        ScalarForm out = make_form(3, n);
        const Multilinear& one = f.degree() == 1 ? f : g;
        const Multilinear& two = f.degree() == 2 ? f : g;
        static const std::size_t shuffles[3][3] = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}};
        for (const auto& t : out.tuples()) {
            Scalar s = 0;
            for (const auto& sh : shuffles)
                s += pair(one.value({t[sh[0]]}), two.value({t[sh[1]], t[sh[2]]}));
            out.at(t) = s;
        }
        return out;
    }
    throw InvalidInput("wedge is defined for degrees (2,2), (1,2) and (2,1)");
}

Multilinear compose_twist(const Algebra& a, const Multilinear& f) {
    Multilinear out(f.degree(), f.dim(), f.vdim());
    for (const auto& t : out.tuples()) {
        std::vector<Vector> args;
        for (auto i : t)
            args.push_back(a.twist(a.basis(i)));
        out.set(t, f.eval(args));
    }
    return out;
}

QuadraticCochain3 d2Q(const QuadraticRepresentation& q, const QuadraticCochain2& c) {
    require_form_shape(q, c.gamma, 3, "gamma");
    const Algebra& a = q.algebra();
    std::size_t n = a.dim();
    Multilinear first = d2(q, c.theta);
    ScalarForm d = dr3(a, c.gamma);
    ScalarForm w = wedge(q.form(), c.theta, compose_twist(a, c.theta));
    ScalarForm second = make_form(4, n);
    for (const auto& t : second.tuples()) {
        Scalar s = w.at(t) / 2;
        for (std::size_t p = 0; p < n; ++p)
            if (a.twist()(p, t[3]) != 0)
                s += a.twist()(p, t[3]) * d.at({t[0], t[1], t[2], p});
        second.at(t) = s;
    }
    return {std::move(first), std::move(second)};
}

QuadraticCochain2 d1Q(const QuadraticRepresentation& q, const QuadraticCochain1& c) {
    require_form_shape(q, c.sigma, 2, "sigma");
    Multilinear dt = d1(q, c.tau);
    ScalarForm second = dr2(q.algebra(), c.sigma) - Scalar(1, 2) * wedge(q.form(), c.tau, dt);
    return {std::move(dt), std::move(second)};
}

Matrix gamma_operator_matrix(const QuadraticRepresentation& q) {
    const Algebra& a = q.algebra();
    std::size_t n = a.dim();
    const Matrix& al = a.twist();
    std::map<Tuple, std::size_t> column;
    for (const auto& t : sorted_tuples(n, 3))
        column.emplace(t, column.size());
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
    // dr3 gamma(x,y,z,t) as rows over the symmetric coordinates of gamma.
    Matrix d(n * n * n * n, column.size());
    auto add = [&](std::size_t row, const Vector& u, const Vector& v, const Vector& w) {
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j] == 0)
                    continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (w[k] == 0)
                        continue;
                    Tuple t{i, j, k};
                    std::sort(t.begin(), t.end());
                    d(row, column.at(t)) += u[i] * v[j] * w[k];
                }
            }
        }
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t t = 0; t < n; ++t) {
                    std::size_t row = ((x * n + y) * n + z) * n + t;
                    add(row, br[x][y], tw[z], e[t]);
                    add(row, br[x][z], tw[y], e[t]);
                    add(row, br[y][z], tw[x], e[t]);
                    add(row, e[x], e[y], twbr[z][t]);
                    add(row, e[y], e[z], twbr[x][t]);
                    add(row, e[x], e[z], twbr[y][t]);
                }
    // Fourth slot at alpha(a).
    Matrix m(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r) {
        std::size_t base = r - r % n, slot = r % n;
        for (std::size_t p = 0; p < n; ++p) {
            if (al(p, slot) == 0)
                continue;
            for (std::size_t c = 0; c < d.cols(); ++c)
                if (d(base + p, c) != 0)
                    m(r, c) += al(p, slot) * d(base + p, c);
        }
    }
    return m;
}

QuadraticCohomology compute_H2Q(const QuadraticRepresentation& q) {
    const Algebra& a = q.algebra();
    std::size_t n = a.dim();
    H2Result h = compute_H2(q);
    Matrix op = gamma_operator_matrix(q);
    std::size_t s3 = symmetric_coordinate_count(3, n, 1);
    Subspace cocycles = Subspace::span(s3, kernel_basis(op));

    std::vector<Vector> gens;
    Subspace skew = skew_balanced_forms(a);
    for (const auto& s : skew.basis()) {
        ScalarForm sigma = make_form(2, n);
        sigma.data() = s;
        ScalarForm d = dr2(a, sigma);
        if (!d.is_symmetric())
            throw ContainmentViolation("dr2 of a skew form is not symmetric");
        gens.push_back(symmetric_coordinates(d));
    }
    Subspace coboundaries = Subspace::span(s3, gens);
    Quotient zero_sector(cocycles, coboundaries);

    // tau in C^1 with d1 tau = 0.
    std::vector<Multilinear> closed_tau;
    if (h.c1.dim() > 0) {
        Matrix basis = h.c1.basis_matrix();
        for (const auto& k : kernel_basis(d1_matrix(q) * basis))
            closed_tau.push_back(from_symmetric_coordinates(basis * k, 1, n, q.vdim()));
    }

    std::vector<QuadraticFiber> fibers;
    for (const auto& theta : h.representatives()) {
        QuadraticFiber f;
        f.theta = theta;
        f.target = Scalar(-1, 2) * wedge(q.form(), theta, compose_twist(a, theta));
        auto x = solve(op, f.target.data());
        f.liftable = x.has_value();
        if (x) {
            f.gamma = from_symmetric_coordinates(*x, 3, n, 1);
            std::vector<Vector> stab = coboundaries.basis();
            for (const auto& tau : closed_tau)
                stab.push_back(symmetric_coordinates(wedge(q.form(), tau, theta)));
            Subspace s = Subspace::span(s3, stab);
            if (cocycles.contains(s))
                f.dim = Quotient(cocycles, s).dim();
        }
        fibers.push_back(std::move(f));
    }
    return QuadraticCohomology{std::move(h), std::move(cocycles), std::move(coboundaries), std::move(zero_sector),
                               std::move(fibers)};
}

CheckReport check_twofold_identity(const QuadraticRepresentation& q, const Multilinear& theta,
                                   const ScalarForm& gamma) {
    require_form_shape(q, gamma, 3, "gamma");
    const Algebra& a = q.algebra();
    std::size_t n = a.dim();
    CheckReport out{"twofold identity", {}};
    ScalarForm d = dr3(a, gamma);
    // theta(e_t, alpha e_k)
    std::vector<std::vector<Vector>> tw(n, std::vector<Vector>(n));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t k = 0; k < n; ++k)
            tw[t][k] = theta.eval({a.basis(t), a.twist(a.basis(k))});
    for (const auto& idx : d.tuples()) {
        std::size_t x = idx[0], y = idx[1], z = idx[2], t = idx[3];
        Scalar r = d.at(idx) + q.pair(tw[t][z], theta.value({x, y})) + q.pair(tw[t][y], theta.value({x, z})) +
                   q.pair(tw[t][x], theta.value({y, z}));
        if (r != 0)
            out.add(idx, {r});
    }
    return out;
}

MetricAlgebra build_twofold(const QuadraticRepresentation& q, const Multilinear& theta, const ScalarForm& gamma) {
    const Algebra& a = q.algebra();
    std::size_t n = a.dim(), m = q.vdim();
    auto fail = [](const std::string& what) { throw PreconditionFailure(what); };

    auto rep = check_representation(q);
    if (!rep.passed())
        fail(rep.twist.passed() ? rep.bracket.summary() : rep.twist.summary());
    auto quad = check_quadratic_representation(q);
    if (!quad.rho_self_adjoint.passed())
        fail(quad.rho_self_adjoint.summary());
    if (!quad.beta_self_adjoint.passed())
        fail(quad.beta_self_adjoint.summary());
    if (gamma.degree() != 3 || gamma.dim() != n || gamma.vdim() != 1)
        fail("gamma must be a trilinear form on J");
    if (!gamma.is_symmetric())
        fail("gamma is not fully symmetric");
    if (!is_cochain2(q, theta))
        fail("theta is not a 2-cochain compatible with the twists");
    auto d = d2Q(q, {theta, gamma});
    if (!d.first.is_zero())
        fail("d2 theta != 0");
    if (!d.second.is_zero())
        fail("second component of d2Q(theta, gamma) != 0");
    auto identity = check_twofold_identity(q, theta, gamma);
    if (!identity.passed())
        fail(identity.summary() + " (t outside the image of alpha)");
    auto coad = coadjoint_conditions_extended(q, theta);
    if (!coad.algebra.passed())
        fail(coad.algebra.summary());
    if (!coad.cocycle.passed())
        fail(coad.cocycle.summary());

    std::size_t total = 2 * n + m;
    std::size_t va = n, vs = n + m;
    Multilinear br(2, total, total);
    auto put = [&](std::size_t i, std::size_t j, const Vector& v) { br.set_symmetric({i, j}, v); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector v(total);
            Vector bj = a.bracket(i, j), th = theta.value({i, j});
            for (std::size_t k = 0; k < n; ++k)
                v[k] = bj[k];
            for (std::size_t p = 0; p < m; ++p)
                v[va + p] = th[p];
            for (std::size_t k = 0; k < n; ++k)
                v[vs + k] = gamma.at({i, j, k});
            put(i, j, v);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            Vector v(total);
            Vector ap = unit_vector(m, p);
            Vector act = q.rho(i) * ap;
            for (std::size_t r = 0; r < m; ++r)
                v[va + r] = act[r];
            for (std::size_t k = 0; k < n; ++k)
                v[vs + k] = q.pair(theta.value({k, i}), ap);
            put(i, va + p, v);
        }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = p; r < m; ++r) {
            Vector v(total);
            for (std::size_t k = 0; k < n; ++k)
                v[vs + k] = q.pair(q.rho(k) * unit_vector(m, p), unit_vector(m, r));
            put(va + p, va + r, v);
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            Vector v(total);
            for (std::size_t l = 0; l < n; ++l)
                v[vs + l] = a.c(i, l, k);
            put(vs + k, i, v);
        }

    Matrix twist = block_diagonal(block_diagonal(a.twist(), q.beta()), a.twist().transpose());
    Matrix form(total, total);
    for (std::size_t k = 0; k < n; ++k) {
        form(k, vs + k) = 1;
        form(vs + k, k) = 1;
    }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t r = 0; r < m; ++r)
            form(va + p, va + r) = q.form()(p, r);

    std::vector<std::string> labels = a.labels();
    for (std::size_t p = 0; p < m; ++p)
        labels.push_back("v" + std::to_string(p + 1));
    for (std::size_t k = 0; k < n; ++k)
        labels.push_back(a.labels()[k] + "*");
    MetricAlgebra out(Algebra(std::move(br), std::move(twist), std::move(labels)), std::move(form));

    auto metric = check_metric(out);
    if (!metric.passed())
        fail("twofold output: " + (metric.invariance.passed() ? metric.hom_invariance.summary()
                                                               : metric.invariance.summary()));
    auto crit = metric_criterion(out);
    if (!crit.passed())
        fail("twofold output: " + (crit.gamma_symmetric.passed() ? crit.dr3_gamma.summary()
                                                                 : crit.gamma_symmetric.summary()));
    return out;
}

TwofoldEquivalence twofold_equivalence_map(const QuadraticRepresentation& q, const QuadraticCochain2& c,
                                           const QuadraticCochain1& shift) {
    const Algebra& a = q.algebra();
    std::size_t n = a.dim(), m = q.vdim();
    if (!is_cochain1(q, shift.tau))
        throw PreconditionFailure("tau violates tau(alpha x) = beta tau(x)");
    if (shift.sigma.degree() != 2 || shift.sigma.dim() != n || shift.sigma.vdim() != 1)
        throw PreconditionFailure("sigma must be a bilinear form on J");
    if (!skew_balanced_forms(a).contains(shift.sigma.data()))
        throw PreconditionFailure("sigma must be skew with sigma(alpha x, y) = sigma(x, alpha y)");
    Multilinear dc = dc2(q, c.theta);
    if (!dc.is_zero()) {
        for (const auto& t : dc.tuples())
            if (!is_zero(dc.value(t)))
                throw PreconditionFailure("dc2 theta " + format_indices(t) + " = " + format_vector(dc.value(t)));
    }

    Multilinear dt = d1(q, shift.tau);
    QuadraticCochain2 target{c.theta + dt, c.gamma + dr2(a, shift.sigma) -
                                               wedge(q.form(), shift.tau, c.theta + Scalar(1, 2) * dt)};

    std::size_t total = 2 * n + m, va = n, vs = n + m;
    Matrix phi = Matrix::identity(total);
    for (std::size_t j = 0; j < n; ++j) {
        Vector tj = shift.tau.value({j});
        for (std::size_t p = 0; p < m; ++p)
            phi(va + p, j) = -tj[p];
        for (std::size_t l = 0; l < n; ++l)
            phi(vs + l, j) = Scalar(-1, 2) * q.pair(tj, shift.tau.value({l})) - shift.sigma.at({j, l});
    }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t l = 0; l < n; ++l)
            phi(vs + l, va + p) = q.pair(unit_vector(m, p), shift.tau.value({l}));
    return {std::move(phi), std::move(target)};
}

}  // namespace hjj
