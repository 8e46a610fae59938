#include "hjj/representation.hpp"

#include "hjj/errors.hpp"

#include <algorithm>

namespace hjj {

Representation::Representation(Algebra algebra, std::vector<Matrix> rho, Matrix beta)
    : algebra_(std::move(algebra)), rho_(std::move(rho)), beta_(std::move(beta)) {
    if (!beta_.is_square())
        throw InvalidInput("beta must be square");
    if (rho_.size() != algebra_.dim())
        throw InvalidInput("need one rho matrix per basis element of J");
    for (const auto& m : rho_)
        if (m.rows() != vdim() || m.cols() != vdim())
            throw InvalidInput("rho matrices must be vdim x vdim");
}

Representation Representation::zero(const Algebra& algebra, const Matrix& beta) {
    return Representation(algebra, std::vector<Matrix>(algebra.dim(), Matrix(beta.rows(), beta.rows())), beta);
}

Matrix Representation::rho(const Vector& x) const {
    Matrix m(vdim(), vdim());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0)
            m = m + x[i] * rho_[i];
    return m;
}

RepresentationReport check_representation(const Representation& r) {
    const Algebra& a = r.algebra();
    RepresentationReport out{{"representation twist", {}}, {"representation bracket", {}}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix res = r.rho(a.twist(a.basis(i))) * r.beta() - r.beta() * r.rho(i);
        if (!res.is_zero())
            out.twist.add({i}, res.data());
    }
    for (const auto& t : sorted_tuples(a.dim(), 2)) {
        Vector x = a.basis(t[0]), y = a.basis(t[1]);
        Matrix res = r.rho(a.bracket(x, y)) * r.beta() + r.rho(a.twist(x)) * r.rho(y) +
                     r.rho(a.twist(y)) * r.rho(x);
        if (!res.is_zero())
            out.bracket.add(t, res.data());
    }
    return out;
}

RepresentationSolutions solve_representations_dim1(const Algebra& a, const Scalar& beta) {
    std::size_t n = a.dim();
    std::vector<std::string> names;
    std::vector<Poly> x;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("x" + std::to_string(i + 1));
        x.push_back(Poly::var(names.back()));
    }
    auto rho_of = [&](const Vector& v) {
        Poly p;
        for (std::size_t k = 0; k < n; ++k)
            if (v[k] != 0)
                p += Poly(v[k]) * x[k];
        return p;
    };
    std::vector<Poly> eqs;
    for (std::size_t i = 0; i < n; ++i)
        eqs.push_back(Poly(beta) * (rho_of(a.twist(a.basis(i))) - x[i]));
    for (const auto& t : sorted_tuples(n, 2)) {
        Vector u = a.basis(t[0]), v = a.basis(t[1]);
        eqs.push_back(Poly(beta) * rho_of(a.bracket(u, v)) + rho_of(a.twist(u)) * x[t[1]] +
                      rho_of(a.twist(v)) * x[t[0]]);
    }
    RepresentationSolutions out;
    for (const auto& branch : solve_by_elimination(eqs, names)) {
        if (!branch.free.empty())
            throw UnsupportedSystem("solution family with free parameter " + branch.free.front());
        std::vector<Matrix> rho;
        for (const auto& name : names) {
            Matrix m(1, 1);
            m(0, 0) = branch.assignment.at(name).constant();
            rho.push_back(m);
        }
        Matrix b(1, 1);
        b(0, 0) = beta;
        Representation rep(a, rho, b);
        bool seen = std::any_of(out.solutions.begin(), out.solutions.end(),
                                [&](const Representation& s) { return s.rho_matrices() == rep.rho_matrices(); });
        if (!seen)
            out.solutions.push_back(std::move(rep));
    }
    out.complete = true;
    return out;
}

CheckReport coadjoint_condition(const Algebra& a) {
    CheckReport r{"coadjoint", {}};
    for (const auto& p : sorted_tuples(a.dim(), 2))
        for (std::size_t t = 0; t < a.dim(); ++t) {
            Vector x = a.basis(p[0]), y = a.basis(p[1]), z = a.basis(t);
            Vector res = a.twist(a.bracket(a.bracket(x, y), z)) + a.bracket(y, a.bracket(a.twist(x), z)) +
                         a.bracket(x, a.bracket(a.twist(y), z));
            if (!is_zero(res))
                r.add({p[0], p[1], t}, res);
        }
    return r;
}

ExtendedCoadjointReport coadjoint_conditions_extended(const Representation& r, const Multilinear& theta) {
    const Algebra& a = r.algebra();
    if (theta.degree() != 2 || theta.dim() != a.dim() || theta.vdim() != r.vdim())
        throw NotACochain("theta must be a 2-cochain J x J -> V");
    ExtendedCoadjointReport out{coadjoint_condition(a), {"coadjoint cocycle", {}}};
    for (const auto& p : sorted_tuples(a.dim(), 2))
        for (std::size_t t = 0; t < a.dim(); ++t) {
            Vector x = a.basis(p[0]), y = a.basis(p[1]), z = a.basis(t);
            Vector res = r.beta() * (r.rho(t) * theta.eval({x, y})) + r.rho(x) * theta.eval({a.twist(y), z}) +
                         r.rho(y) * theta.eval({a.twist(x), z});
            if (!is_zero(res))
                out.cocycle.add({p[0], p[1], t}, res);
        }
    return out;
}

QuadraticRepresentation::QuadraticRepresentation(Representation rep, Matrix form)
    : Representation(std::move(rep)), form_(std::move(form)) {
    if (form_.rows() != vdim() || form_.cols() != vdim())
        throw InvalidInput("form must be vdim x vdim");
    if (form_ != form_.transpose())
        throw DegenerateForm("form on V is not symmetric");
    if (determinant(form_) == 0)
        throw DegenerateForm("form on V is degenerate");
}

QuadraticReport check_quadratic_representation(const QuadraticRepresentation& q) {
    QuadraticReport out{{"rho self-adjoint", {}}, {"beta self-adjoint", {}}};
    const Matrix& b = q.form();
    for (std::size_t i = 0; i < q.algebra().dim(); ++i) {
        Matrix res = b * q.rho(i) - q.rho(i).transpose() * b;
        if (!res.is_zero())
            out.rho_self_adjoint.add({i}, res.data());
    }
    Matrix res = b * q.beta() - q.beta().transpose() * b;
    if (!res.is_zero())
        out.beta_self_adjoint.add({}, res.data());
    return out;
}

std::vector<CandidateFamily> square_zero_candidates() {
    std::vector<CandidateFamily> out;
    out.push_back({"zero", {}, {"0", "0", "0", "0"}, "", [](const Assignment&) { return Matrix(2, 2); }});
    out.push_back({"generic",
                   {"x1", "x2"},
                   {"x1", "-x1^2/x2", "x2", "-x1"},
                   "x2 != 0",
                   [](const Assignment& p) {
                       Scalar x1 = Poly::var("x1").evaluate(p);
                       Scalar x2 = Poly::var("x2").evaluate(p);
                       if (x2 == 0)
                           throw InvalidInput("square-zero family needs x2 != 0");
                       return Matrix::from_rows({{x1, -x1 * x1 / x2}, {x2, -x1}});
                   }});
    out.push_back({"upper",
                   {"y"},
                   {"0", "y", "0", "0"},
                   "",
                   [](const Assignment& p) {
                       return Matrix::from_rows({{0, Poly::var("y").evaluate(p)}, {0, 0}});
                   }});
    return out;
}

}  // namespace hjj
