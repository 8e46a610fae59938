#include "hjj/metric.hpp"

#include "hjj/cohomology.hpp"
#include "hjj/errors.hpp"
#include "hjj/representation.hpp"

namespace hjj {

MetricAlgebra::MetricAlgebra(Algebra algebra, Matrix form) : algebra_(std::move(algebra)), form_(std::move(form)) {
    if (form_.rows() != algebra_.dim() || form_.cols() != algebra_.dim())
        throw InvalidInput("form must be dim x dim");
    if (form_ != form_.transpose())
        throw DegenerateForm("form is not symmetric");
    if (determinant(form_) == 0)
        throw DegenerateForm("form is degenerate");
}

MetricReport check_metric(const MetricAlgebra& m) {
    const Algebra& a = m.algebra();
    MetricReport out{{"invariance", {}}, {"hom-invariance", {}}, coadjoint_condition(a)};
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
                Scalar res = m.pair(x, a.bracket(y, z)) - m.pair(a.bracket(x, y), z);
                if (res != 0)
                    out.invariance.add({i, j, k}, {res});
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector x = a.basis(i), y = a.basis(j);
            Scalar res = m.pair(a.twist(x), y) - m.pair(x, a.twist(y));
            if (res != 0)
                out.hom_invariance.add({i, j}, {res});
        }
    return out;
}

ScalarForm gamma_form(const MetricAlgebra& m) {
    const Algebra& a = m.algebra();
    ScalarForm g = make_form(3, a.dim());
    for (const auto& t : g.tuples())
        g.at(t) = m.pair(a.bracket(t[0], t[1]), a.basis(t[2]));
    return g;
}

MetricCriterionReport metric_criterion(const MetricAlgebra& m) {
    MetricCriterionReport out{{"gamma symmetric", {}}, {"dr3 gamma", {}}};
    ScalarForm g = gamma_form(m);
    for (const auto& t : g.tuples()) {
        // Symmetry in the first two slots is automatic; compare the swap of the last two.
        std::vector<std::size_t> s{t[0], t[2], t[1]};
        if (g.at(t) != g.at(s))
            out.gamma_symmetric.add(t, {g.at(t) - g.at(s)});
    }
    ScalarForm d = dr3(m.algebra(), g);
    for (const auto& t : d.tuples())
        if (d.at(t) != 0)
            out.dr3_gamma.add(t, {d.at(t)});
    return out;
}

Subspace orthogonal(const MetricAlgebra& m, const Subspace& s) {
    if (s.dim() == 0)
        return Subspace::whole(m.dim());
    Matrix rows = (m.form() * s.basis_matrix()).transpose();
    return Subspace::span(m.dim(), kernel_basis(rows));
}

bool is_isotropic(const MetricAlgebra& m, const Subspace& s) {
    for (const auto& u : s.basis())
        for (const auto& v : s.basis())
            if (m.pair(u, v) != 0)
                return false;
    return true;
}

DualityReport center_derived_duality(const MetricAlgebra& m) {
    const Algebra& a = m.algebra();
    Subspace d = bracket_span(a, Subspace::whole(a.dim()), Subspace::whole(a.dim()));
    return DualityReport{check_metric(m).passed(), center(a), d, orthogonal(m, d)};
}

}  // namespace hjj
