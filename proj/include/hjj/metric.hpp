#pragma once

#include "hjj/algebra.hpp"

namespace hjj {

/// An algebra with a symmetric nondegenerate bilinear form B(x,y) = x^T G y.
class MetricAlgebra {
public:
    MetricAlgebra() = default;
    /// Throws DegenerateForm unless the form is symmetric and nondegenerate.
    MetricAlgebra(Algebra algebra, Matrix form);

    const Algebra& algebra() const { return algebra_; }
    const Matrix& form() const { return form_; }
    std::size_t dim() const { return algebra_.dim(); }
    Scalar pair(const Vector& x, const Vector& y) const { return dot(x, form_ * y); }

private:
    Algebra algebra_;
    Matrix form_;
};

struct MetricReport {
    /// B(x,[y,z]) = B([x,y],z)
    CheckReport invariance;
    /// B(alpha x, y) = B(x, alpha y)
    CheckReport hom_invariance;
    CheckReport coadjoint;
    bool passed() const { return invariance.passed() && hom_invariance.passed(); }
};

MetricReport check_metric(const MetricAlgebra& m);

/// gamma(x,y,z) = B([x,y],z).
ScalarForm gamma_form(const MetricAlgebra& m);

struct MetricCriterionReport {
    CheckReport gamma_symmetric;
    /// dr3 gamma = 0 on every basis 4-tuple.
    CheckReport dr3_gamma;
    bool passed() const { return gamma_symmetric.passed() && dr3_gamma.passed(); }
};

MetricCriterionReport metric_criterion(const MetricAlgebra& m);

Subspace orthogonal(const MetricAlgebra& m, const Subspace& s);
bool is_isotropic(const MetricAlgebra& m, const Subspace& s);

struct DualityReport {
    /// The form is invariant and Hom-invariant; otherwise no claim is made.
    bool applicable = false;
    Subspace center;
    Subspace derived;
    Subspace derived_perp;
    bool holds() const { return applicable && center == derived_perp; }
};

/// Compares Z(J) with the orthogonal complement of [J,J].
DualityReport center_derived_duality(const MetricAlgebra& m);

}  // namespace hjj
