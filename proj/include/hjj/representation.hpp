#pragma once

#include "hjj/algebra.hpp"
#include "hjj/poly.hpp"

#include <functional>

namespace hjj {

/// (V, rho, beta) over an algebra: rho(e_i) are m x m matrices, beta is m x m.
class Representation {
public:
    Representation() = default;
    /// Throws InvalidInput on shape mismatch.
    Representation(Algebra algebra, std::vector<Matrix> rho, Matrix beta);
    static Representation zero(const Algebra& algebra, const Matrix& beta);

    const Algebra& algebra() const { return algebra_; }
    std::size_t vdim() const { return beta_.rows(); }
    const Matrix& rho(std::size_t i) const { return rho_[i]; }
    const std::vector<Matrix>& rho_matrices() const { return rho_; }
    Matrix rho(const Vector& x) const;
    const Matrix& beta() const { return beta_; }

private:
    Algebra algebra_;
    std::vector<Matrix> rho_;
    Matrix beta_;
};

struct RepresentationReport {
    /// rho(alpha x) beta = beta rho(x)
    CheckReport twist;
    /// rho([x,y]) beta = -rho(alpha x) rho(y) - rho(alpha y) rho(x)
    CheckReport bracket;
    bool passed() const { return twist.passed() && bracket.passed(); }
};

RepresentationReport check_representation(const Representation& r);

struct RepresentationSolutions {
    std::vector<Representation> solutions;
    /// Set when elimination ran to the end, so the list is the whole solution set.
    bool complete = false;
};

/// All one-dimensional representations with the given beta.  Throws
/// UnsupportedSystem when elimination stalls or leaves a free parameter.
RepresentationSolutions solve_representations_dim1(const Algebra& a, const Scalar& beta);

/// alpha([[x,y],t]) = -[y,[alpha x,t]] - [x,[alpha y,t]] on basis triples.
CheckReport coadjoint_condition(const Algebra& a);

struct ExtendedCoadjointReport {
    CheckReport algebra;
    /// beta(rho(t) theta(x,y)) = -rho(x) theta(alpha y, t) - rho(y) theta(alpha x, t)
    CheckReport cocycle;
    bool passed() const { return algebra.passed() && cocycle.passed(); }
};

ExtendedCoadjointReport coadjoint_conditions_extended(const Representation& r, const Multilinear& theta);

/// A representation with a symmetric nondegenerate form on V.
class QuadraticRepresentation : public Representation {
public:
    QuadraticRepresentation() = default;
    /// Throws DegenerateForm unless the form is symmetric and nondegenerate.
    QuadraticRepresentation(Representation rep, Matrix form);
    const Matrix& form() const { return form_; }
    Scalar pair(const Vector& v, const Vector& w) const { return dot(v, form_ * w); }

private:
    Matrix form_;
};

struct QuadraticReport {
    CheckReport rho_self_adjoint;
    CheckReport beta_self_adjoint;
    bool passed() const { return rho_self_adjoint.passed(); }
};

QuadraticReport check_quadratic_representation(const QuadraticRepresentation& q);

/// Parametrized 2 x 2 matrices with A^2 = 0, for one-dimensional J acting on
/// a two-dimensional V.
struct CandidateFamily {
    std::string name;
    std::vector<std::string> parameters;
    /// Row-major display of the entries.
    std::vector<std::string> entries;
    std::string constraint;
    std::function<Matrix(const Assignment&)> instantiate;
};

std::vector<CandidateFamily> square_zero_candidates();

}  // namespace hjj
