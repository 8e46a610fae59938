#pragma once

#include "hjj/representation.hpp"

namespace hjj {

/// Coordinates of a symmetric k-cochain: nondecreasing basis tuples in
/// lexicographic order, each followed by the V components.
Vector symmetric_coordinates(const Multilinear& f);
Multilinear from_symmetric_coordinates(const Vector& coords, std::size_t degree, std::size_t dim, std::size_t vdim);
std::size_t symmetric_coordinate_count(std::size_t degree, std::size_t dim, std::size_t vdim);

/// Matrices whose kernels are C^1 (f alpha = beta f) and C^2
/// (beta f(x,y) = f(alpha x, alpha y)) in symmetric coordinates.
Matrix cochain1_constraints(const Representation& r);
Matrix cochain2_constraints(const Representation& r);
Subspace cochain1_space(const Representation& r);
Subspace cochain2_space(const Representation& r);
bool is_cochain1(const Representation& r, const Multilinear& f);
bool is_cochain2(const Representation& r, const Multilinear& f);

/// Matrices of d1 : Hom(J,V) -> S^2(J,V) and d2 : S^2(J,V) -> S^3(J,V).
Matrix d1_matrix(const Representation& r);
Matrix d2_matrix(const Representation& r);

/// d1 f(x,y) = f([x,y]) - rho(x) f(y) - rho(y) f(x).  Throws NotACochain
/// unless f is in C^1 (membership check can be skipped).
Multilinear d1(const Representation& r, const Multilinear& f, bool check_membership = true);
/// d2 f(x,y,z) = f(ax,[y,z]) + f(ay,[x,z]) + f(az,[x,y])
///             + rho(ax) f(y,z) + rho(ay) f(x,z) + rho(az) f(x,y).
Multilinear d2(const Representation& r, const Multilinear& f, bool check_membership = true);

struct H2Result {
    Subspace c1, c2, z2, b2;
    Quotient h2;

    std::size_t dim() const { return h2.dim(); }
    std::size_t vdim = 0;
    std::size_t jdim = 0;
    std::vector<Multilinear> representatives() const;
    Multilinear cochain(const Vector& coords) const;
};

/// Z^2 / B^2 with B^2 = d1(C^1) and Z^2 = ker d2 on C^2.  Throws
/// InvalidRepresentation when the representation check fails.
H2Result compute_H2(const Representation& r);

/// dr2 f(x,y,t) = f([x,y],t) - f(y,[x,t]) - f(x,[y,t]).
ScalarForm dr2(const Algebra& a, const ScalarForm& f);
/// dr3 g(x,y,z,t) = g([x,y],az,t) + g([x,z],ay,t) + g([y,z],ax,t)
///                + g(x,y,[az,t]) + g(y,z,[ax,t]) + g(x,z,[ay,t]).
ScalarForm dr3(const Algebra& a, const ScalarForm& g);
/// f(alpha x, y) = f(x, alpha y).
bool is_twist_balanced(const Algebra& a, const ScalarForm& f);
/// Skew forms with f(alpha x, y) = f(x, alpha y), as full n x n coordinate vectors.
Subspace skew_balanced_forms(const Algebra& a);
/// Bilinear forms with f(alpha x, y) = f(x, alpha y).
Subspace balanced_forms(const Algebra& a);

/// dc2 f(x,y,t) = beta f([x,y],t) + f(y,[ax,t]) + f(x,[ay,t])
///              + beta rho(t) f(x,y) + rho(x) f(ay,t) + rho(y) f(ax,t).
Multilinear dc2(const Representation& r, const Multilinear& f);

struct DcComplexReport {
    CheckReport coadjoint;
    /// beta rho([x,y]) = -rho(x) rho(ay) - rho(y) rho(ax)
    CheckReport dual_bracket;
    /// rho([ax,t]) = -rho(x) rho(t) beta - beta rho(t) rho(x)
    CheckReport mixed;
    bool passed() const { return coadjoint.passed() && dual_bracket.passed() && mixed.passed(); }
};

/// Identities under which dc2(d1 f) = 0 for every f in C^1.
DcComplexReport check_dc_complex_conditions(const Representation& r);

}  // namespace hjj
