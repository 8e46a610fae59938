#pragma once

#include "hjj/cohomology.hpp"
#include "hjj/metric.hpp"

#include <optional>

namespace hjj {

struct QuadraticCochain1 {
    Multilinear tau;
    /// Skew bilinear form on J.
    ScalarForm sigma;
};

struct QuadraticCochain2 {
    Multilinear theta;
    ScalarForm gamma;
};

struct QuadraticCochain3 {
    Multilinear first;
    ScalarForm second;
};

/// Shuffle product paired through the form on V.  Degrees (2,2) give the
/// six (2,2)-shuffles, degrees (1,2) and (2,1) the three (1,2)-shuffles.
ScalarForm wedge(const Matrix& form, const Multilinear& f, const Multilinear& g);

/// (f o alpha)(x, y, ...) = f(alpha x, alpha y, ...).
Multilinear compose_twist(const Algebra& a, const Multilinear& f);

/// (d2 theta, dr3 gamma(x,y,z,alpha a) + 1/2 B(theta ^ (theta o alpha))(x,y,z,a)).
QuadraticCochain3 d2Q(const QuadraticRepresentation& q, const QuadraticCochain2& c);
/// (d1 tau, dr2 sigma - 1/2 B(tau ^ d1 tau)).
QuadraticCochain2 d1Q(const QuadraticRepresentation& q, const QuadraticCochain1& c);

/// Second component of d2Q as a linear map on symmetric trilinear forms,
/// from symmetric coordinates to full coordinates on J^4.
Matrix gamma_operator_matrix(const QuadraticRepresentation& q);

struct QuadraticFiber {
    Multilinear theta;
    /// Whether some gamma makes (theta, gamma) a cocycle.
    bool liftable = false;
    std::optional<ScalarForm> gamma;
    /// -1/2 B(theta ^ (theta o alpha)), the right-hand side gamma has to hit.
    ScalarForm target;
    /// Dimension of the fiber modulo dr2 sigma and B(tau ^ theta) with d1 tau = 0.
    std::optional<std::size_t> dim;
};

struct QuadraticCohomology {
    H2Result theta;
    /// Symmetric trilinear forms gamma with (0, gamma) a cocycle.
    Subspace gamma_cocycles;
    /// dr2 of skew twist-balanced forms.
    Subspace gamma_coboundaries;
    Quotient zero_sector;
    /// One fiber per class representative of H^2(J, V).
    std::vector<QuadraticFiber> fibers;
};

/// Solves d2Q = 0 fiberwise: theta first, then gamma linearly for each
/// theta representative.  Throws InvalidRepresentation as compute_H2 does.
QuadraticCohomology compute_H2Q(const QuadraticRepresentation& q);

/// dr3 gamma(x,y,z,t) + B(theta(t,alpha z),theta(x,y)) + B(theta(t,alpha y),theta(x,z))
/// + B(theta(t,alpha x),theta(y,z)) on every basis 4-tuple.  At t = alpha a
/// this is the second component of d2Q; it is stronger when alpha is singular.
CheckReport check_twofold_identity(const QuadraticRepresentation& q, const Multilinear& theta,
                                   const ScalarForm& gamma);

/// The algebra J + V + J* with the canonical hyperbolic form.  Throws
/// PreconditionFailure naming the first identity that fails.
MetricAlgebra build_twofold(const QuadraticRepresentation& q, const Multilinear& theta, const ScalarForm& gamma);

struct TwofoldEquivalence {
    /// Homomorphism and isometry from the twofold of `target` onto the twofold of the input.
    Matrix phi;
    QuadraticCochain2 target;
};

/// Target (theta + d1 tau, gamma + dr2 sigma - B(tau ^ (theta + 1/2 d1 tau))).
/// Throws PreconditionFailure when dc2 theta != 0 or tau, sigma are out of range.
TwofoldEquivalence twofold_equivalence_map(const QuadraticRepresentation& q, const QuadraticCochain2& c,
                                           const QuadraticCochain1& shift);

}  // namespace hjj
