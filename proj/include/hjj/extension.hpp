#pragma once

#include "hjj/cohomology.hpp"

#include <optional>

namespace hjj {

/// J + V with [x+v, y+w] = [x,y] + rho(x)w + rho(y)v + theta(x,y) and twist
/// alpha + beta.  Throws InvalidRepresentation or InvalidCocycle.
Algebra build_extension(const Representation& r, const Multilinear& theta);

/// Phi(x + v) = x - h(x) + v, a homomorphism from the extension by
/// theta + d1 h onto the extension by theta.
Matrix equivalence_map_from_cochain(const Representation& r, const Multilinear& h);

struct EquivalenceResult {
    bool equivalent = false;
    /// h in C^1 with d1 h = theta_a - theta_b.
    std::optional<Multilinear> witness;
};

EquivalenceResult extensions_equivalent(const Representation& r, const Multilinear& theta_a,
                                        const Multilinear& theta_b);

}  // namespace hjj
