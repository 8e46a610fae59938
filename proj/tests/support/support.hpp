#pragma once

#include "hjj/catalog.hpp"
#include "hjj/cohomology.hpp"
#include "hjj/extension.hpp"
#include "hjj/metric.hpp"
#include "hjj/quadratic.hpp"
#include "hjj/representation.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hjj::testing {

/// Seeded source of small rationals in [-3, 3].
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    int integer(int lo, int hi);
    bool chance(double p);
    /// Integers and halves in [-3, 3].
    Scalar scalar();
    Scalar nonzero_scalar();
    Matrix matrix(std::size_t rows, std::size_t cols, double density = 0.6);
    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[static_cast<std::size_t>(integer(0, static_cast<int>(xs.size()) - 1))];
    }

private:
    std::mt19937_64 gen_;
};

Matrix mat(std::initializer_list<std::initializer_list<long>> rows);
Matrix scalar_matrix(const Scalar& x);
Algebra abelian(const Matrix& alpha);
Algebra j111(const Scalar& a);
Algebra j211();
Representation zero_rep(const Algebra& a, const Matrix& beta);
/// rho = ad, beta = alpha.
Representation adjoint_rep(const Algebra& a);
Multilinear cochain1(std::size_t dim, std::size_t vdim, const std::vector<std::pair<std::size_t, Vector>>& values);
Multilinear sym2(std::size_t dim, std::size_t vdim, const std::vector<std::pair<std::vector<std::size_t>, Vector>>& values);

/// Algebras from the catalog on the default grid that pass Hom-Jacobi and
/// multiplicativity, plus abelian ones of dimension 1 to 3.
const std::vector<Algebra>& multiplicative_pool();
/// Random invertible change of basis; columns of the matrix are the new basis.
Matrix random_invertible(std::size_t n, Rng& rng);
/// The representation written for `change_basis(r.algebra(), p)`.
Representation transport(const Representation& r, const Matrix& p);

/// Random non-abelian algebra of dimension 1 to 3 with sparse brackets in
/// {-1, 0, 1} that passes the oracle Hom-Jacobi check, and the oracle
/// multiplicativity check when requested.
Algebra random_hom_jacobi_algebra(Rng& rng, bool multiplicative = false);

struct Instance {
    Representation rep;
    std::string origin;
};

/// A representation with dim J <= 3 and dim V <= 2 that passes the oracle
/// representation check.  Mixes rho = 0 with adapted beta, adjoint
/// representations, square-zero actions, random Hom-Jacobi algebras and
/// random basis changes.
Instance random_representation(Rng& rng);

/// Random element of a subspace given in symmetric coordinates.
Vector random_element(const Subspace& s, Rng& rng);
Multilinear random_cochain1(const Representation& r, Rng& rng);
Multilinear random_cochain2(const Representation& r, Rng& rng);

QuadraticRepresentation empty_module(const Algebra& a);
/// Symmetric forms on V for which every rho(e_i) and beta are self-adjoint.
std::vector<Matrix> compatible_forms(const Representation& r);
/// A nondegenerate compatible form on r, when one turns up.
std::optional<QuadraticRepresentation> random_quadratic(const Representation& r, Rng& rng);
/// Quadratic representation meeting the hypotheses of the quadratic complex:
/// coadjoint condition on J and the dc2 identities on the module.
QuadraticRepresentation random_complex_instance(Rng& rng, std::size_t& attempts);
ScalarForm random_skew_balanced(const Algebra& a, Rng& rng);

Matrix random_nondegenerate_symmetric(std::size_t n, Rng& rng);
MetricAlgebra transport(const MetricAlgebra& m, const Matrix& p);

struct MetricInstance {
    MetricAlgebra metric;
    std::string origin;
};

/// Hom-Jacobi algebra of dimension at most 4 with a nondegenerate symmetric
/// Hom-invariant form.  Mixes forms read off a trilinear gamma, balanced
/// forms on random algebras and trivial twofold extensions.
MetricInstance random_metric_instance(Rng& rng);

namespace oracle {

/// Gaussian elimination written independently of the library.
std::size_t rank(std::vector<std::vector<Scalar>> rows);
std::vector<Vector> kernel(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

Vector bracket(const Algebra& a, const Vector& x, const Vector& y);
Vector twist(const Algebra& a, const Vector& x);
Vector act(const Representation& r, const Vector& x, const Vector& v);
Vector apply_beta(const Representation& r, const Vector& v);
Vector basis(std::size_t n, std::size_t i);

bool hom_jacobi(const Algebra& a);
bool multiplicative(const Algebra& a);
bool coadjoint(const Algebra& a);
bool is_representation(const Representation& r);

/// Direct evaluation of the coboundary formulas on basis tuples.
Multilinear d1(const Representation& r, const Multilinear& f);
Multilinear d2(const Representation& r, const Multilinear& f);
Multilinear dc2(const Representation& r, const Multilinear& f);
ScalarForm dr2(const Algebra& a, const ScalarForm& f);
ScalarForm dr3(const Algebra& a, const ScalarForm& g);
/// Shuffle sum of B(f(..), g(..)) over all (p,q)-shuffles with sign +1.
ScalarForm wedge(const Matrix& form, const Multilinear& f, const Multilinear& g);

struct PipelineDims {
    std::size_t c2 = 0, z2 = 0, b2 = 0, h2 = 0;
    friend bool operator==(const PipelineDims&, const PipelineDims&) = default;
};

/// Monomial cochain basis over full tensor coordinates, d1 and d2 evaluated
/// on every basis tuple by direct summation.
PipelineDims brute_force_pipeline(const Representation& r);

/// B(x, [y, z]) = B([x, y], z) on basis triples.
bool invariant_form(const Algebra& a, const Matrix& g);
/// B(alpha x, y) = B(x, alpha y) on basis pairs.
bool hom_invariant_form(const Algebra& a, const Matrix& g);

}  // namespace oracle

}  // namespace hjj::testing
