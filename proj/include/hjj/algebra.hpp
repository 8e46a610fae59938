#pragma once

#include "hjj/linalg.hpp"
#include "hjj/multilinear.hpp"
#include "hjj/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hjj {

/// A commutative algebra with a linear twist: structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k and the twist matrix whose column j is
/// alpha(e_j).
class Algebra {
public:
    Algebra() = default;
    /// `bracket` is degree 2 with vdim == dim; throws InvalidInput unless it is
    /// symmetric and `alpha` is dim x dim.
    Algebra(Multilinear bracket, Matrix alpha, std::vector<std::string> labels = {});

    /// Brackets not listed are zero; each listed product fixes both orders.
    struct Product {
        std::size_t i, j;
        Vector value;
    };
    static Algebra from_products(std::size_t dim, const std::vector<Product>& products, Matrix alpha);

    std::size_t dim() const { return alpha_.rows(); }
    const Multilinear& structure() const { return bracket_; }
    const Matrix& twist() const { return alpha_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return bracket_.at({i, j}, k); }
    Vector bracket(std::size_t i, std::size_t j) const { return bracket_.value({i, j}); }
    Vector bracket(const Vector& x, const Vector& y) const;
    Vector twist(const Vector& x) const { return alpha_ * x; }
    Vector basis(std::size_t i) const { return unit_vector(dim(), i); }
    /// Matrix of y -> [x, y].
    Matrix ad(const Vector& x) const;

private:
    Multilinear bracket_;
    Matrix alpha_;
    std::vector<std::string> labels_;
};

/// [a(x),[y,z]] + [a(y),[z,x]] + [a(z),[x,y]] on basis triples i <= j <= k.
CheckReport check_hom_jacobi(const Algebra& a);
/// Residual [a(x),a(y)] - a([x,y]) on basis pairs i <= j.
CheckReport check_multiplicative(const Algebra& a);
bool is_invertible_twist(const Algebra& a);
/// Invertible twist and multiplicative.
bool is_regular(const Algebra& a);

Subspace bracket_span(const Algebra& a, const Subspace& x, const Subspace& y);
/// D^0 = J, D^{k+1} = [D^k, D^k], up to the first repeated term.
std::vector<Subspace> derived_series(const Algebra& a);
/// Least k with D^k = 0.
std::optional<std::size_t> solvable_index(const Algebra& a);
Subspace center(const Algebra& a);
bool is_twist_stable(const Algebra& a, const Subspace& s);
bool is_ideal(const Algebra& a, const Subspace& s);
bool is_abelian(const Algebra& a);

/// Linear map J_a -> J_b as a dim(b) x dim(a) matrix; checks
/// phi([x,y]) = [phi x, phi y] on basis pairs and phi alpha = alpha' phi on the basis.
CheckReport check_homomorphism(const Algebra& a, const Algebra& b, const Matrix& phi);

/// Same algebra written in the basis given by the columns of `p`.
Algebra change_basis(const Algebra& a, const Matrix& p);

/// Coefficients c_0..c_n of det(t I - m), monic.
Vector characteristic_polynomial(const Matrix& m);
/// Coefficients of the monic minimal polynomial.
Vector minimal_polynomial(const Matrix& m);

struct Invariants {
    std::vector<std::size_t> derived_dims;
    std::size_t center_dim = 0;
    Vector charpoly;
    Vector minpoly;
    /// Rank of the bracket viewed as a map S^2 J -> J.
    std::size_t bracket_rank = 0;

    friend bool operator==(const Invariants&, const Invariants&) = default;
    std::string to_string() const;
};

Invariants isomorphism_invariants(const Algebra& a);

}  // namespace hjj
