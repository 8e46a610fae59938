#pragma once

#include "hjj/algebra.hpp"
#include "hjj/poly.hpp"

#include <string>
#include <vector>

namespace hjj {

struct Constraint {
    enum class Kind { nonzero, zero };
    Poly poly;
    Kind kind = Kind::nonzero;
    /// "stated" for conditions printed with the family, "derived" for ones
    /// found by residual analysis.
    std::string origin;
    std::string note;
    bool holds(const Assignment& at) const;
    std::string to_string() const;
};

struct CatalogEntry {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> parameters;
    struct Product {
        std::size_t i, j;
        std::vector<Poly> value;
    };
    std::vector<Product> products;
    /// Column j is alpha(e_j).
    std::vector<std::vector<Poly>> alpha;
    std::vector<Constraint> constraints;
};

const std::vector<CatalogEntry>& catalog_list();
/// Name lookup ignoring braces and spaces, so "J^10_{1,2}" finds "J^{10}_{1,2}".
const CatalogEntry& find_entry(const std::string& name);
/// Throws UnknownEntry or MissingParameter.
Algebra instantiate(const std::string& name, const Assignment& params);
Algebra instantiate(const CatalogEntry& e, const Assignment& params);

struct SymbolicResidual {
    std::string identity;
    std::vector<std::size_t> indices;
    std::vector<Poly> residual;
};

/// Nonzero residuals of Hom-Jacobi and multiplicativity with the parameters kept symbolic.
std::vector<SymbolicResidual> symbolic_residuals(const CatalogEntry& e);
/// det(alpha) as a polynomial in the parameters.
Poly twist_determinant(const CatalogEntry& e);

struct EntryVerification {
    std::string name;
    Assignment point;
    /// Stated constraints hold at the point.
    bool admissible = true;
    CheckReport hom_jacobi;
    CheckReport multiplicative;
    bool regular = false;
    /// "a^3-a^2 = 4 != 0 (multiplicativity)" style lines for each failing component.
    std::vector<std::string> residual_lines;
    bool passed() const { return hom_jacobi.passed() && multiplicative.passed() && regular; }
};

EntryVerification verify_entry(const std::string& name, const Assignment& params);
/// One verification per point of the grid product over the entry's parameters.
std::vector<EntryVerification> verify_entry_sweep(const std::string& name, const std::vector<Scalar>& grid);

/// {-2, -1, 1, 2, 3, 1/2}, or the comma-separated HJJ_GRID variable when set.
std::vector<Scalar> default_grid();
std::vector<Scalar> parse_grid(const std::string& text);
/// Cartesian product of `grid` over `symbols`.
std::vector<Assignment> grid_points(const std::vector<std::string>& symbols, const std::vector<Scalar>& grid);

struct SeparationReport {
    std::vector<std::pair<std::string, std::string>> separated;
    std::vector<std::pair<std::string, std::string>> not_separated;
};

/// Compares isomorphism invariants of every pair of same-dimension entries
/// over a deterministic set of sample points drawn from `grid`.
SeparationReport invariant_separation(const std::vector<Scalar>& grid);

enum class TwistShape { diagonal, jordan, full_jordan };

struct ClassifyOutput {
    Algebra algebra;
    std::string provenance;
    Invariants invariants;
    /// Catalog entries (with parameter values) whose invariants agree.
    std::vector<std::string> matches;
};

struct ClassifyResult {
    std::vector<ClassifyOutput> outputs;
    std::vector<std::string> trace;
};

/// The bootstrapping search: extensions of lower-dimensional bases by one-
/// or two-dimensional V, or the Jordan-block normal form when the twist is a
/// single Jordan block.  Outputs are deduplicated by invariants.
ClassifyResult classify(std::size_t dim_target, TwistShape shape, std::size_t vdim, const std::vector<Scalar>& grid);

struct Family {
    /// First matching catalog entry, empty for an unmatched output.
    std::string entry;
    std::vector<std::size_t> outputs;
};

/// Groups outputs by the first catalog entry they match; unmatched outputs stay alone.
std::vector<Family> group_families(const std::vector<ClassifyOutput>& outputs);

struct CoverageEntry {
    std::string name;
    std::vector<std::string> matched_by;
};

/// For each catalog entry of the given dimension, the classify outputs that match it.
std::vector<CoverageEntry> catalog_coverage(std::size_t dim, const std::vector<Scalar>& grid);

}  // namespace hjj
