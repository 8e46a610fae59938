#pragma once

#include "hjj/scalar.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace hjj {

/// Variable name -> exponent; absent variables have exponent zero.
using Monomial = std::map<std::string, unsigned>;
using Assignment = std::map<std::string, Scalar>;

/// Multivariate polynomial with rational coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c);
    Poly(long c) : Poly(Scalar(c)) {}
    static Poly var(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero when absent).
    Scalar constant() const;
    unsigned degree() const;
    unsigned degree_in(const std::string& v) const;
    std::set<std::string> variables() const;
    /// Coefficient of v^k, as a polynomial in the remaining variables.
    Poly coefficient(const std::string& v, unsigned k) const;
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    Poly substitute(const std::string& v, const Poly& value) const;
    Poly substitute(const std::map<std::string, Poly>& values) const;
    /// Substitutes the assigned variables, leaving the others symbolic.
    Poly partial(const Assignment& values) const;
    /// Throws MissingParameter if a variable has no value.
    Scalar evaluate(const Assignment& values) const;

    /// Highest total degree first, e.g. "a^3-a^2" or "a^2*x-a*x".
    std::string to_string() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator-(const Poly& a) { return Poly(-1) * a; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void add_term(const Monomial& m, const Scalar& c);
    std::map<Monomial, Scalar> terms_;
};

Poly pow(const Poly& p, unsigned k);

/// One branch of the solution set: solved variables as polynomials in the free ones.
struct SolutionBranch {
    std::map<std::string, Poly> assignment;
    std::vector<std::string> free;
};

/// Solves a polynomial system by successive elimination.  Handled shapes:
/// an equation with a variable of degree one whose coefficient is a nonzero
/// constant (solved for it), a single monomial (each variable in it set to
/// zero, branching when there are several), and a definite quadratic form
/// (all its variables zero).  Anything else throws UnsupportedSystem.
std::vector<SolutionBranch> solve_by_elimination(const std::vector<Poly>& equations,
                                                 const std::vector<std::string>& variables);

}  // namespace hjj
