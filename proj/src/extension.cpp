#include "hjj/extension.hpp"

#include "hjj/errors.hpp"

namespace hjj {

namespace {

void require_cocycle(const Representation& r, const Multilinear& theta) {
    if (!is_cochain2(r, theta))
        throw InvalidCocycle("theta is not a symmetric 2-cochain compatible with the twists");
    Multilinear d = d2(r, theta);
    if (!d.is_zero()) {
        for (const auto& t : sorted_tuples(d.dim(), 3))
            if (!is_zero(d.value(t)))
                throw InvalidCocycle("d2 theta " + format_indices(t) + " = " + format_vector(d.value(t)));
    }
}

}  // namespace

Algebra build_extension(const Representation& r, const Multilinear& theta) {
    auto check = check_representation(r);
    if (!check.passed())
        throw InvalidRepresentation(check.twist.passed() ? check.bracket.summary() : check.twist.summary());
    require_cocycle(r, theta);
    const Algebra& a = r.algebra();
    std::size_t n = a.dim(), m = r.vdim(), total = n + m;
    Multilinear b(2, total, total);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = a.bracket(i, j);
            Vector t = theta.value({i, j});
            v.insert(v.end(), t.begin(), t.end());
            b.set({i, j}, v);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) {
            Vector v(total);
            for (std::size_t q = 0; q < m; ++q)
                v[n + q] = r.rho(i)(q, p);
            b.set({i, n + p}, v);
            b.set({n + p, i}, v);
        }
    auto labels = a.labels();
    for (std::size_t p = 0; p < m; ++p)
        labels.push_back("v" + std::to_string(p + 1));
    return Algebra(std::move(b), block_diagonal(a.twist(), r.beta()), labels);
}

Matrix equivalence_map_from_cochain(const Representation& r, const Multilinear& h) {
    if (!is_cochain1(r, h))
        throw NotACochain("h violates h(alpha x) = beta h(x)");
    std::size_t n = r.algebra().dim(), m = r.vdim();
    Matrix phi = Matrix::identity(n + m);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < m; ++q)
            phi(n + q, j) = -h.at({j}, q);
    return phi;
}

EquivalenceResult extensions_equivalent(const Representation& r, const Multilinear& theta_a,
                                        const Multilinear& theta_b) {
    require_cocycle(r, theta_a);
    require_cocycle(r, theta_b);
    Subspace c1 = cochain1_space(r);
    Vector diff = symmetric_coordinates(theta_a - theta_b);
    EquivalenceResult out;
    if (c1.dim() == 0) {
        out.equivalent = is_zero(diff);
        if (out.equivalent)
            out.witness = Multilinear(1, r.algebra().dim(), r.vdim());
        return out;
    }
    Matrix basis = c1.basis_matrix();
    auto x = solve(d1_matrix(r) * basis, diff);
    if (!x)
        return out;
    out.equivalent = true;
    out.witness = from_symmetric_coordinates(basis * *x, 1, r.algebra().dim(), r.vdim());
    return out;
}

}  // namespace hjj
