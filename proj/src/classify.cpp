#include "hjj/catalog.hpp"
#include "hjj/errors.hpp"
#include "hjj/extension.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace hjj {

namespace {

Algebra abelian(const Matrix& alpha) {
    return Algebra(Multilinear(2, alpha.rows(), alpha.rows()), alpha);
}

Matrix jordan_block(std::size_t n, const Scalar& a) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = a;
        if (i + 1 < n)
            m(i, i + 1) = 1;
    }
    return m;
}

std::string scalar_list(const Vector& v) {
    return format_vector(v);
}

std::string matrix_text(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i)
        s += (i ? "," : "") + format_vector(m.row(i));
    return s + "]";
}

std::string assignment_text(const Assignment& p) {
    std::string s;
    for (const auto& [k, v] : p)
        s += (s.empty() ? "" : ",") + k + "=" + to_string(v);
    return s;
}

/// Zero plus every sum of a nonempty subset of the class representatives.
std::vector<Multilinear> class_sums(const H2Result& h) {
    auto reps = h.representatives();
    std::vector<Multilinear> out;
    std::size_t count = std::size_t(1) << reps.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        Multilinear t(2, h.jdim, h.vdim);
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (mask & (std::size_t(1) << i))
                t += reps[i];
        out.push_back(std::move(t));
    }
    return out;
}

class Collector {
public:
    explicit Collector(ClassifyResult& r) : result_(r) {}

    void offer(const Algebra& m, std::string provenance) {
        if (is_abelian(m))
            return;
        auto hj = check_hom_jacobi(m);
        auto mu = check_multiplicative(m);
        if (!hj.passed() || !mu.passed()) {
            result_.trace.push_back("rejected " + provenance + ": " + (hj.passed() ? mu.summary() : hj.summary()));
            return;
        }
        Invariants inv = isomorphism_invariants(m);
        for (const auto& o : result_.outputs)
            if (o.invariants == inv) {
                result_.trace.push_back("possibly isomorphic to an earlier output: " + provenance);
                return;
            }
        result_.trace.push_back("emitted " + provenance);
        result_.outputs.push_back({m, std::move(provenance), std::move(inv), {}});
    }

    void extend(const Representation& rep, const std::string& base) {
        std::optional<H2Result> h;
        try {
            h = compute_H2(rep);
        } catch (const ContainmentViolation& e) {
            result_.trace.push_back("skipped " + base + ": " + e.what());
            return;
        }
        std::string prefix = base + ", beta=" + matrix_text(rep.beta()) + ", rho=[";
        for (std::size_t i = 0; i < rep.algebra().dim(); ++i)
            prefix += (i ? "," : "") + matrix_text(rep.rho(i));
        prefix += "], dim H2=" + std::to_string(h->dim());
        for (const auto& theta : class_sums(*h))
            offer(build_extension(rep, theta), prefix + ", theta=" + scalar_list(symmetric_coordinates(theta)));
    }

private:
    ClassifyResult& result_;
};

void one_dim_reps(const Algebra& base, const std::string& desc, const std::vector<Scalar>& grid, Collector& c,
                  ClassifyResult& result) {
    // Cochains with rho = 0 need beta to be a product of two twist eigenvalues.
    std::vector<Scalar> betas = grid;
    std::size_t n = base.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            betas.push_back(base.twist()(i, i) * base.twist()(j, j));
    for (std::size_t i = 0; i < n; ++i)
        betas.push_back(base.twist()(i, i));
    std::sort(betas.begin(), betas.end());
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
    for (const auto& b : betas) {
        RepresentationSolutions sols;
        try {
            sols = solve_representations_dim1(base, b);
        } catch (const UnsupportedSystem& e) {
            result.trace.push_back("unsupported representation system for " + desc + ", beta=" + to_string(b) +
                                   ": " + e.what());
            continue;
        }
        for (const auto& rep : sols.solutions)
            c.extend(rep, desc);
    }
}

std::vector<std::pair<Algebra, std::string>> two_dim_bases(TwistShape shape, const std::vector<Scalar>& grid) {
    std::vector<std::pair<Algebra, std::string>> out;
    if (shape == TwistShape::diagonal) {
        for (const auto& a : grid)
            out.emplace_back(instantiate("J^1_{1,1}", {{"a", a}}), "base J^1_{1,1}(a=" + to_string(a) + ")");
        for (const auto& a : grid)
            for (const auto& b : grid)
                out.emplace_back(abelian(Matrix::diagonal({a, b})),
                                 "base abelian diag(" + to_string(a) + "," + to_string(b) + ")");
    } else {
        out.emplace_back(instantiate("J^2_{1,1}", {}), "base J^2_{1,1}");
        for (const auto& a : grid)
            out.emplace_back(abelian(jordan_block(2, a)), "base abelian jordan(" + to_string(a) + ")");
    }
    return out;
}

/// Twist a single Jordan block on (v, u_1, ...), brackets valued in span{v}.
void jordan_branch(std::size_t dim, const std::vector<Scalar>& grid, Collector& c, ClassifyResult& result) {
    auto pairs = sorted_tuples(dim, 2);
    auto label = [](std::size_t i) { return i == 0 ? std::string("v") : "u" + std::to_string(i); };
    for (const auto& a : grid) {
        Matrix alpha = jordan_block(dim, a);
        // Unknown y_p is the v-coefficient of the p-th bracket.
        Matrix eq(pairs.size(), pairs.size());
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            index[pairs[p]] = p;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            std::size_t i = pairs[p][0], j = pairs[p][1];
            eq(p, p) += a;
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t l = 0; l < dim; ++l) {
                    Scalar w = alpha(k, i) * alpha(l, j);
                    if (w != 0)
                        eq(p, index[{std::min(k, l), std::max(k, l)}]) -= w;
                }
        }
        auto kernel = kernel_basis(eq);
        if (kernel.empty()) {
            result.trace.push_back("jordan block a=" + to_string(a) + ": multiplicativity forces the zero bracket");
            continue;
        }
        CatalogEntry sym;
        sym.name = "jordan";
        sym.dim = dim;
        std::vector<std::string> vars;
        for (std::size_t k = 0; k < kernel.size(); ++k)
            vars.push_back("s" + std::to_string(k + 1));
        std::vector<Poly> coeff(pairs.size());
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            for (std::size_t k = 0; k < kernel.size(); ++k)
                if (kernel[k][p] != 0)
                    coeff[p] += Poly(kernel[k][p]) * Poly::var(vars[k]);
            std::vector<Poly> value(dim);
            value[0] = coeff[p];
            sym.products.push_back({pairs[p][0], pairs[p][1], value});
        }
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<Poly> col(dim);
            for (std::size_t k = 0; k < dim; ++k)
                col[k] = Poly(alpha(k, j));
            sym.alpha.push_back(col);
        }
        std::vector<Poly> eqs;
        for (const auto& r : symbolic_residuals(sym))
            if (r.identity == "hom-jacobi")
                for (const auto& p : r.residual)
                    if (!p.is_zero())
                        eqs.push_back(p);
        for (const auto& branch : solve_by_elimination(eqs, vars)) {
            for (const auto& [name, value] : branch.assignment)
                if (value.degree() > 1)
                    throw UnsupportedSystem("nonlinear Jordan-block family: " + name + " = " + value.to_string());
            if (branch.free.empty()) {
                result.trace.push_back("jordan block a=" + to_string(a) + ": Hom-Jacobi forces the zero bracket");
                continue;
            }
            std::map<std::string, Poly> subs(branch.assignment.begin(), branch.assignment.end());
            Assignment generic;
            for (const auto& f : branch.free)
                generic[f] = 1;
            std::string form;
            std::vector<Algebra::Product> products;
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                Poly value = coeff[p].substitute(subs);
                if (value.is_zero())
                    continue;
                form += (form.empty() ? "" : ", ") + std::string("[") + label(pairs[p][0]) + "," + label(pairs[p][1]) +
                        "] = (" + value.to_string() + ") v";
                Vector val(dim);
                val[0] = value.evaluate(generic);
                products.push_back({pairs[p][0], pairs[p][1], val});
            }
            c.offer(Algebra::from_products(dim, products, alpha),
                    "jordan block a=" + to_string(a) + ", normal form " + form + " (" +
                        std::to_string(branch.free.size()) + " free parameter" + (branch.free.size() == 1 ? "" : "s") +
                        ", sampled at " + assignment_text(generic) + ")");
        }
    }
}

struct EntryMatcher {
    const CatalogEntry* entry;
    std::vector<Poly> charpoly;
};

std::vector<EntryMatcher> matchers(std::size_t dim) {
    std::vector<EntryMatcher> out;
    Poly t = Poly::var("t");
    for (const auto& e : catalog_list()) {
        if (e.dim != dim)
            continue;
        // det(t I - alpha) with the parameters symbolic, split by powers of t.
        std::vector<std::vector<Poly>> rows(dim, std::vector<Poly>(dim));
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                rows[k][j] = (k == j ? t : Poly(0)) - e.alpha[j][k];
        CatalogEntry tmp;
        tmp.dim = dim;
        tmp.alpha.assign(dim, std::vector<Poly>(dim));
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                tmp.alpha[j][k] = rows[k][j];
        Poly det = twist_determinant(tmp);
        std::vector<Poly> coeffs;
        for (std::size_t k = 0; k <= dim; ++k)
            coeffs.push_back(det.coefficient("t", k));
        out.push_back({&e, coeffs});
    }
    return out;
}

void match_outputs(ClassifyResult& result, std::size_t dim) {
    auto ms = matchers(dim);
    for (auto& o : result.outputs) {
        Vector candidates{0, 1};
        for (std::size_t i = 0; i < dim; ++i)
            candidates.push_back(o.algebra.twist()(i, i));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& m : ms) {
            for (const auto& p : grid_points(m.entry->parameters, candidates)) {
                bool same = true;
                for (std::size_t k = 0; k <= dim && same; ++k)
                    same = m.charpoly[k].evaluate(p) == o.invariants.charpoly[k];
                if (!same)
                    continue;
                if (isomorphism_invariants(instantiate(*m.entry, p)) == o.invariants) {
                    o.matches.push_back(m.entry->name + (p.empty() ? "" : "(" + assignment_text(p) + ")"));
                    break;
                }
            }
        }
    }
}

}  // namespace

ClassifyResult classify(std::size_t dim_target, TwistShape shape, std::size_t vdim, const std::vector<Scalar>& grid) {
    if (dim_target != 2 && dim_target != 3)
        throw InvalidInput("classification is available in dimensions 2 and 3");
    if (vdim != 1 && vdim != 2)
        throw InvalidInput("extension dimension must be 1 or 2");
    if (vdim >= dim_target)
        throw InvalidInput("extension dimension must be smaller than the target dimension");
    ClassifyResult result;
    Collector c(result);

    if (shape == TwistShape::full_jordan || (dim_target == 2 && shape == TwistShape::jordan)) {
        jordan_branch(dim_target, grid, c, result);
    } else if (dim_target == 2) {
        for (const auto& a : grid)
            one_dim_reps(abelian(Matrix::diagonal({a})), "base abelian(" + to_string(a) + ")", grid, c, result);
    } else if (vdim == 1) {
        for (const auto& [base, desc] : two_dim_bases(shape, grid))
            one_dim_reps(base, desc, grid, c, result);
    } else {
        for (const auto& a : grid) {
            Algebra base = abelian(Matrix::diagonal({a}));
            std::vector<Matrix> betas;
            if (shape == TwistShape::diagonal) {
                for (const auto& b : grid)
                    for (const auto& d : grid)
                        betas.push_back(Matrix::diagonal({b, d}));
            } else {
                for (const auto& b : grid)
                    betas.push_back(jordan_block(2, b));
            }
            for (const auto& beta : betas)
                for (const auto& fam : square_zero_candidates())
                    for (const auto& p : grid_points(fam.parameters, grid)) {
                        Matrix rho = fam.instantiate(p);
                        Representation rep(base, {rho}, beta);
                        if (!check_representation(rep).passed())
                            continue;
                        c.extend(rep, "base abelian(" + to_string(a) + "), rho family " + fam.name);
                    }
        }
    }
    match_outputs(result, dim_target);
    return result;
}

std::vector<Family> group_families(const std::vector<ClassifyOutput>& outputs) {
    std::vector<Family> out;
    for (std::size_t k = 0; k < outputs.size(); ++k) {
        const auto& m = outputs[k].matches;
        std::string entry = m.empty() ? "" : m.front().substr(0, m.front().find('('));
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Family& f) { return !entry.empty() && f.entry == entry; });
        if (it == out.end())
            out.push_back({entry, {k}});
        else
            it->outputs.push_back(k);
    }
    return out;
}

std::vector<CoverageEntry> catalog_coverage(std::size_t dim, const std::vector<Scalar>& grid) {
    std::vector<ClassifyResult> runs;
    if (dim == 2) {
        runs.push_back(classify(2, TwistShape::diagonal, 1, grid));
        runs.push_back(classify(2, TwistShape::jordan, 1, grid));
    } else {
        for (auto shape : {TwistShape::diagonal, TwistShape::jordan})
            for (std::size_t v : {1u, 2u})
                runs.push_back(classify(3, shape, v, grid));
        runs.push_back(classify(3, TwistShape::full_jordan, 1, grid));
    }
    std::vector<CoverageEntry> out;
    for (const auto& e : catalog_list()) {
        if (e.dim != dim)
            continue;
        CoverageEntry ce{e.name, {}};
        for (const auto& r : runs)
            for (const auto& o : r.outputs)
                for (const auto& m : o.matches)
                    if (m.rfind(e.name, 0) == 0 && (m.size() == e.name.size() || m[e.name.size()] == '('))
                        ce.matched_by.push_back(o.provenance);
        out.push_back(std::move(ce));
    }
    return out;
}

}  // namespace hjj
