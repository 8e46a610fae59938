#include "hjj/catalog.hpp"

#include "hjj/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace hjj {

namespace {

Poly v(const char* name) {
    return Poly::var(name);
}

std::vector<Poly> vec(std::initializer_list<Poly> xs) {
    return std::vector<Poly>(xs);
}

CatalogEntry entry(std::string name, std::size_t dim, std::vector<std::string> params,
                   std::vector<CatalogEntry::Product> products, std::vector<std::vector<Poly>> alpha_columns,
                   std::vector<Constraint> stated = {}) {
    CatalogEntry e;
    e.name = std::move(name);
    e.dim = dim;
    e.parameters = std::move(params);
    e.products = std::move(products);
    e.alpha = std::move(alpha_columns);
    e.constraints = std::move(stated);
    return e;
}

Constraint stated_nonzero(Poly p) {
    return Constraint{std::move(p), Constraint::Kind::nonzero, "stated", ""};
}

Poly symbolic_det(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    if (n == 0)
        return Poly(1);
    if (n == 1)
        return m[0][0];
    Poly total;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][c] * symbolic_det(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

/// Symbolic structure: bracket values and twist columns as polynomial vectors.
struct Symbolic {
    std::size_t n;
    std::vector<std::vector<std::vector<Poly>>> br;
    std::vector<std::vector<Poly>> alpha_cols;

    explicit Symbolic(const CatalogEntry& e) : n(e.dim), alpha_cols(e.alpha) {
        br.assign(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n)));
        for (const auto& p : e.products) {
            br[p.i][p.j] = p.value;
            br[p.j][p.i] = p.value;
        }
    }
    std::vector<Poly> bracket(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
        std::vector<Poly> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero())
                    continue;
                Poly c = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!br[i][j][k].is_zero())
                        out[k] += c * br[i][j][k];
            }
        }
        return out;
    }
    std::vector<Poly> twist(const std::vector<Poly>& x) const {
        std::vector<Poly> out(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!x[j].is_zero())
                for (std::size_t k = 0; k < n; ++k)
                    out[k] += x[j] * alpha_cols[j][k];
        return out;
    }
    std::vector<Poly> basis(std::size_t i) const {
        std::vector<Poly> out(n);
        out[i] = Poly(1);
        return out;
    }
};

std::vector<Poly> add(std::vector<Poly> a, const std::vector<Poly>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

bool all_zero(const std::vector<Poly>& xs) {
    return std::all_of(xs.begin(), xs.end(), [](const Poly& p) { return p.is_zero(); });
}

std::vector<CatalogEntry> build_catalog() {
    Poly a = v("a"), b = v("b"), c = v("c"), x = v("x"), y = v("y");
    Poly a2 = a * a;
    std::vector<CatalogEntry> out;
    out.push_back(entry("J^1_{1,1}", 2, {"a"}, {{0, 0, vec({0, 1})}}, {vec({a, 0}), vec({0, a2})}));
    out.push_back(entry("J^2_{1,1}", 2, {}, {{1, 1, vec({1, 0})}}, {vec({1, 0}), vec({1, 1})}));

    auto diag3 = [](Poly p, Poly q, Poly r) {
        return std::vector<std::vector<Poly>>{vec({p, 0, 0}), vec({0, q, 0}), vec({0, 0, r})};
    };
    std::vector<Poly> e1 = vec({1, 0, 0}), e2 = vec({0, 1, 0}), e3 = vec({0, 0, 1});
    out.push_back(entry("J^1_{2,1}", 3, {"a", "b"}, {{0, 0, e2}}, diag3(a, a2, b)));
    out.push_back(entry("J^2_{2,1}", 3, {"a"}, {{0, 0, e3}, {1, 1, e3}}, diag3(a, -a, a2)));
    out.push_back(entry("J^3_{2,1}", 3, {"a"}, {{0, 0, e3}}, diag3(a, -a, a2)));
    out.push_back(entry("J^4_{2,1}", 3, {"a", "b"}, {{0, 0, e3}}, diag3(a, b, a2), {stated_nonzero(b * b - a2)}));
    out.push_back(entry("J^5_{2,1}", 3, {"b"}, {{1, 1, e1}}, {vec({1, 0, 0}), vec({1, 1, 0}), vec({0, 0, b})}));
    out.push_back(entry("J^6_{2,1}", 3, {"a", "c"}, {{1, 1, e3}}, {vec({a, 0, 0}), vec({c, a, 0}), vec({0, 0, a2})}));
    out.push_back(entry("J^7_{1,2}", 3, {"a", "c"}, {{0, 0, e2}}, diag3(a, a2, c), {stated_nonzero(c - a2)}));
    out.push_back(entry("J^8_{1,2}", 3, {"a", "x", "y"}, {{0, 0, vec({x, y, 0})}}, diag3(a, a2, a2)));
    out.push_back(entry("J^9_{1,2}", 3, {"a", "c"}, {{0, 0, e2}}, {vec({a, 0, 0}), vec({0, a2, 0}), vec({0, c, a2})}));
    out.push_back(entry("J^{10}_{1,2}", 3, {"a"}, {{0, 2, e2}}, diag3(a, a2, a2)));
    out.push_back(entry("J^{11}_{1,2}", 3, {"a", "c"}, {{0, 2, e2}}, {vec({a, 0, 0}), vec({0, a2, 0}), vec({0, c, a2})}));

    std::vector<std::vector<Poly>> unipotent{vec({1, 0, 1}), vec({c, 1, 0}), vec({0, 0, 1})};
    out.push_back(entry("J^{12}_{2,1}", 3, {"c", "x"}, {{0, 0, e3}, {0, 1, e3}, {1, 1, vec({0, 0, x})}}, unipotent));
    out.push_back(entry("J^{13}_{2,1}", 3, {"c"}, {{0, 0, e3}, {1, 1, e3}}, unipotent));
    out.push_back(entry("J^{14}_{2,1}", 3, {}, {{0, 0, e3}}, {vec({1, 0, 1}), vec({1, 1, 0}), vec({0, 0, 1})}));
    out.push_back(entry("J^{15}_{2,1}", 3, {"c"}, {{0, 1, e3}, {1, 1, e3}}, unipotent));
    out.push_back(entry("J^{16}_{2,1}", 3, {"c"}, {{1, 1, e3}}, unipotent));
    out.push_back(entry("J^{17}_{2,1}", 3, {"c"}, {{0, 1, e3}}, unipotent));

    for (auto& e : out) {
        e.constraints.push_back({twist_determinant(e), Constraint::Kind::nonzero, "derived", "regularity"});
        for (const auto& r : symbolic_residuals(e))
            for (const auto& p : r.residual)
                if (!p.is_zero())
                    e.constraints.push_back({p, Constraint::Kind::zero, "derived", r.identity});
    }
    return out;
}

std::string normalize_name(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (ch != '{' && ch != '}' && ch != ' ')
            out += ch;
    return out;
}

}  // namespace

bool Constraint::holds(const Assignment& at) const {
    Scalar value = poly.evaluate(at);
    return kind == Kind::zero ? value == 0 : value != 0;
}

std::string Constraint::to_string() const {
    std::string s = poly.to_string() + (kind == Kind::zero ? " = 0" : " != 0") + " [" + origin;
    if (!note.empty())
        s += ", " + note;
    return s + "]";
}

const std::vector<CatalogEntry>& catalog_list() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
    std::string key = normalize_name(name);
    for (const auto& e : catalog_list())
        if (normalize_name(e.name) == key)
            return e;
    throw UnknownEntry("no catalog entry named '" + name + "'");
}

Algebra instantiate(const std::string& name, const Assignment& params) {
    return instantiate(find_entry(name), params);
}

Algebra instantiate(const CatalogEntry& e, const Assignment& params) {
    for (const auto& p : e.parameters)
        if (!params.count(p))
            throw MissingParameter(e.name + " needs a value for '" + p + "'");
    std::size_t n = e.dim;
    std::vector<Algebra::Product> products;
    for (const auto& p : e.products) {
        Vector val(n);
        for (std::size_t k = 0; k < n; ++k)
            val[k] = p.value[k].evaluate(params);
        products.push_back({p.i, p.j, val});
    }
    Matrix alpha(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            alpha(k, j) = e.alpha[j][k].evaluate(params);
    return Algebra::from_products(n, products, alpha);
}

Poly twist_determinant(const CatalogEntry& e) {
    std::vector<std::vector<Poly>> rows(e.dim, std::vector<Poly>(e.dim));
    for (std::size_t j = 0; j < e.dim; ++j)
        for (std::size_t k = 0; k < e.dim; ++k)
            rows[k][j] = e.alpha[j][k];
    return symbolic_det(rows);
}

std::vector<SymbolicResidual> symbolic_residuals(const CatalogEntry& e) {
    Symbolic s(e);
    std::vector<SymbolicResidual> out;
    for (const auto& t : sorted_tuples(e.dim, 3)) {
        auto x = s.basis(t[0]), y = s.basis(t[1]), z = s.basis(t[2]);
        auto res = add(add(s.bracket(s.twist(x), s.bracket(y, z)), s.bracket(s.twist(y), s.bracket(z, x))),
                       s.bracket(s.twist(z), s.bracket(x, y)));
        if (!all_zero(res))
            out.push_back({"hom-jacobi", t, res});
    }
    for (const auto& t : sorted_tuples(e.dim, 2)) {
        auto x = s.basis(t[0]), y = s.basis(t[1]);
        auto res = s.bracket(s.twist(x), s.twist(y));
        auto ab = s.twist(s.bracket(x, y));
        for (std::size_t k = 0; k < res.size(); ++k)
            res[k] -= ab[k];
        if (!all_zero(res))
            out.push_back({"multiplicativity", t, res});
    }
    return out;
}

EntryVerification verify_entry(const std::string& name, const Assignment& params) {
    const CatalogEntry& e = find_entry(name);
    Algebra alg = instantiate(e, params);
    EntryVerification out;
    out.name = e.name;
    for (const auto& p : e.parameters)
        out.point[p] = params.at(p);
    for (const auto& c : e.constraints)
        if (c.origin == "stated" && !c.holds(out.point))
            out.admissible = false;
    out.hom_jacobi = check_hom_jacobi(alg);
    out.multiplicative = check_multiplicative(alg);
    out.regular = is_regular(alg);

    // The symbolic residuals evaluated at the point must reproduce the concrete ones.
    auto concrete = [&](const std::string& identity, const std::vector<std::size_t>& idx) -> Vector {
        const CheckReport& r = identity == "hom-jacobi" ? out.hom_jacobi : out.multiplicative;
        for (const auto& viol : r.violations)
            if (viol.indices == idx)
                return viol.residual;
        return Vector(e.dim);
    };
    std::size_t symbolic_failures = 0;
    for (const auto& r : symbolic_residuals(e)) {
        Vector at(e.dim);
        for (std::size_t k = 0; k < e.dim; ++k)
            at[k] = r.residual[k].evaluate(out.point);
        if (at != concrete(r.identity, r.indices))
            throw Error("symbolic and concrete residuals disagree for " + e.name);
        if (is_zero(at))
            continue;
        ++symbolic_failures;
        for (std::size_t k = 0; k < e.dim; ++k)
            if (at[k] != 0)
                out.residual_lines.push_back(r.residual[k].to_string() + " = " + to_string(at[k]) + " ≠ 0 (" +
                                             r.identity + ") at " + format_indices(r.indices) + ", e" +
                                             std::to_string(k + 1));
    }
    if (symbolic_failures != out.hom_jacobi.violations.size() + out.multiplicative.violations.size())
        throw Error("symbolic and concrete residual counts disagree for " + e.name);
    Poly det = twist_determinant(e);
    if (det.evaluate(out.point) == 0)
        out.residual_lines.push_back("det(alpha) = " + det.to_string() + " = 0 (regularity)");
    return out;
}

std::vector<EntryVerification> verify_entry_sweep(const std::string& name, const std::vector<Scalar>& grid) {
    const CatalogEntry& e = find_entry(name);
    std::vector<EntryVerification> out;
    for (const auto& p : grid_points(e.parameters, grid))
        out.push_back(verify_entry(e.name, p));
    return out;
}

std::vector<Scalar> parse_grid(const std::string& text) {
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        if (!item.empty())
            out.push_back(parse_scalar(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (out.empty())
        throw InvalidInput("empty parameter grid");
    return out;
}

std::vector<Scalar> default_grid() {
    if (const char* env = std::getenv("HJJ_GRID"))
        return parse_grid(env);
    return {-2, -1, 1, 2, 3, make_scalar(1, 2)};
}

std::vector<Assignment> grid_points(const std::vector<std::string>& symbols, const std::vector<Scalar>& grid) {
    std::vector<Assignment> out{Assignment{}};
    for (const auto& s : symbols) {
        std::vector<Assignment> next;
        for (const auto& partial : out)
            for (const auto& g : grid) {
                Assignment p = partial;
                p[s] = g;
                next.push_back(std::move(p));
            }
        out = std::move(next);
    }
    return out;
}

SeparationReport invariant_separation(const std::vector<Scalar>& grid) {
    const std::vector<std::string> symbols{"a", "b", "c", "x", "y"};
    const std::size_t steps[] = {1, 2, 3, 5, 7};
    std::vector<Assignment> samples;
    for (std::size_t k = 0; k < 4 * grid.size() * grid.size(); ++k) {
        Assignment p;
        std::size_t idx = k;
        for (std::size_t s = 0; s < symbols.size(); ++s) {
            p[symbols[s]] = grid[(idx * steps[s] + s + idx / grid.size()) % grid.size()];
        }
        samples.push_back(std::move(p));
    }
    const auto& entries = catalog_list();
    std::vector<std::vector<Invariants>> inv(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (const auto& p : samples)
            inv[i].push_back(isomorphism_invariants(instantiate(entries[i], p)));
    SeparationReport out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (entries[i].dim != entries[j].dim)
                continue;
            bool differ = false;
            for (std::size_t k = 0; k < samples.size() && !differ; ++k)
                differ = !(inv[i][k] == inv[j][k]);
            (differ ? out.separated : out.not_separated).emplace_back(entries[i].name, entries[j].name);
        }
    return out;
}

}  // namespace hjj
