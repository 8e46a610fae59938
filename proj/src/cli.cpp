#include "hjj/cli.hpp"

#include "hjj/catalog.hpp"
#include "hjj/errors.hpp"
#include "hjj/extension.hpp"
#include "hjj/io.hpp"
#include "hjj/quadratic.hpp"

#include "CLI11.hpp"

#include <functional>
#include <optional>

namespace hjj {

namespace {

/// What a command reports: text lines, structured data and the verdict.
struct Reply {
    bool passed = true;
    std::vector<std::string> lines;
    Json data = Json::object();
};

/// A property check failed before a report could be assembled.
struct CheckFailure : Error {
    using Error::Error;
};

Json report_json(const CheckReport& r) {
    Json vs = Json::array();
    for (const auto& v : r.violations) {
        Json idx = Json::array();
        for (auto i : v.indices)
            idx.push_back(i + 1);
        Json item{{"indices", idx}, {"residual", vector_to_json(v.residual)}};
        if (!v.note.empty())
            item["note"] = v.note;
        vs.push_back(item);
    }
    return Json{{"name", r.name}, {"passed", r.passed()}, {"violations", vs}};
}

std::string pass_word(bool ok) {
    return ok ? "pass" : "FAIL";
}

std::string matrix_text(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i)
        s += (i ? "," : "") + format_vector(m.row(i));
    return s + "]";
}

std::string cochain_text(const Multilinear& f) {
    std::string s;
    for (const auto& t : sorted_tuples(f.dim(), f.degree())) {
        Vector v = f.value(t);
        if (is_zero(v))
            continue;
        s += (s.empty() ? "" : ", ") + std::string("f") + format_indices(t) + " = " + format_vector(v);
    }
    return s.empty() ? "0" : s;
}

template <typename F>
auto with_context(const std::string& what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw InvalidInput(what + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(what + ": " + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidInput(what + ": " + e.what());
    }
}

Algebra load_algebra(const std::string& path, const std::string& flag) {
    return with_context(flag + " " + path, [&] {
        Document d = load_document(path);
        if (d.kind == "metric-algebra")
            return metric_from_json(d.payload).algebra();
        if (d.kind != "algebra")
            throw SchemaError("expected an 'algebra' document, got '" + d.kind + "'");
        return algebra_from_json(d.payload);
    });
}

RepresentationData load_representation(const std::string& path, const std::string& flag) {
    return with_context(flag + " " + path, [&] {
        return representation_data_from_json(load_document(path, "representation").payload);
    });
}

Multilinear load_cochain(const std::string& path, const std::string& flag) {
    return with_context(flag + " " + path, [&] { return cochain_from_json(load_document(path, "cochain").payload); });
}

Assignment parse_params(const std::vector<std::string>& items) {
    Assignment out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InvalidInput("--params: expected name=value, got '" + item + "'");
        try {
            out[item.substr(0, eq)] = parse_scalar(item.substr(eq + 1));
        } catch (const InvalidInput& e) {
            throw InvalidInput("--params: " + std::string(e.what()));
        }
    }
    return out;
}

void write_or_print(const std::string& path, const Document& d, Reply& r) {
    if (path.empty()) {
        std::string text = emit_document(d);
        text.pop_back();
        r.lines.push_back(text);
    } else {
        save_document(path, d);
        r.lines.push_back("written to " + path);
    }
}

Reply cmd_verify(const std::string& path) {
    Algebra a = load_algebra(path, "verify");
    Reply r;
    auto hj = check_hom_jacobi(a);
    auto mu = check_multiplicative(a);
    bool reg = is_regular(a);
    r.passed = hj.passed() && mu.passed();
    r.lines.push_back("hom-jacobi: " + pass_word(hj.passed()) + "; multiplicative: " + pass_word(mu.passed()) +
                      "; regular: " + (reg ? "true" : "false"));
    for (const auto* c : {&hj, &mu})
        if (!c->passed())
            r.lines.push_back(c->summary());
    r.data = Json{{"hom_jacobi", report_json(hj)}, {"multiplicative", report_json(mu)}, {"regular", reg}};
    return r;
}

Representation checked_representation(const Algebra& a, const RepresentationData& d) {
    Representation rep = with_context("--rep", [&] { return attach(d, a); });
    auto check = check_representation(rep);
    if (!check.passed())
        throw CheckFailure("not a representation: " +
                           (check.twist.passed() ? check.bracket.summary() : check.twist.summary()));
    return rep;
}

Reply cmd_cohomology(const std::string& alg, const std::string& rep_path, bool representatives) {
    Algebra a = load_algebra(alg, "--algebra");
    Representation rep = checked_representation(a, load_representation(rep_path, "--rep"));
    H2Result h = compute_H2(rep);
    Reply r;
    r.lines.push_back("dim Z2=" + std::to_string(h.z2.dim()) + " dim B2=" + std::to_string(h.b2.dim()) +
                      " dim H2=" + std::to_string(h.dim()));
    r.lines.push_back("dim C1=" + std::to_string(h.c1.dim()) + " dim C2=" + std::to_string(h.c2.dim()));
    r.data = Json{{"dim_C1", h.c1.dim()}, {"dim_C2", h.c2.dim()}, {"dim_Z2", h.z2.dim()},
                  {"dim_B2", h.b2.dim()}, {"dim_H2", h.dim()}};
    if (representatives) {
        Json reps = Json::array();
        auto rs = h.representatives();
        for (std::size_t k = 0; k < rs.size(); ++k) {
            r.lines.push_back("representative " + std::to_string(k + 1) + ": " + cochain_text(rs[k]));
            reps.push_back(cochain_to_json(rs[k]));
        }
        r.data["representatives"] = reps;
    }
    return r;
}

Reply cmd_extend(const std::string& alg, const std::string& rep_path, const std::string& cocycle,
                 const std::string& output) {
    Algebra a = load_algebra(alg, "--algebra");
    Representation rep = checked_representation(a, load_representation(rep_path, "--rep"));
    Multilinear theta = load_cochain(cocycle, "--cocycle");
    Algebra m = build_extension(rep, theta);
    Reply r;
    r.lines.push_back("extension of dim " + std::to_string(m.dim()));
    Document d{"algebra", format_version, algebra_to_json(m)};
    write_or_print(output, d, r);
    r.data = Json{{"algebra", d.payload}};
    return r;
}

Reply cmd_equivalent(const std::string& alg, const std::string& rep_path, const std::string& t1,
                     const std::string& t2) {
    Algebra a = load_algebra(alg, "--algebra");
    Representation rep = checked_representation(a, load_representation(rep_path, "--rep"));
    Multilinear th1 = load_cochain(t1, "--theta1");
    Multilinear th2 = load_cochain(t2, "--theta2");
    auto res = extensions_equivalent(rep, th1, th2);
    Reply r;
    r.passed = res.equivalent;
    r.data["equivalent"] = res.equivalent;
    if (res.equivalent) {
        r.lines.push_back("equivalent: yes");
        r.lines.push_back("witness h: " + cochain_text(*res.witness) + " (d1 h = theta1 - theta2)");
        r.data["witness"] = cochain_to_json(*res.witness);
    } else {
        r.lines.push_back("equivalent: no (theta1 - theta2 is not a coboundary)");
    }
    return r;
}

Reply cmd_metric_verify(const std::string& path) {
    MetricAlgebra m = with_context("metric verify " + path,
                                   [&] { return metric_from_json(load_document(path, "metric-algebra").payload); });
    auto rep = check_metric(m);
    auto hj = check_hom_jacobi(m.algebra());
    auto mc = metric_criterion(m);
    auto dual = center_derived_duality(m);
    Reply r;
    r.passed = rep.passed() && hj.passed() && rep.coadjoint.passed();
    r.lines.push_back("invariance: " + pass_word(rep.invariance.passed()) + "; hom-invariance: " +
                      pass_word(rep.hom_invariance.passed()) + "; hom-jacobi: " + pass_word(hj.passed()) +
                      "; coadjoint: " + pass_word(rep.coadjoint.passed()));
    r.lines.push_back("gamma symmetric: " + pass_word(mc.gamma_symmetric.passed()) +
                      "; dr3 gamma = 0: " + pass_word(mc.dr3_gamma.passed()));
    if (dual.applicable)
        r.lines.push_back(std::string("center = [J,J]^perp: ") + (dual.holds() ? "true" : "false") + " (dim Z=" +
                          std::to_string(dual.center.dim()) + ", dim [J,J]^perp=" +
                          std::to_string(dual.derived_perp.dim()) + ")");
    else
        r.lines.push_back("center = [J,J]^perp: not checked (form is not invariant)");
    for (const auto* c : {&rep.invariance, &rep.hom_invariance, &hj, &rep.coadjoint, &mc.gamma_symmetric,
                          &mc.dr3_gamma})
        if (!c->passed())
            r.lines.push_back(c->summary());
    r.data = Json{{"invariance", report_json(rep.invariance)},
                  {"hom_invariance", report_json(rep.hom_invariance)},
                  {"hom_jacobi", report_json(hj)},
                  {"coadjoint", report_json(rep.coadjoint)},
                  {"gamma_symmetric", report_json(mc.gamma_symmetric)},
                  {"dr3_gamma", report_json(mc.dr3_gamma)},
                  {"center_equals_derived_perp", dual.applicable ? Json(dual.holds()) : Json(nullptr)}};
    return r;
}

struct QuadraticSpec {
    QuadraticRepresentation q;
    Multilinear theta;
    ScalarForm gamma;
    std::optional<Multilinear> tau;
    std::optional<ScalarForm> sigma;
};

QuadraticSpec load_quadratic_spec(const std::string& path) {
    return with_context(path, [&] {
        Json p = load_document(path, "quadratic-spec").payload;
        Algebra a = algebra_from_json(p["algebra"], "payload.algebra");
        auto d = representation_data_from_json(p["representation"], "payload.representation");
        QuadraticSpec s{attach_quadratic(d, a), Multilinear(2, a.dim(), d.beta.rows()), make_form(3, a.dim()), {}, {}};
        auto get = [&](const char* key, std::size_t degree, std::size_t vdim) -> std::optional<Multilinear> {
            if (!p.contains(key))
                return std::nullopt;
            Multilinear f = cochain_from_json(p[key], std::string("payload.") + key);
            if (f.degree() != degree || f.dim() != a.dim() || f.vdim() != vdim)
                throw SchemaError(std::string("payload.") + key + ": expected degree " + std::to_string(degree) +
                                  ", dim " + std::to_string(a.dim()) + ", vdim " + std::to_string(vdim));
            return f;
        };
        std::size_t m = d.beta.rows();
        if (auto f = get("theta", 2, m))
            s.theta = *f;
        if (auto f = get("gamma", 3, 1))
            s.gamma = *f;
        s.tau = get("tau", 1, m);
        s.sigma = get("sigma", 2, 1);
        return s;
    });
}

Reply cmd_quadratic(const std::string& action, const std::string& path, const std::string& output) {
    QuadraticSpec s = load_quadratic_spec(path);
    Reply r;
    if (action == "d2q") {
        auto c = d2Q(s.q, {s.theta, s.gamma});
        r.passed = c.first.is_zero() && c.second.is_zero();
        r.lines.push_back("d2Q first component: " + std::string(c.first.is_zero() ? "zero" : "nonzero"));
        r.lines.push_back("d2Q second component: " + std::string(c.second.is_zero() ? "zero" : "nonzero"));
        if (!c.first.is_zero())
            r.lines.push_back("first: " + cochain_text(c.first));
        if (!c.second.is_zero())
            r.lines.push_back("second: " + cochain_text(c.second));
        auto identity = check_twofold_identity(s.q, s.theta, s.gamma);
        r.lines.push_back("twofold identity at every t: " + pass_word(identity.passed()));
        r.data = Json{{"first", cochain_to_json(c.first)},
                      {"second", cochain_to_json(c.second)},
                      {"twofold_identity", report_json(identity)}};
    } else if (action == "h2q") {
        auto h = compute_H2Q(s.q);
        r.lines.push_back("dim H2(J,V)=" + std::to_string(h.theta.dim()) + "; zero sector: dim cocycles=" +
                          std::to_string(h.gamma_cocycles.dim()) + " dim coboundaries=" +
                          std::to_string(h.gamma_coboundaries.dim()) + " dim quotient=" +
                          std::to_string(h.zero_sector.dim()));
        Json fibers = Json::array();
        for (std::size_t k = 0; k < h.fibers.size(); ++k) {
            const auto& f = h.fibers[k];
            std::string line = "fiber " + std::to_string(k + 1) + " theta " + cochain_text(f.theta) + ": ";
            Json jf{{"theta", cochain_to_json(f.theta)}, {"liftable", f.liftable}};
            if (f.liftable) {
                line += "liftable";
                if (f.dim)
                    line += ", dim " + std::to_string(*f.dim);
                jf["gamma"] = cochain_to_json(*f.gamma);
                if (f.dim)
                    jf["dim"] = *f.dim;
            } else {
                line += "obstructed";
            }
            r.lines.push_back(line);
            fibers.push_back(jf);
        }
        r.data = Json{{"dim_H2", h.theta.dim()},
                      {"zero_sector_dim", h.zero_sector.dim()},
                      {"gamma_cocycles_dim", h.gamma_cocycles.dim()},
                      {"gamma_coboundaries_dim", h.gamma_coboundaries.dim()},
                      {"fibers", fibers}};
    } else if (action == "twofold") {
        MetricAlgebra m = build_twofold(s.q, s.theta, s.gamma);
        std::size_t n = s.q.algebra().dim();
        Document d{"metric-algebra", format_version,
                   metric_to_json(m, {{"J", n}, {"a", s.q.vdim()}, {"J*", n}})};
        r.lines.push_back("twofold extension of dim " + std::to_string(m.dim()) + ": metric checks pass");
        write_or_print(output, d, r);
        r.data = Json{{"metric_algebra", d.payload}};
    } else {
        if (!s.tau || !s.sigma)
            throw InvalidInput(path + ": equivmap needs 'tau' and 'sigma' in the payload");
        auto eq = twofold_equivalence_map(s.q, {s.theta, s.gamma}, {*s.tau, *s.sigma});
        MetricAlgebra from = build_twofold(s.q, eq.target.theta, eq.target.gamma);
        MetricAlgebra to = build_twofold(s.q, s.theta, s.gamma);
        auto hom = check_homomorphism(from.algebra(), to.algebra(), eq.phi);
        bool isometry = eq.phi.transpose() * to.form() * eq.phi == from.form();
        r.passed = hom.passed() && isometry;
        r.lines.push_back("target theta: " + cochain_text(eq.target.theta));
        r.lines.push_back("target gamma: " + cochain_text(eq.target.gamma));
        r.lines.push_back("phi = " + matrix_text(eq.phi));
        r.lines.push_back("homomorphism: " + pass_word(hom.passed()) + "; isometry: " + pass_word(isometry));
        if (!hom.passed())
            r.lines.push_back(hom.summary());
        r.data = Json{{"phi", matrix_to_json(eq.phi)},
                      {"theta", cochain_to_json(eq.target.theta)},
                      {"gamma", cochain_to_json(eq.target.gamma)},
                      {"homomorphism", report_json(hom)},
                      {"isometry", isometry}};
    }
    return r;
}

std::string invariants_text(const Invariants& inv) {
    return inv.to_string();
}

Reply cmd_catalog(const std::string& action, const std::string& name, const std::vector<std::string>& params,
                  const std::string& grid_text, std::size_t dim, const std::string& output) {
    Reply r;
    std::vector<Scalar> grid = grid_text.empty() ? default_grid() : parse_grid(grid_text);
    if (action == "list") {
        Json entries = Json::array();
        for (const auto& e : catalog_list()) {
            std::string ps;
            for (const auto& p : e.parameters)
                ps += (ps.empty() ? "" : ",") + p;
            r.lines.push_back(e.name + " (dim " + std::to_string(e.dim) + (ps.empty() ? "" : "; " + ps) + ")");
            Json cs = Json::array();
            for (const auto& c : e.constraints) {
                r.lines.push_back("  " + c.to_string());
                cs.push_back(c.to_string());
            }
            entries.push_back(Json{{"name", e.name}, {"dim", e.dim}, {"parameters", e.parameters},
                                   {"known_constraints", cs}});
        }
        r.data["entries"] = entries;
    } else if (action == "instantiate") {
        Algebra a = instantiate(name, parse_params(params));
        Document d{"algebra", format_version, algebra_to_json(a)};
        write_or_print(output, d, r);
        r.data = Json{{"algebra", d.payload}};
    } else if (action == "verify") {
        std::vector<EntryVerification> vs;
        if (params.empty())
            vs = verify_entry_sweep(name, grid);
        else
            vs.push_back(verify_entry(name, parse_params(params)));
        Json points = Json::array();
        std::size_t failing = 0;
        for (const auto& v : vs) {
            std::string at;
            for (const auto& [k, x] : v.point)
                at += (at.empty() ? "" : ", ") + k + "=" + to_string(x);
            if (!v.passed())
                ++failing;
            if (vs.size() == 1 || !v.passed())
                r.lines.push_back((at.empty() ? "" : "at " + at + ": ") + "hom-jacobi: " +
                                  pass_word(v.hom_jacobi.passed()) + "; multiplicative: " +
                                  pass_word(v.multiplicative.passed()) + "; regular: " +
                                  (v.regular ? "true" : "false") + (v.admissible ? "" : " (outside stated domain)"));
            for (const auto& line : v.residual_lines)
                r.lines.push_back("  " + line);
            Json jp = Json::object();
            for (const auto& [k, x] : v.point)
                jp[k] = to_string(x);
            points.push_back(Json{{"point", jp},
                                  {"admissible", v.admissible},
                                  {"hom_jacobi", report_json(v.hom_jacobi)},
                                  {"multiplicative", report_json(v.multiplicative)},
                                  {"regular", v.regular},
                                  {"residuals", v.residual_lines}});
        }
        if (vs.size() > 1)
            r.lines.push_back(std::to_string(vs.size() - failing) + " of " + std::to_string(vs.size()) +
                              " grid points pass");
        r.passed = failing == 0;
        r.data = Json{{"entry", find_entry(name).name}, {"points", points}};
    } else if (action == "separation") {
        auto rep = invariant_separation(grid);
        Json ns = Json::array();
        for (const auto& [x, y] : rep.not_separated) {
            r.lines.push_back("not separated by invariants: " + x + " / " + y);
            ns.push_back(Json::array({x, y}));
        }
        r.lines.push_back(std::to_string(rep.separated.size()) + " pairs separated, " +
                          std::to_string(rep.not_separated.size()) + " not separated by invariants");
        r.data = Json{{"separated", rep.separated.size()}, {"not_separated", ns}};
    } else {
        auto cov = catalog_coverage(dim, grid);
        Json items = Json::array();
        for (const auto& c : cov) {
            r.lines.push_back(c.name + ": " + (c.matched_by.empty() ? "not reached" : "matched by " + c.matched_by.front()));
            items.push_back(Json{{"name", c.name}, {"matched_by", c.matched_by}});
        }
        r.data["coverage"] = items;
    }
    return r;
}

Reply cmd_classify(std::size_t dim, const std::string& grid_text, const std::string& twist, std::size_t vdim,
                   bool trace) {
    std::vector<Scalar> grid = grid_text.empty() ? default_grid() : parse_grid(grid_text);
    std::vector<std::pair<TwistShape, std::size_t>> runs;
    auto shape_of = [](const std::string& t) {
        if (t == "diagonal")
            return TwistShape::diagonal;
        if (t == "jordan")
            return TwistShape::jordan;
        return TwistShape::full_jordan;
    };
    std::vector<std::string> shapes = twist.empty() ? (dim == 2 ? std::vector<std::string>{"diagonal", "jordan"}
                                                                : std::vector<std::string>{"diagonal", "jordan",
                                                                                           "full-jordan"})
                                                    : std::vector<std::string>{twist};
    for (const auto& s : shapes) {
        if (dim == 2 || s == "full-jordan")
            runs.emplace_back(shape_of(s), 1);
        else if (vdim != 0)
            runs.emplace_back(shape_of(s), vdim);
        else {
            runs.emplace_back(shape_of(s), 1);
            runs.emplace_back(shape_of(s), 2);
        }
    }
    Reply r;
    Json outputs = Json::array();
    Json traces = Json::array();
    std::vector<Invariants> seen;
    std::vector<ClassifyOutput> kept;
    for (const auto& [shape, v] : runs) {
        auto res = classify(dim, shape, v, grid);
        for (const auto& o : res.outputs) {
            bool dup = std::find(seen.begin(), seen.end(), o.invariants) != seen.end();
            if (dup) {
                traces.push_back("possibly isomorphic to an earlier output: " + o.provenance);
                continue;
            }
            seen.push_back(o.invariants);
            kept.push_back(o);
            std::string matches;
            for (const auto& m : o.matches)
                matches += (matches.empty() ? "" : ", ") + m;
            r.lines.push_back("output " + std::to_string(outputs.size() + 1) + ": " + o.provenance);
            r.lines.push_back("  invariants: " + invariants_text(o.invariants));
            r.lines.push_back("  matches: " + (matches.empty() ? std::string("none") : matches));
            outputs.push_back(Json{{"provenance", o.provenance},
                                   {"algebra", algebra_to_json(o.algebra)},
                                   {"invariants", invariants_text(o.invariants)},
                                   {"matches", o.matches}});
        }
        for (const auto& t : res.trace)
            traces.push_back(t);
    }
    auto families = group_families(kept);
    Json fam = Json::array();
    for (const auto& f : families) {
        Json idx = Json::array();
        std::string list;
        for (auto k : f.outputs) {
            idx.push_back(k + 1);
            list += (list.empty() ? "" : ",") + std::to_string(k + 1);
        }
        r.lines.push_back("family " + (f.entry.empty() ? std::string("unmatched") : f.entry) + ": outputs " + list);
        fam.push_back(Json{{"entry", f.entry}, {"outputs", idx}});
    }
    r.lines.push_back(std::to_string(outputs.size()) + " outputs up to invariants, " +
                      std::to_string(families.size()) + " families");
    if (trace)
        for (const auto& t : traces)
            r.lines.push_back("trace: " + t.get<std::string>());
    r.data = Json{{"outputs", outputs}, {"families", fam}, {"trace", traces}};
    return r;
}

int emit(const std::string& command, const Reply& r, bool json, std::ostream& out) {
    if (json) {
        Document d{"report", format_version,
                   Json{{"command", command}, {"passed", r.passed}, {"lines", r.lines}, {"data", r.data}}};
        out << emit_document(d);
    } else {
        for (const auto& l : r.lines)
            out << l << "\n";
    }
    return r.passed ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hom-Jacobi-Jordan algebras over the rationals: identity checks, cohomology, extensions, "
                 "metric structures and the low-dimensional catalog.",
                 "hjj"};
    app.footer("Files are JSON documents {\"kind\", \"version\": \"1\", \"payload\"}. Rationals are strings such as "
               "\"3\" or \"-1/2\". Matrices are arrays of rows; column j of a twist or action matrix is the image of "
               "basis vector j. Exit codes: 0 all checks pass, 1 a checked property fails, 2 usage or input error.");
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit a JSON report document instead of text");

    std::string file, alg, rep, cocycle, theta1, theta2, output, grid, twist, name, action;
    std::vector<std::string> params;
    bool representatives = false, trace = false;
    std::size_t dim = 0, vdim = 0;

    auto* verify = app.add_subcommand("verify", "Check Hom-Jacobi, multiplicativity and regularity");
    verify->add_option("algebra", file, "Algebra document")->required();

    auto* coh = app.add_subcommand("cohomology", "Dimensions of Z2, B2 and H2");
    coh->add_option("--algebra", alg, "Algebra document")->required();
    coh->add_option("--rep", rep, "Representation document")->required();
    coh->add_flag("--representatives", representatives, "Print class representatives");

    auto* ext = app.add_subcommand("extend", "Build the abelian extension of a 2-cocycle");
    ext->add_option("--algebra", alg, "Algebra document")->required();
    ext->add_option("--rep", rep, "Representation document")->required();
    ext->add_option("--cocycle", cocycle, "Cochain document")->required();
    ext->add_option("-o,--output", output, "Output file for the algebra document");

    auto* eqv = app.add_subcommand("equivalent", "Decide whether two extensions are equivalent");
    eqv->add_option("--algebra", alg, "Algebra document")->required();
    eqv->add_option("--rep", rep, "Representation document")->required();
    eqv->add_option("--theta1", theta1, "First cocycle")->required();
    eqv->add_option("--theta2", theta2, "Second cocycle")->required();

    auto* metric = app.add_subcommand("metric", "Metric algebra checks");
    metric->require_subcommand(1);
    auto* mverify = metric->add_subcommand("verify", "Invariance, Hom-invariance and the gamma criterion");
    mverify->add_option("file", file, "Metric-algebra document")->required();

    auto* quad = app.add_subcommand("quadratic", "Quadratic cohomology and twofold extensions");
    quad->add_option("action", action, "d2q, h2q, twofold or equivmap")
        ->required()
        ->check(CLI::IsMember({"d2q", "h2q", "twofold", "equivmap"}));
    quad->add_option("spec", file, "Quadratic-spec document")->required();
    quad->add_option("-o,--output", output, "Output file for the twofold extension");

    auto* cat = app.add_subcommand("catalog", "The catalog of low-dimensional families");
    cat->add_option("action", action, "list, instantiate, verify, separation or coverage")
        ->required()
        ->check(CLI::IsMember({"list", "instantiate", "verify", "separation", "coverage"}));
    cat->add_option("name", name, "Entry name, e.g. J^{10}_{1,2}");
    cat->add_option("--params", params, "Parameter values, e.g. a=2,b=3")->delimiter(',');
    cat->add_option("--grid", grid, "Comma-separated sample grid (default -2,-1,1,2,3,1/2 or HJJ_GRID)");
    cat->add_option("--dim", dim, "Dimension for coverage")->check(CLI::IsMember({2, 3}));
    cat->add_option("-o,--output", output, "Output file for instantiate");

    auto* cls = app.add_subcommand("classify", "Bootstrapping search for low-dimensional algebras");
    cls->add_option("--dim", dim, "Target dimension")->required()->check(CLI::IsMember({2, 3}));
    cls->add_option("--grid", grid, "Comma-separated sample grid (default -2,-1,1,2,3,1/2 or HJJ_GRID)");
    cls->add_option("--twist", twist, "Twist shape")->check(CLI::IsMember({"diagonal", "jordan", "full-jordan"}));
    cls->add_option("--vdim", vdim, "Dimension of the extending module")->check(CLI::IsMember({1, 2}));
    cls->add_flag("--trace", trace, "Include the search trace");

    std::vector<std::string> argv_store{"hjj"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (e.get_name() == "CallForAllHelp" ? app.help("", CLI::AppFormatMode::All) : app.help());
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify)
            return emit("verify", cmd_verify(file), json, out);
        if (*coh)
            return emit("cohomology", cmd_cohomology(alg, rep, representatives), json, out);
        if (*ext)
            return emit("extend", cmd_extend(alg, rep, cocycle, output), json, out);
        if (*eqv)
            return emit("equivalent", cmd_equivalent(alg, rep, theta1, theta2), json, out);
        if (*metric)
            return emit("metric verify", cmd_metric_verify(file), json, out);
        if (*quad)
            return emit("quadratic " + action, cmd_quadratic(action, file, output), json, out);
        if (*cat) {
            if ((action == "instantiate" || action == "verify") && name.empty()) {
                err << "error: catalog " << action << " needs an entry name\n";
                return 2;
            }
            if (action == "coverage" && dim == 0) {
                err << "error: catalog coverage needs --dim\n";
                return 2;
            }
            return emit("catalog " + action, cmd_catalog(action, name, params, grid, dim, output), json, out);
        }
        if (*cls)
            return emit("classify", cmd_classify(dim, grid, twist, vdim, trace), json, out);
    } catch (const CheckFailure& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const InvalidCocycle& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const InvalidRepresentation& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionFailure& e) {
        err << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace hjj
