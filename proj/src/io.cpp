#include "hjj/io.hpp"

#include "hjj/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hjj {

namespace {

const std::set<std::string> known_kinds{"algebra",        "representation", "cochain", "metric-algebra",
                                        "extension-spec", "quadratic-spec", "report"};

std::string at_index(const std::string& field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

std::string member(const std::string& field, const std::string& key) {
    return field + "." + key;
}

const Json& require(const Json& j, const std::string& key, const std::string& field) {
    if (!j.is_object())
        throw SchemaError(field + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(member(field, key) + ": missing");
    return *it;
}

const Json& require_array(const Json& j, const std::string& field) {
    if (!j.is_array())
        throw SchemaError(field + ": expected an array");
    return j;
}

std::size_t size_from_json(const Json& j, const std::string& field) {
    if (!j.is_number_unsigned())
        throw SchemaError(field + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const std::string& field) {
    if (!j.is_string())
        throw SchemaError(field + ": expected a string");
    return j.get<std::string>();
}

void check_length(const Vector& v, std::size_t n, const std::string& field) {
    if (v.size() != n)
        throw SchemaError(field + ": expected length " + std::to_string(n) + ", got " + std::to_string(v.size()));
}

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& field) {
    if (m.rows() != rows || m.cols() != cols)
        throw SchemaError(field + ": expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
}

std::vector<Block> blocks_from_json(const Json& j, const std::string& field) {
    std::vector<Block> out;
    require_array(j, field);
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string f = at_index(field, i);
        out.push_back({string_from_json(require(j[i], "name", f), member(f, "name")),
                       size_from_json(require(j[i], "dim", f), member(f, "dim"))});
    }
    return out;
}

Json canonical_payload(const std::string& kind, const Json& p) {
    if (kind == "algebra")
        return algebra_to_json(algebra_from_json(p));
    if (kind == "representation") {
        auto d = representation_data_from_json(p);
        Json out = p;
        out["beta"] = matrix_to_json(d.beta);
        Json rho = Json::array();
        for (const auto& m : d.rho)
            rho.push_back(matrix_to_json(m));
        out["rho"] = rho;
        if (d.form)
            out["form"] = matrix_to_json(*d.form);
        return out;
    }
    if (kind == "cochain")
        return cochain_to_json(cochain_from_json(p));
    if (kind == "metric-algebra") {
        std::vector<Block> blocks;
        if (p.is_object() && p.contains("blocks"))
            blocks = blocks_from_json(p["blocks"], "payload.blocks");
        return metric_to_json(metric_from_json(p), blocks);
    }
    if (kind == "extension-spec" || kind == "quadratic-spec") {
        Json out = Json::object();
        Algebra a = algebra_from_json(require(p, "algebra", "payload"), "payload.algebra");
        out["algebra"] = algebra_to_json(a);
        auto d = representation_data_from_json(require(p, "representation", "payload"), "payload.representation");
        Representation r = attach(d, a);
        out["representation"] = representation_to_json(r, d.form);
        std::vector<std::string> cochains = kind == "extension-spec"
                                                ? std::vector<std::string>{"cocycle"}
                                                : std::vector<std::string>{"theta", "gamma", "tau", "sigma"};
        for (const auto& key : cochains)
            if (p.contains(key))
                out[key] = cochain_to_json(cochain_from_json(p[key], member("payload", key)));
        if (kind == "extension-spec" && !p.contains("cocycle"))
            throw SchemaError("payload.cocycle: missing");
        return out;
    }
    if (!p.is_object())
        throw SchemaError("payload: expected an object");
    return p;
}

}  // namespace

Json scalar_to_json(const Scalar& x) {
    return to_string(x);
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(scalar_to_json(x));
    return out;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(vector_to_json(m.row(r)));
    return out;
}

Scalar scalar_from_json(const Json& j, const std::string& field) {
    if (j.is_number())
        throw SchemaError(field + ": rationals must be strings");
    if (!j.is_string())
        throw SchemaError(field + ": expected a rational string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const InvalidInput& e) {
        throw SchemaError(field + ": " + e.what());
    }
}

Vector vector_from_json(const Json& j, const std::string& field) {
    require_array(j, field);
    Vector out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(scalar_from_json(j[i], at_index(field, i)));
    return out;
}

Matrix matrix_from_json(const Json& j, const std::string& field) {
    require_array(j, field);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(vector_from_json(j[i], at_index(field, i)));
        if (rows.back().size() != rows.front().size())
            throw SchemaError(at_index(field, i) + ": rows have different lengths");
    }
    return Matrix::from_rows(rows);
}

Json algebra_to_json(const Algebra& a) {
    std::size_t n = a.dim();
    Json bracket = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(vector_to_json(a.bracket(i, j)));
        bracket.push_back(row);
    }
    Json out{{"dim", n}, {"alpha", matrix_to_json(a.twist())}, {"bracket", bracket}};
    if (!a.labels().empty())
        out["labels"] = a.labels();
    return out;
}

Algebra algebra_from_json(const Json& j, const std::string& field) {
    std::size_t n = size_from_json(require(j, "dim", field), member(field, "dim"));
    Matrix alpha = matrix_from_json(require(j, "alpha", field), member(field, "alpha"));
    check_shape(alpha, n, n, member(field, "alpha"));
    Multilinear br(2, n, n);
    if (j.contains("bracket")) {
        std::string f = member(field, "bracket");
        const Json& b = require_array(j["bracket"], f);
        if (b.size() != n)
            throw SchemaError(f + ": expected " + std::to_string(n) + " rows");
        for (std::size_t r = 0; r < n; ++r) {
            std::string fr = at_index(f, r);
            require_array(b[r], fr);
            if (b[r].size() != n)
                throw SchemaError(fr + ": expected " + std::to_string(n) + " entries");
            for (std::size_t c = 0; c < n; ++c) {
                Vector v = vector_from_json(b[r][c], at_index(fr, c));
                check_length(v, n, at_index(fr, c));
                br.set({r, c}, v);
            }
        }
    } else if (j.contains("products")) {
        std::string f = member(field, "products");
        const Json& ps = require_array(j["products"], f);
        for (std::size_t k = 0; k < ps.size(); ++k) {
            std::string fk = at_index(f, k);
            std::size_t i = size_from_json(require(ps[k], "i", fk), member(fk, "i"));
            std::size_t jj = size_from_json(require(ps[k], "j", fk), member(fk, "j"));
            if (i < 1 || i > n || jj < 1 || jj > n)
                throw SchemaError(fk + ": indices are 1-based and at most dim");
            Vector v = vector_from_json(require(ps[k], "value", fk), member(fk, "value"));
            check_length(v, n, member(fk, "value"));
            br.set_symmetric({i - 1, jj - 1}, v);
        }
    } else {
        throw SchemaError(member(field, "bracket") + ": missing");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        std::string f = member(field, "labels");
        require_array(j["labels"], f);
        for (std::size_t i = 0; i < j["labels"].size(); ++i)
            labels.push_back(string_from_json(j["labels"][i], at_index(f, i)));
        if (labels.size() != n)
            throw SchemaError(f + ": expected " + std::to_string(n) + " labels");
    }
    if (!br.is_symmetric())
        throw SchemaError(member(field, "bracket") + ": bracket must be symmetric");
    return Algebra(br, alpha, labels);
}

Json representation_to_json(const Representation& r, const std::optional<Matrix>& form) {
    Json rho = Json::array();
    for (const auto& m : r.rho_matrices())
        rho.push_back(matrix_to_json(m));
    Json out{{"vdim", r.vdim()}, {"rho", rho}, {"beta", matrix_to_json(r.beta())}};
    if (form)
        out["form"] = matrix_to_json(*form);
    return out;
}

RepresentationData representation_data_from_json(const Json& j, const std::string& field) {
    std::size_t m = size_from_json(require(j, "vdim", field), member(field, "vdim"));
    RepresentationData d;
    d.beta = matrix_from_json(require(j, "beta", field), member(field, "beta"));
    check_shape(d.beta, m, m, member(field, "beta"));
    std::string f = member(field, "rho");
    const Json& rho = require_array(require(j, "rho", field), f);
    for (std::size_t i = 0; i < rho.size(); ++i) {
        Matrix r = matrix_from_json(rho[i], at_index(f, i));
        if (m == 0)
            r = Matrix(0, 0);
        check_shape(r, m, m, at_index(f, i));
        d.rho.push_back(r);
    }
    if (m == 0)
        d.beta = Matrix(0, 0);
    if (j.contains("form")) {
        Matrix form = matrix_from_json(j["form"], member(field, "form"));
        if (m == 0)
            form = Matrix(0, 0);
        check_shape(form, m, m, member(field, "form"));
        d.form = form;
    }
    return d;
}

Representation attach(const RepresentationData& d, const Algebra& a) {
    if (d.rho.size() != a.dim())
        throw SchemaError("representation.rho: expected " + std::to_string(a.dim()) + " matrices, one per basis vector");
    return Representation(a, d.rho, d.beta);
}

QuadraticRepresentation attach_quadratic(const RepresentationData& d, const Algebra& a) {
    if (!d.form)
        throw SchemaError("representation.form: missing");
    return QuadraticRepresentation(attach(d, a), *d.form);
}

Json cochain_to_json(const Multilinear& f) {
    Json values = Json::array();
    for (const auto& t : f.tuples())
        values.push_back(vector_to_json(f.value(t)));
    return Json{{"degree", f.degree()}, {"dim", f.dim()}, {"vdim", f.vdim()}, {"values", values}};
}

Multilinear cochain_from_json(const Json& j, const std::string& field) {
    std::size_t deg = size_from_json(require(j, "degree", field), member(field, "degree"));
    std::size_t n = size_from_json(require(j, "dim", field), member(field, "dim"));
    std::size_t m = size_from_json(require(j, "vdim", field), member(field, "vdim"));
    if (deg < 1 || deg > 4)
        throw SchemaError(member(field, "degree") + ": expected 1 to 4");
    Multilinear f(deg, n, m);
    if (j.contains("values")) {
        std::string fv = member(field, "values");
        const Json& vs = require_array(j["values"], fv);
        auto tuples = f.tuples();
        if (vs.size() != tuples.size())
            throw SchemaError(fv + ": expected " + std::to_string(tuples.size()) + " values");
        for (std::size_t k = 0; k < tuples.size(); ++k) {
            Vector v = vector_from_json(vs[k], at_index(fv, k));
            check_length(v, m, at_index(fv, k));
            f.set(tuples[k], v);
        }
    } else if (j.contains("entries")) {
        std::string fe = member(field, "entries");
        const Json& es = require_array(j["entries"], fe);
        for (std::size_t k = 0; k < es.size(); ++k) {
            std::string fk = at_index(fe, k);
            const Json& args = require_array(require(es[k], "args", fk), member(fk, "args"));
            if (args.size() != deg)
                throw SchemaError(member(fk, "args") + ": expected " + std::to_string(deg) + " indices");
            std::vector<std::size_t> idx;
            for (std::size_t a = 0; a < args.size(); ++a) {
                std::size_t i = size_from_json(args[a], at_index(member(fk, "args"), a));
                if (i < 1 || i > n)
                    throw SchemaError(at_index(member(fk, "args"), a) + ": indices are 1-based and at most dim");
                idx.push_back(i - 1);
            }
            Vector v = vector_from_json(require(es[k], "value", fk), member(fk, "value"));
            check_length(v, m, member(fk, "value"));
            f.set_symmetric(idx, v);
        }
    } else {
        throw SchemaError(member(field, "values") + ": missing");
    }
    return f;
}

Json metric_to_json(const MetricAlgebra& m, const std::vector<Block>& blocks) {
    Json out = algebra_to_json(m.algebra());
    out["form"] = matrix_to_json(m.form());
    if (!blocks.empty()) {
        Json bs = Json::array();
        for (const auto& b : blocks)
            bs.push_back(Json{{"name", b.name}, {"dim", b.dim}});
        out["blocks"] = bs;
    }
    return out;
}

MetricAlgebra metric_from_json(const Json& j, const std::string& field) {
    Algebra a = algebra_from_json(j, field);
    Matrix form = matrix_from_json(require(j, "form", field), member(field, "form"));
    check_shape(form, a.dim(), a.dim(), member(field, "form"));
    if (j.contains("blocks")) {
        std::size_t total = 0;
        for (const auto& b : blocks_from_json(j["blocks"], member(field, "blocks")))
            total += b.dim;
        if (total != a.dim())
            throw SchemaError(member(field, "blocks") + ": block dimensions must add up to dim");
    }
    return MetricAlgebra(a, form);
}

Document parse_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        throw ParseError(pos == std::string::npos ? msg : msg.substr(pos), line, column);
    }
    Document d;
    d.kind = string_from_json(require(j, "kind", "document"), "kind");
    if (!known_kinds.count(d.kind))
        throw SchemaError("kind: unknown kind '" + d.kind + "'");
    d.version = string_from_json(require(j, "version", "document"), "version");
    if (d.version != format_version)
        throw SchemaError("version: unsupported version '" + d.version + "'");
    for (const auto& [key, value] : j.items())
        if (key != "kind" && key != "version" && key != "payload")
            throw SchemaError(key + ": unknown field");
    try {
        d.payload = canonical_payload(d.kind, require(j, "payload", "document"));
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(std::string("payload: ") + e.what());
    }
    return d;
}

std::string emit_document(const Document& d) {
    Json j{{"kind", d.kind}, {"version", d.version}, {"payload", d.payload}};
    return j.dump(2) + "\n";
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

Document load_document(const std::string& path, const std::string& kind) {
    Document d = load_document(path);
    if (d.kind != kind)
        throw SchemaError(path + ": expected a '" + kind + "' document, got '" + d.kind + "'");
    return d;
}

void save_document(const std::string& path, const Document& d) {
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write file '" + path + "'");
    out << emit_document(d);
}

}  // namespace hjj
