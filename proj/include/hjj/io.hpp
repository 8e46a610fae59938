#pragma once

#include "hjj/metric.hpp"
#include "hjj/representation.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace hjj {

using Json = nlohmann::json;

/// Exchange document: {"kind": ..., "version": "1", "payload": {...}}.
/// Rationals are strings "p" or "p/q"; matrices are arrays of rows and
/// column j of a twist matrix is the image of basis vector j.
struct Document {
    std::string kind;
    std::string version = "1";
    Json payload;
    friend bool operator==(const Document&, const Document&) = default;
};

inline constexpr const char* format_version = "1";

/// Throws ParseError on malformed JSON and SchemaError on a bad field.  The
/// payload is validated against its kind and stored in canonical form.
Document parse_document(const std::string& text);
/// Sorted keys, two-space indent, trailing newline.
std::string emit_document(const Document& d);
/// Throws InvalidInput when the file cannot be read.
Document load_document(const std::string& path);
/// Like load_document, plus SchemaError unless the kind matches.
Document load_document(const std::string& path, const std::string& kind);
void save_document(const std::string& path, const Document& d);

Json scalar_to_json(const Scalar& x);
Json vector_to_json(const Vector& v);
Json matrix_to_json(const Matrix& m);
Scalar scalar_from_json(const Json& j, const std::string& field);
Vector vector_from_json(const Json& j, const std::string& field);
Matrix matrix_from_json(const Json& j, const std::string& field);

Json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const Json& j, const std::string& field = "payload");

/// Representation data before it is attached to an algebra.
struct RepresentationData {
    std::vector<Matrix> rho;
    Matrix beta;
    std::optional<Matrix> form;
};

Json representation_to_json(const Representation& r, const std::optional<Matrix>& form = std::nullopt);
RepresentationData representation_data_from_json(const Json& j, const std::string& field = "payload");
/// Throws SchemaError when the number of rho matrices does not match the algebra.
Representation attach(const RepresentationData& d, const Algebra& a);
/// Throws SchemaError when the data has no form.
QuadraticRepresentation attach_quadratic(const RepresentationData& d, const Algebra& a);

/// Dense "values" in lexicographic tuple order; parsing also accepts sparse
/// symmetric "entries" with 1-based "args".
Json cochain_to_json(const Multilinear& f);
Multilinear cochain_from_json(const Json& j, const std::string& field = "payload");

struct Block {
    std::string name;
    std::size_t dim;
};

Json metric_to_json(const MetricAlgebra& m, const std::vector<Block>& blocks = {});
MetricAlgebra metric_from_json(const Json& j, const std::string& field = "payload");

}  // namespace hjj
