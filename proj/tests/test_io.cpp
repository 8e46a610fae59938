#include "doctest.h"
#include "support.hpp"

#include "hjj/errors.hpp"
#include "hjj/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace hjj;
using namespace hjj::testing;

namespace {

const char* minimal_algebra = R"({
  "kind": "algebra",
  "payload": {
    "alpha": [
      [
        "1"
      ]
    ],
    "bracket": [
      [
        [
          "0"
        ]
      ]
    ],
    "dim": 1,
    "labels": [
      "e1"
    ]
  },
  "version": "1"
}
)";

std::string wrap(const std::string& kind, const std::string& payload) {
    return R"({"kind": ")" + kind + R"(", "version": "1", "payload": )" + payload + "}";
}

std::string schema_message(const std::string& text) {
    try {
        parse_document(text);
    } catch (const SchemaError& e) {
        return e.what();
    }
    return "";
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("hjj_test_io_" + name)).string();
}

}  // namespace

TEST_CASE("minimal algebra round-trips byte-identically") {
    Document d = parse_document(minimal_algebra);
    CHECK(d.kind == "algebra");
    CHECK(d.version == "1");
    CHECK(emit_document(d) == minimal_algebra);
    CHECK(parse_document(emit_document(d)) == d);

    Document compact = parse_document(
        R"({"payload": {"dim": 1, "alpha": [["1"]], "bracket": [[["0"]]]}, "version": "1", "kind": "algebra"})");
    CHECK(emit_document(compact) == minimal_algebra);
}

TEST_CASE("rationals are reduced on emit") {
    Document d = parse_document(wrap("algebra", R"({"dim": 1, "alpha": [["4/6"]], "bracket": [[["-2/4"]]]})"));
    std::string text = emit_document(d);
    CHECK(text.find("\"2/3\"") != std::string::npos);
    CHECK(text.find("\"-1/2\"") != std::string::npos);
    CHECK(text.find("4/6") == std::string::npos);
    Algebra a = algebra_from_json(d.payload);
    CHECK(a.twist() == scalar_matrix(Scalar(2, 3)));

    CHECK(scalar_to_json(Scalar(6, 3)) == "2");
    CHECK(scalar_to_json(Scalar(-3, 9)) == "-1/3");
    CHECK(scalar_from_json("10/4", "x") == Scalar(5, 2));
}

TEST_CASE("float literals are rejected") {
    std::string msg = schema_message(wrap("algebra", R"({"dim": 1, "alpha": [[0.5]], "bracket": [[["0"]]]})"));
    CHECK(msg.find("rationals must be strings") != std::string::npos);
    CHECK(msg.find("payload.alpha") != std::string::npos);
    CHECK_THROWS_AS(scalar_from_json(Json(1), "x"), SchemaError);
    CHECK_THROWS_AS(scalar_from_json(Json("1/0"), "x"), SchemaError);
    CHECK_THROWS_AS(scalar_from_json(Json("one"), "x"), SchemaError);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_document("{\n  \"kind\": \"algebra\",\n  \"version\" \"1\"\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column > 1);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_document(""), ParseError);
    CHECK_THROWS_AS(parse_document("[1, 2"), ParseError);
}

TEST_CASE("schema errors name the offending field") {
    CHECK(schema_message(R"({"kind": "banana", "version": "1", "payload": {}})").find("kind") == 0);
    CHECK(schema_message(R"({"kind": "algebra", "version": "2", "payload": {}})").find("version") == 0);
    CHECK(schema_message(R"({"kind": "algebra", "version": "1", "payload": {}, "extra": 1})").find("extra") == 0);
    CHECK(schema_message(R"({"version": "1", "payload": {}})").find("kind") != std::string::npos);
    CHECK(schema_message(wrap("algebra", R"({"alpha": [["1"]], "bracket": [[["0"]]]})")).find("payload.dim") == 0);
    CHECK(schema_message(wrap("algebra", R"({"dim": 2, "alpha": [["1"]], "bracket": [[["0"]]]})"))
              .find("payload.alpha") == 0);
    CHECK(schema_message(wrap("algebra", R"({"dim": 2, "alpha": [["1","0"],["0","1"]],
        "bracket": [[["1","0"],["0","1"]],[["0","0"],["0","0"]]]})"))
              .find("symmetric") != std::string::npos);
    CHECK(schema_message(wrap("algebra", R"({"dim": 1, "alpha": [["1"]], "products": [{"i": 2, "j": 1, "value": ["1"]}]})"))
              .find("payload.products") == 0);
    CHECK(schema_message(wrap("representation", R"({"vdim": 1, "beta": [["1"]]})")).find("payload.rho") == 0);
    CHECK(schema_message(wrap("cochain", R"({"degree": 5, "dim": 1, "vdim": 1, "values": []})"))
              .find("payload.degree") == 0);
    CHECK(schema_message(wrap("cochain", R"({"degree": 1, "dim": 2, "vdim": 1, "values": [["1"]]})"))
              .find("payload.values") == 0);
    CHECK(schema_message(wrap("extension-spec", R"({"algebra": {"dim": 1, "alpha": [["2"]], "bracket": [[["0"]]]},
        "representation": {"vdim": 1, "rho": [[["0"]]], "beta": [["4"]]}})"))
              .find("payload.cocycle") == 0);
}

TEST_CASE("products and bracket forms agree") {
    Document sparse = parse_document(
        wrap("algebra", R"({"dim": 2, "alpha": [["2","0"],["0","4"]], "products": [{"i": 1, "j": 1, "value": ["0","1"]}]})"));
    Algebra a = algebra_from_json(sparse.payload);
    CHECK(a.structure() == j111(2).structure());
    CHECK(a.twist() == j111(2).twist());
    Document dense{"algebra", "1", algebra_to_json(a)};
    CHECK(parse_document(emit_document(dense)) == sparse);
}

TEST_CASE("cochain entries are symmetric and match dense values") {
    Document d = parse_document(
        wrap("cochain", R"({"degree": 2, "dim": 2, "vdim": 1, "entries": [{"args": [2, 1], "value": ["4/6"]}]})"));
    Multilinear f = cochain_from_json(d.payload);
    CHECK(f == sym2(2, 1, {{{0, 1}, {Scalar(2, 3)}}}));
    CHECK(f.is_symmetric());
    CHECK(cochain_from_json(cochain_to_json(f)) == f);
    CHECK(d.payload["values"].size() == 4);
}

TEST_CASE("representations attach to their algebra") {
    Algebra a = j111(2);
    auto d = representation_data_from_json(load_document(std::string(HJJ_TEST_DATA) + "/beta4_rho0.json").payload);
    Representation r = attach(d, a);
    CHECK(r.vdim() == 1);
    CHECK(r.beta() == scalar_matrix(4));
    CHECK_THROWS_AS(attach(d, abelian(scalar_matrix(1))), SchemaError);
    CHECK_THROWS_AS(attach_quadratic(d, a), SchemaError);
}

TEST_CASE("metric algebra documents keep blocks") {
    MetricAlgebra m(abelian(Matrix::identity(2)), Matrix::identity(2));
    Document d{"metric-algebra", "1", metric_to_json(m, {{"J", 1}, {"J*", 1}})};
    Document back = parse_document(emit_document(d));
    CHECK(back == d);
    MetricAlgebra m2 = metric_from_json(back.payload);
    CHECK(m2.form() == m.form());
    CHECK(back.payload["blocks"].size() == 2);
}

TEST_CASE("files load with kind checks") {
    Document d = load_document(std::string(HJJ_TEST_DATA) + "/j111_a2.json", "algebra");
    CHECK(algebra_from_json(d.payload).structure() == j111(2).structure());
    CHECK_THROWS_AS(load_document(std::string(HJJ_TEST_DATA) + "/j111_a2.json", "representation"), SchemaError);
    CHECK_THROWS_AS(load_document("/nonexistent/hjj.json"), InvalidInput);

    std::string path = temp_path("roundtrip.json");
    save_document(path, d);
    CHECK(load_document(path) == d);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == emit_document(d));
    std::remove(path.c_str());
}

TEST_CASE("random documents round-trip") {
    Rng rng(401);
    for (int it = 0; it < 200; ++it) {
        Instance inst = random_representation(rng);
        const Representation& r = inst.rep;
        std::vector<Document> docs{
            {"algebra", "1", algebra_to_json(r.algebra())},
            {"representation", "1", representation_to_json(r)},
            {"cochain", "1", cochain_to_json(random_cochain2(r, rng))},
        };
        for (const auto& d : docs) {
            std::string text = emit_document(d);
            Document back = parse_document(text);
            CHECK(back == d);
            CHECK(emit_document(back) == text);
        }
        Algebra a = algebra_from_json(docs[0].payload);
        CHECK(a.structure() == r.algebra().structure());
        CHECK(a.twist() == r.algebra().twist());
        Representation r2 = attach(representation_data_from_json(docs[1].payload), a);
        CHECK(r2.beta() == r.beta());
        for (std::size_t i = 0; i < a.dim(); ++i)
            CHECK(r2.rho(i) == r.rho(i));
    }
}
