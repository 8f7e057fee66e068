#include "doctest.h"

#include "realforms/json_codec.hpp"
#include "realforms/lcg.hpp"
#include "realforms/schema_validate.hpp"
#include "realforms/verify_suites.hpp"

using namespace realforms;

TEST_CASE("matrix JSON round trip") {
    Lcg64 rng(73);
    auto m = random_matrix<GaussRational>(rng, 2, 3);
    Json j = matrix_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["scalar"] == "gauss");
    auto back = matrix_from_json_as<GaussRational>(j);
    CHECK(back == m);
    CHECK(matrix_to_json(back) == j);

    auto q = random_matrix<Quaternion>(rng, 2, 2);
    CHECK(matrix_from_json_as<Quaternion>(matrix_to_json(q)) == q);

    ExactMatrix<CycloElement> zm(1, 1, primitive_unity_root(3));
    Json jz = matrix_to_json(zm);
    CHECK(jz["scalar"] == "cyclo");
    auto vz = matrix_from_json(jz);
    CHECK(std::get<ExactMatrix<CycloElement>>(vz) == zm);

    Json bad = j;
    bad["scalar"] = "float";
    CHECK_THROWS_AS(matrix_from_json(bad), std::invalid_argument);
}

TEST_CASE("form and cocycle JSON round trip") {
    FormSpec f = QuadraticForm(signature_matrix<Rational>(3, 2));
    Json jf = form_to_json(f);
    CHECK(jf["kind"] == "quadratic");
    CHECK(equivalent(form_from_json(jf), f));

    auto x = rep_cocycle(RepFamily::special_unitary, 4, 2, 0);
    Json jx = cocycle_to_json(x);
    auto back = cocycle_from_json(jx);
    CHECK(back.B == x.B);
    CHECK(back.action.tag == x.action.tag);
    CHECK(back.action.p == x.action.p);
    CHECK(verify_cocycle(back));
}

TEST_CASE("descriptor JSON round trip") {
    for (const auto& g : {make_sl(3), make_sl_h(2), make_su(5, 2), make_so(5, 1),
                          make_so(4, 2), make_sp(3), make_su_h(2, 1),
                          make_su_h_anti(2), make_g2(kG2Split), make_f4(1),
                          make_e8(0)}) {
        Json j = descriptor_to_json(g);
        CHECK(descriptor_from_json(j) == g);
    }
    Json bad{{"variant", "su"}, {"n", 4}, {"p", 9}};
    CHECK_THROWS_AS(descriptor_from_json(bad), std::invalid_argument);
}

TEST_CASE("classification JSON shape") {
    Json j = classification_to_json(classify(make_su(5, 1)));
    CHECK(j["count"] == 3);
    CHECK(j["classes"].size() == 3);
    CHECK(j["classes"][0]["label"] == "1");
    CHECK(j["classes"][0]["group"]["variant"] == "su");
}

TEST_CASE("text rendering is deterministic and lossless-ish") {
    Json j = classification_to_json(classify(make_g2(kG2Compact)));
    std::string once = render_text(j);
    std::string twice = render_text(j);
    CHECK(once == twice);
    CHECK(once.find("count = 2") != std::string::npos);
    CHECK(once.find("classes[1].group.form = \"split\"") != std::string::npos);
}

TEST_CASE("schema validator subset") {
    Json schema = Json::parse(R"({
        "definitions": {
            "point": {
                "type": "object",
                "required": ["x"],
                "properties": {
                    "x": {"type": "integer", "minimum": 0},
                    "tag": {"enum": ["a", "b"]}
                },
                "additionalProperties": false
            }
        },
        "type": "object",
        "required": ["items"],
        "properties": {
            "items": {"type": "array", "items": {"$ref": "#/definitions/point"}},
            "kind": {"const": "demo"}
        }
    })");
    Json good{{"items", Json::array({Json{{"x", 1}}, Json{{"x", 0}, {"tag", "a"}}})},
              {"kind", "demo"}};
    CHECK(schema_ok(schema, good));

    Json missing{{"items", Json::array({Json::object()})}};
    CHECK(!schema_ok(schema, missing));

    Json negative{{"items", Json::array({Json{{"x", -1}}})}};
    CHECK(!schema_ok(schema, negative));

    Json extra{{"items", Json::array({Json{{"x", 1}, {"y", 2}}})}};
    CHECK(!schema_ok(schema, extra));

    Json bad_enum{{"items", Json::array({Json{{"x", 1}, {"tag", "z"}}})}};
    CHECK(!schema_ok(schema, bad_enum));

    Json bad_const{{"items", Json::array()}, {"kind", "other"}};
    CHECK(!schema_ok(schema, bad_const));
}

TEST_CASE("verification suites all pass at small sizes") {
    VerifyOptions opts{0, 4, 8};
    auto results = run_suites({}, opts);
    CHECK(results.size() == suite_registry().size());
    for (const auto& r : results) {
        INFO(r.name, ": ", r.first_counterexample);
        CHECK(r.failures == 0);
        CHECK(r.cases > 0);
    }
    CHECK_THROWS_AS(run_suites({"no-such-suite"}, opts), std::invalid_argument);
}
