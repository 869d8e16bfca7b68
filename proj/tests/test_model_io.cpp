#include "kstab/catalog.hpp"
#include "kstab/error.hpp"
#include "kstab/model_io.hpp"
#include "kstab/report.hpp"

#include "doctest.h"

using namespace kstab;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_model(text, "m.json");
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

const char* kChain = R"({
  "schema": "kstab/1",
  "kind": "chain",
  "name": "toy",
  "cmax": "1/28",
  "components": [
    {"name": "C", "coefficient": {"const": "1/2", "slope": "0"}},
    {"name": "L", "coefficient": {"const": "0", "slope": "6"}}
  ],
  "centers": [
    {"id": 1, "name": "E", "on": [], "mults": {"C": 2, "L": 1}},
    {"id": 2, "on": [1], "mults": {"C": 1}}
  ]
})";

}  // namespace

TEST_CASE("export and re-ingest reproduces every catalog variant") {
    for (const auto& e : builtin_catalog()) {
        for (const auto& v : e.variants) {
            CAPTURE(e.id);
            CAPTURE(v.name);
            const auto text = export_model(e, v);
            const auto back = parse_model(text, e.id + ".json");
            CHECK(back.name == e.id);
            CHECK(back.variant == v.name);
            CHECK(back.cmax == e.cmax);
            CHECK(model_json(back).dump(2) + "\n" == text);
            CHECK(payload_facts(back.payload, *back.cmax) == payload_facts(v.payload, e.cmax));
        }
    }
}

TEST_CASE("a hand-written chain file") {
    const auto m = parse_model(kChain);
    const auto& ch = std::get<BlowupChain>(m.payload);
    const auto ds = chain_discrepancies(ch);
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].exceptional == "E");
    CHECK(ds[0].value.str() == "1-6c");
    CHECK(ds[1].exceptional == "E2");
    CHECK(ds[1].value.str() == "3/2-6c");
    CHECK(m.cmax == Rational(1, 28));
}

TEST_CASE("malformed JSON reports its line") {
    const std::string text = "{\n  \"schema\": \"kstab/1\",\n  \"kind\": \"chain\"\n  \"name\": \"x\"\n}\n";
    const auto msg = error_of(text);
    CHECK(msg.find("ParseError") == 0);
    CHECK(msg.find("m.json:4:") != std::string::npos);
}

TEST_CASE("schema errors report line and pointer") {
    std::string text = kChain;
    auto msg = error_of(std::string(text).replace(text.find("\"1/2\""), 5, "0.5"));
    CHECK(msg.find("SchemaError") == 0);
    CHECK(msg.find("m.json:7: /components/0/coefficient/const") != std::string::npos);

    msg = error_of(std::string(text).replace(text.find("\"mults\": {\"C\": 1}"), 17, "\"mult\": {\"C\": 1}"));
    CHECK(msg.find("m.json:12: /centers/1/mult: unknown key") != std::string::npos);

    msg = error_of(std::string(text).replace(text.find("kstab/1"), 7, "kstab/2"));
    CHECK(msg.find("m.json:2: /schema") != std::string::npos);

    msg = error_of(std::string(text).replace(text.find("\"chain\""), 7, "\"plane\""));
    CHECK(msg.find("m.json:3: /kind: unknown kind") != std::string::npos);

    msg = error_of(std::string(text).replace(text.find("\"id\": 2"), 7, "\"id\": 3"));
    CHECK(msg.find("MalformedChain") != std::string::npos);

    msg = error_of(std::string(text).replace(text.find("\"name\": \"toy\","), 14, ""));
    CHECK(msg.find("/: missing key \"name\"") != std::string::npos);

    msg = error_of(R"({"schema": "kstab/1", "kind": "chain", "name": "a", "name": "b", "components": [], "centers": []})");
    CHECK(msg.find("duplicate key") != std::string::npos);
}

TEST_CASE("contraction file with a wrong rank") {
    const std::string text = R"({
  "schema": "kstab/1", "kind": "contraction", "name": "bad", "n": 3,
  "roots": [
    {"name": "R", "class": {"H": 0, "E": [1, -1]}}
  ]
})";
    const auto msg = error_of(text);
    CHECK(msg.find("m.json:4: /roots/0/class/E: expected 3 coefficients") != std::string::npos);
}

TEST_CASE("standalone class") {
    CHECK(parse_class(R"({"H": 1, "E": [1, 1, 0]})").str() == "H+E1+E2");
    CHECK_THROWS_AS(parse_class(R"({"H": 1})"), Error);
    CHECK_THROWS_AS(parse_class("[1, 2]"), Error);
}
