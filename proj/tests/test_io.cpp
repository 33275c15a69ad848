#include <catch2/catch_amalgamated.hpp>

#include "shapecx/fixtures.hpp"
#include "shapecx/io.hpp"

using namespace shapecx;

TEST_CASE("shape documents round-trip every exact coordinate")
{
    ShapeDocument doc;
    doc.shape                     = fixtures::annulus_shape();
    doc.shape.outer[1]            = Point2{Rational(13, 3), 0};
    doc.sampling.boundary_step    = 1;
    doc.sampling.interior_spacing = Rational(1, 2);
    doc.sampling.margin           = Rational(1, 4);
    doc.features                  = {Feature::AREA, Feature::PERIMETER};
    doc.quantum                   = Rational(1, 100);

    std::string   text = shape_to_text(doc);
    ShapeDocument back = parse_shape(text);

    CHECK(back.shape.outer == doc.shape.outer);
    CHECK(back.shape.holes == doc.shape.holes);
    CHECK(back.sampling.boundary_step == doc.sampling.boundary_step);
    CHECK(back.sampling.interior_spacing == doc.sampling.interior_spacing);
    CHECK(back.sampling.margin == doc.sampling.margin);
    CHECK(back.features == doc.features);
    REQUIRE(back.quantum.has_value());
    CHECK(*back.quantum == Rational(1, 100));

    CHECK(shape_to_text(back) == text);
}

TEST_CASE("shape parsing accepts both decimal and fraction spellings")
{
    std::string text = R"({
      "schema_version": 1,
      "outer": [["0", "0"], ["1/3", "0"], ["0.25", "0.5"]]
    })";
    ShapeDocument doc = parse_shape(text);
    CHECK(doc.shape.outer[1].x == Rational(1, 3));
    CHECK(doc.shape.outer[2] == Point2{Rational(1, 4), Rational(1, 2)});

    CHECK(doc.features == std::vector<Feature>{Feature::AREA});
    CHECK_FALSE(doc.quantum.has_value());
    CHECK(doc.sampling.boundary_step == 0);
}

TEST_CASE("shape parsing rejects malformed documents with field context")
{
    auto code_of = [](const std::string& text) {
        try {
            parse_shape(text);
        } catch (const Error& e) {
            return std::string(e.what());   // "CODE: where: detail"
        }
        return std::string("no error");
    };

    CHECK(code_of("{ nope").find("SCHEMA_ERROR") == 0);
    CHECK(code_of(R"({"schema_version": 2, "outer": []})")
              .find("schema_version")
          != std::string::npos);
    CHECK(code_of(R"({"outer": [["0","0"],["1","0"],["0","1"]]})")
              .find("schema_version")
          != std::string::npos);

    std::string missing = code_of(R"({"schema_version": 1})");
    CHECK(missing.find("SCHEMA_ERROR") == 0);
    CHECK(missing.find("outer") != std::string::npos);

    // coordinates must be strings, not JSON numbers
    std::string raw = code_of(
        R"({"schema_version": 1, "outer": [[0, 0], ["1","0"], ["0","1"]]})");
    CHECK(raw.find("SCHEMA_ERROR") == 0);
    CHECK(raw.find("strings") != std::string::npos);

    std::string bad = code_of(
        R"({"schema_version": 1,
            "outer": [["0","0"], ["abc","0"], ["0","1"]]})");
    CHECK(bad.find("NUMBER_PARSE_ERROR") == 0);
    CHECK(bad.find("outer[1][0]") != std::string::npos);

    // self-crossing ring: structurally fine, geometrically invalid
    std::string bowtie = code_of(
        R"({"schema_version": 1,
            "outer": [["0","0"], ["1","1"], ["1","0"], ["0","1"]]})");
    CHECK(bowtie.find("POLYGON_INVALID") == 0);

    CHECK(code_of(R"({"schema_version": 1,
                      "outer": [["0","0"],["1","0"],["0","1"]],
                      "features": []})")
              .find("features")
          != std::string::npos);
    CHECK(code_of(R"({"schema_version": 1,
                      "outer": [["0","0"],["1","0"],["0","1"]],
                      "features": ["volume"]})")
              .find("SCHEMA_ERROR")
          == 0);
}

TEST_CASE("complex documents round-trip content and labels")
{
    ShapeComplex sc = build_shape_complex(
        fixtures::unit_square_complex(), fixtures::unit_square_shape());

    std::string text = complex_to_text(*sc.complex);
    ComplexPtr  back = parse_complex(text);

    CHECK(same_content(*back, *sc.complex));
    CHECK(complex_to_text(*back) == text);

    // labels are always serialized, so they survive even when all default
    ComplexPtr plain = fixtures::annulus_band8_complex();
    CHECK(same_content(*parse_complex(complex_to_text(*plain)), *plain));
}

TEST_CASE("complex parsing rejects structural and geometric violations")
{
    CHECK_THROWS_AS(parse_complex(R"({"schema_version": 1,
        "vertices": [["0","0"],["1","0"],["0","1"]],
        "triangles": [[0, 1, "2"]]})"),
                    Error);
    CHECK_THROWS_AS(parse_complex(R"({"schema_version": 1,
        "vertices": [["0","0"],["1","0"],["0","1"]],
        "triangles": [[0, 1, 3]]})"),
                    Error);   // index out of range
    CHECK_THROWS_AS(parse_complex(R"({"schema_version": 1,
        "vertices": [["0","0"],["1","0"],["0","1"]],
        "triangles": [[0, 2, 1]]})"),
                    Error);   // clockwise
    CHECK_THROWS_AS(parse_complex(R"({"schema_version": 1,
        "vertices": [["0","0"],["1","0"],["0","1"]],
        "triangles": [[0, 1, 2]],
        "vertex_labels": ["inside", "unlabeled", "unlabeled"]})"),
                    Error);   // unknown label
}

TEST_CASE("subcomplex documents carry their host")
{
    ComplexPtr hex = fixtures::hexagon_shape_complex().complex;
    SubComplex s{hex, {0, 2, 4}, {}};
    s.vertex_ids.insert(1);

    std::string        text = subcomplex_to_text(s);
    SubComplexDocument doc  = parse_subcomplex(text);

    CHECK(same_content(*doc.host, *hex));
    CHECK(doc.triangle_ids == s.triangle_ids);
    CHECK(doc.vertex_ids == s.vertex_ids);
    CHECK(subcomplex_to_text(doc.bind()) == text);

    // out of range ids are caught at parse time
    Json root            = Json::parse(text);
    root["triangle_ids"] = Json::array({99});
    CHECK_THROWS_AS(parse_subcomplex(root.dump()), Error);
}

TEST_CASE("nerve reports serialize the full overlap structure")
{
    ShapeNerveComplex snc =
        shape_nerve_complex(fixtures::hexagon_shape_complex());
    std::string text = nerves_to_text(snc);
    CHECK(nerves_to_text(snc) == text);   // deterministic

    Json root = Json::parse(text);
    CHECK(root["schema_version"] == 1);
    CHECK(root["nerves"].size() == 7);
    CHECK(root["overlap_connected"] == true);
    CHECK(root["common_triangles"].empty());
    for (const Json& nerve : root["nerves"]) {
        CHECK(nerve.contains("nucleus"));
        CHECK(!nerve["triangle_ids"].empty());
    }
}

TEST_CASE("proximity settings come from the document with host defaults")
{
    ComplexPtr    hex = fixtures::hexagon_shape_complex().complex;
    ShapeDocument doc;
    doc.shape    = fixtures::hexagon_shape();
    doc.features = {Feature::PERIMETER, Feature::MIN_ANGLE};

    ProximityConfig cfg = config_from(doc, *hex);
    CHECK(cfg.features == doc.features);
    CHECK(cfg.quantum == default_config(*hex).quantum);

    doc.quantum          = Rational(3, 7);
    ProximityConfig over = config_from(doc, *hex);
    CHECK(over.quantum == Rational(3, 7));
}
