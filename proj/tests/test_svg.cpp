#include <catch2/catch_amalgamated.hpp>

#include "shapecx/fixtures.hpp"
#include "shapecx/svg.hpp"

using namespace shapecx;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
        ++n;
    return n;
}

}   // namespace

TEST_CASE("bare triangle renders one path and three vertex dots")
{
    ComplexPtr  tri = delaunay({{0, 0}, {2, 0}, {0, 2}});
    std::string svg = render_svg(*tri);

    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count_of(svg, "<path") == 1);
    CHECK(count_of(svg, "<circle") == 3);
    CHECK(count_of(svg, "fill-opacity") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("nerve overlay fills the star and marks the nucleus")
{
    ShapeComplex hex = fixtures::hexagon_shape_complex();
    int          center = -1;
    for (int v = 0; v < hex.complex->vertex_count(); ++v)
        if (hex.complex->vertices[static_cast<std::size_t>(v)]
            == Point2{0, 0})
            center = v;
    REQUIRE(center >= 0);

    RenderOptions opts;
    opts.nerve_nuclei = {center};
    std::string svg   = render_svg(*hex.complex, opts);

    // six stroked triangles plus six filled star triangles
    CHECK(count_of(svg, "<path") == 12);
    CHECK(count_of(svg, "fill-opacity=\"0.5\"") == 6);
    // one open nucleus ring on top of the seven vertex dots
    CHECK(count_of(svg, "fill=\"#ffffff\"") == 1);
    CHECK(count_of(svg, "<circle") == 8);
}

TEST_CASE("shape outline and cluster highlight are separate layers")
{
    ShapeComplex  sq = build_shape_complex(fixtures::unit_square_complex(),
                                           fixtures::unit_square_shape());
    RenderOptions opts;
    SimplePolygon shape = fixtures::unit_square_shape();
    opts.shape          = &shape;
    opts.mnc_triangles  = {0};
    std::string svg     = render_svg(*sq.complex, opts);

    CHECK(count_of(svg, "#ffd54d") == 1);
    CHECK(svg.find("stroke=\"#000000\"") != std::string::npos);

    // a hole becomes a second subpath of the outline
    SimplePolygon ann = fixtures::annulus_shape();
    RenderOptions with_hole;
    with_hole.shape = &ann;
    ComplexPtr band = fixtures::annulus_band8_complex();
    std::string hole_svg = render_svg(*band, with_hole);
    bool        found    = false;
    for (std::size_t at = hole_svg.find("<path");
         at != std::string::npos; at = hole_svg.find("<path", at + 1))
        if (count_of(hole_svg.substr(at, hole_svg.find('>', at) - at), "M")
            == 2)
            found = true;
    CHECK(found);
}

TEST_CASE("rendering is deterministic and validates its inputs")
{
    ComplexPtr hex = fixtures::hexagon_shape_complex().complex;
    CHECK(render_svg(*hex) == render_svg(*hex));

    RenderOptions bad_nucleus;
    bad_nucleus.nerve_nuclei = {99};
    CHECK_THROWS_AS(render_svg(*hex, bad_nucleus), Error);

    RenderOptions bad_triangle;
    bad_triangle.mnc_triangles = {-1};
    CHECK_THROWS_AS(render_svg(*hex, bad_triangle), Error);

    ComplexPtr empty = make_complex({}, {});
    CHECK_THROWS_AS(render_svg(*empty), Error);
}
